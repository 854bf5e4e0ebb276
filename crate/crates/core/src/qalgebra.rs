//! Exact arithmetic in `Z[z, 1/z, q, 1/q]` and in truncated `q`-series.
//!
//! [`LaurentPoly`] keeps its terms in a `BTreeMap` keyed by `(z_exp, q_exp)`
//! with nonzero big-integer coefficients, so two polynomials are equal iff
//! their maps are equal. Every constructor and operation re-establishes that
//! canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Sparse bivariate Laurent polynomial in `z` and `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff * z^z_exp * q^q_exp`.
    pub fn monomial(coeff: impl Into<BigInt>, z_exp: i64, q_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(z_exp, q_exp, coeff.into());
        p
    }

    /// `q^q_exp`.
    pub fn q_pow(q_exp: i64) -> Self {
        Self::monomial(1, 0, q_exp)
    }

    /// Builds a polynomial from `(z_exp, q_exp, coeff)` triples, merging repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut p = Self::zero();
        for (z, q, c) in terms {
            p.add_term(z, q, c.into());
        }
        p
    }

    /// z-free polynomial from `(q_exp, coeff)` pairs.
    pub fn from_q_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        Self::from_terms(terms.into_iter().map(|(q, c)| (0, q, c)))
    }

    pub fn add_term(&mut self, z_exp: i64, q_exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (z_exp, q_exp);
        let remove = match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                c.is_zero()
            }
            None => {
                self.terms.insert(key, coeff);
                false
            }
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `((z_exp, q_exp), coeff)` in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, z_exp: i64, q_exp: i64) -> BigInt {
        self.terms.get(&(z_exp, q_exp)).cloned().unwrap_or_default()
    }

    /// The single term of a monomial, if `self` is one.
    pub fn as_monomial(&self) -> Option<(i64, i64, &BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(&(z, q), c)| (z, q, c))
    }

    pub fn is_z_free(&self) -> bool {
        self.terms.keys().all(|&(z, _)| z == 0)
    }

    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, q)| q).min()
    }

    pub fn max_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, q)| q).max()
    }

    /// Multiplies by `z^dz q^dq`.
    pub fn shift(&self, dz: i64, dq: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&(z, q), c)| ((z + dz, q + dq), c.clone())).collect() }
    }

    /// Substitutes `q -> q^factor`.
    pub fn stretch_q(&self, factor: i64) -> Self {
        assert!(factor > 0, "q-stretch factor must be positive");
        Self { terms: self.terms.iter().map(|(&(z, q), c)| ((z, q * factor), c.clone())).collect() }
    }

    /// Sum of all coefficients, i.e. the value at `z = q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient list `[c_0, c_1, ...]` with a `z`-free, nonnegative support.
    pub fn q_coefficients(&self) -> Option<Vec<BigInt>> {
        if !self.is_z_free() || self.min_q_exp().is_some_and(|m| m < 0) {
            return None;
        }
        let top = match self.max_q_exp() {
            Some(t) => t as usize,
            None => return Some(Vec::new()),
        };
        let mut out = vec![BigInt::zero(); top + 1];
        for (&(_, q), c) in &self.terms {
            out[q as usize] = c.clone();
        }
        Some(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(z, q), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let bare = z == 0 && q == 0;
            if bare || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            let mut first = bare || !abs.is_one();
            for (name, e) in [("z", z), ("q", q)] {
                if e == 0 {
                    continue;
                }
                if first {
                    f.write_str("*")?;
                }
                first = true;
                if e == 1 {
                    f.write_str(name)?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&(z, q), c) in &rhs.terms {
            self.add_term(z, q, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(z, q), c) in &rhs.terms {
            out.add_term(z, q, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(za, qa), ca) in &self.terms {
            for (&(zb, qb), cb) in &rhs.terms {
                out.add_term(za + zb, qa + qb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    z: i64,
    q: i64,
    c: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self.terms.iter().map(|(&(z, q), c)| TermRepr { z, q, c: c.to_string() }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = t.c.parse().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(t.z, t.q, c);
        }
        Ok(p)
    }
}

/// A `z`-free power series in `q` known exactly through `q^cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: u32,
    coeffs: BTreeMap<u32, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(cap: u32) -> Self {
        Self { cap, coeffs: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<BigInt>, cap: u32) -> Self {
        let mut s = Self::zero(cap);
        s.add_coeff(0, c.into());
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in increasing exponent order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c q^exp`; contributions above the cap are discarded.
    pub fn add_coeff(&mut self, exp: u32, c: BigInt) {
        if exp > self.cap || c.is_zero() {
            return;
        }
        let remove = match self.coeffs.get_mut(&exp) {
            Some(v) => {
                *v += c;
                v.is_zero()
            }
            None => {
                self.coeffs.insert(exp, c);
                false
            }
        };
        if remove {
            self.coeffs.remove(&exp);
        }
    }

    /// Same series known only through `q^cap` (`cap` is clamped to the current cap).
    pub fn with_cap(&self, cap: u32) -> Self {
        let cap = cap.min(self.cap);
        Self { cap, coeffs: self.coeffs.range(..=cap).map(|(e, c)| (*e, c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.with_cap(other.cap);
        for (&e, c) in &other.coeffs {
            out.add_coeff(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { cap: self.cap, coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(cap);
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in other.coeffs.range(..=cap.saturating_sub(ea)) {
                if ea + eb <= cap {
                    out.add_coeff(ea + eb, ca * cb);
                }
            }
        }
        out
    }

    /// Multiplies by the polynomial `p`, which must be `z`-free with no negative
    /// `q` powers. The product is exact through `q^cap`.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self, Error> {
        let other = truncate(p, self.cap)?;
        Ok(self.mul(&other))
    }

    /// First exponent in `[0, window]` where `self` and `other` differ.
    pub fn first_mismatch(&self, other: &Self, window: u32) -> Option<u32> {
        let window = window.min(self.cap).min(other.cap);
        (0..=window).find(|&e| self.coeff(e) != other.coeff(e))
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_q_terms(self.coeffs.iter().map(|(&e, c)| (e as i64, c.clone())))
    }
}

/// Restricts `p` to `q^0 .. q^cap`. `p` must be `z`-free with no negative `q`-powers.
pub fn truncate(p: &LaurentPoly, cap: u32) -> Result<TruncatedSeries, Error> {
    let mut s = TruncatedSeries::zero(cap);
    for ((z, q), c) in p.terms() {
        if z != 0 {
            return Err(Error::NotZFree { z_exp: z });
        }
        if q < 0 {
            return Err(Error::NegativeQExponent { q_exp: q });
        }
        if q <= cap as i64 {
            s.add_coeff(q as u32, c.clone());
        }
    }
    Ok(s)
}

/// Gaussian coefficient `[n choose k]` in base `q^step`, by the Pascal rule
/// `[n,k] = [n-1,k-1] + q^(step*k) [n-1,k]`. Zero outside `0 <= k <= n`.
pub fn gaussian_binomial(n: u32, k: i64, step: u32) -> LaurentPoly {
    assert!(step > 0, "step must be positive");
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let k = k as usize;
    // row[j] holds [i, j] for the current i; j runs only up to k.
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::zero(); k + 1];
    row[0] = LaurentPoly::one();
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            let carried = row[j].shift(0, (step as i64) * j as i64);
            row[j] = &row[j - 1] + &carried;
        }
    }
    row.swap_remove(k)
}

/// `prod_{i=0}^{count-1} (1 + sign * z^z_exp * q^(q_offset + i*q_step))`.
pub fn factor_product(count: u32, sign: i8, z_exp: i64, q_offset: i64, q_step: i64) -> LaurentPoly {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    (0..count as i64).fold(LaurentPoly::one(), |acc, i| {
        let factor = LaurentPoly::one() + LaurentPoly::monomial(sign, z_exp, q_offset + i * q_step);
        &acc * &factor
    })
}

/// `(-1)^n q^(n^2) sum_{j=-n}^{n} (-1)^j q^(-j^2)`.
pub fn rhs_andrews(n: u32) -> LaurentPoly {
    let n = n as i64;
    let outer = if n % 2 == 0 { 1 } else { -1 };
    LaurentPoly::from_q_terms((-n..=n).map(|j| {
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        (n * n - j * j, outer * sign)
    }))
}
