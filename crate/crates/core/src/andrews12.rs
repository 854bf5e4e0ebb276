//! Andrews' identity on parity in partitions, in its polynomial form
//!
//! ```text
//! Σ_{k=0}^{n} (q^{n-k+1}; q)_{2k} / (q²; q²)_k · q^{C(n-k,2)}
//!     = (-1)^n q^{n²} Σ_{j=-n}^{n} (-1)^j q^{-j²}
//! ```
//!
//! The `k`-th summand is the signed weighted count of triples `(τ, λ, μ)` in
//! `P_{n,k}`. For `k ≤ n-2` a bijection
//! `P_{n,k} ∪ {2n-1}×P_{n-1,k-1} → P_{n-1,k-1} ∪ {2n-3}×P_{n-2,k}` is built
//! from a four-way classification; for `k ∈ {n-1, n}` a sign-reversing
//! involution on `P_{n,k} ∪ {2n-1}×P_{n-1,k-1}` with fixed set `P_{n-1,k-1}`
//! takes its place. Summing over `k` yields
//! `F_n + (q^{2n-1} - 1) F_{n-1} - q^{2n-3} F_{n-2} = 0`.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::partitions::{enum_distinct_range, enum_even_capped, staircase, Partition};
use crate::qalgebra::{rhs_andrews, truncate, LaurentPoly, TruncatedSeries};
use crate::telescope::{
    check_graded_bijection, check_sign_reversing_involution, params, Certificate, MarkedObject, Reason, Weighted,
};
use crate::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub tau: Partition,
    pub lambda: Partition,
    pub mu: Partition,
}

impl Triple {
    pub fn new(tau: Partition, lambda: Partition, mu: Partition) -> Self {
        Self { tau, lambda, mu }
    }

    pub fn size(&self) -> u32 {
        self.tau.weight() + self.lambda.weight() + self.mu.weight()
    }
}

impl Weighted for Triple {
    /// `(-1)^{ℓ(λ)} q^{|τ|+|λ|+|μ|}`.
    fn weight(&self) -> LaurentPoly {
        let sign = if self.lambda.len().is_multiple_of(2) { 1 } else { -1 };
        LaurentPoly::monomial(sign, 0, self.size() as i64)
    }

    fn q_degree(&self) -> i64 {
        self.size() as i64
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.tau, self.lambda, self.mu)
    }
}

pub type MarkedTriple = MarkedObject<Triple>;

/// Membership in `P_{n,k}`: `τ = staircase(n-k)`, `λ` distinct with parts in
/// `[n-k+1, n+k]`, `μ` even with `μ₁ ≤ 2k`.
pub fn in_p(n: i64, k: i64, t: &Triple) -> bool {
    if n < 0 || k < 0 || k > n {
        return false;
    }
    let (lo, hi) = ((n - k + 1) as u32, (n + k) as u32);
    t.tau == staircase((n - k) as u32)
        && t.lambda.is_distinct()
        && t.lambda.parts().iter().all(|&p| lo <= p && p <= hi)
        && t.mu.is_even()
        && t.mu.first() as i64 <= 2 * k
}

/// Visits every member of `P_{n,k}` with `|τ|+|λ|+|μ| ≤ cap`, as `(λ, μ)`
/// borrowed from shared lists (`τ` is fixed).
fn for_each_p(n: i64, k: i64, cap: u32, mut visit: impl FnMut(&Partition, &Partition)) {
    if n < 0 || k < 0 || k > n {
        return;
    }
    let tau_weight = staircase((n - k) as u32).weight();
    let Some(room) = cap.checked_sub(tau_weight) else {
        return;
    };
    let lambdas = enum_distinct_range((n - k + 1) as u32, (n + k) as u32);
    let mut mus = enum_even_capped(2 * k as u32, room);
    mus.sort_by_key(Partition::weight);
    for lambda in lambdas.iter().filter(|l| l.weight() <= room) {
        let left = room - lambda.weight();
        for mu in mus.iter().take_while(|m| m.weight() <= left) {
            visit(lambda, mu);
        }
    }
}

/// Members of `P_{n,k}` of size at most `cap`, canonically ordered. Empty for `k < 0` or `k > n`.
pub fn enum_p(n: i64, k: i64, cap: u32) -> Vec<Triple> {
    let tau = if 0 <= k && k <= n { staircase((n - k) as u32) } else { Partition::empty() };
    let mut out = Vec::new();
    for_each_p(n, k, cap, |lambda, mu| out.push(Triple::new(tau.clone(), lambda.clone(), mu.clone())));
    out.sort();
    out
}

/// Class of a member of `P_{n,k}` (`k ≥ 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassTag {
    /// `λ₁ ≤ n+k-2`, `μ₁ ≤ 2k-2`: the copy of `P_{n-1,k-1}`.
    Embedded,
    /// `λ₁ ≤ n+k-2`, `μ₁ = 2k`.
    A,
    /// Exactly one of `n+k`, `n+k-1` in `λ`.
    B,
    /// Both `n+k` and `n+k-1` in `λ`.
    C,
}

/// Class of a member of `P_{n-2,k}` (`k ≥ 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CodomainTag {
    /// Neither `n-k` nor `n-k-1` in `λ` (every part is at least `n-k+1`, or `λ = ∅`).
    APrime,
    /// Exactly one of `n-k`, `n-k-1` in `λ`.
    BPrime,
    /// Both, and `μ₁ = 2k`.
    CPrime,
    /// Both, and `μ₁ < 2k`.
    D,
}

fn membership_error(map: &'static str, n: i64, k: i64, object: impl fmt::Debug) -> Error {
    Error::OutsideDomain { map, params: format!("n={n} k={k}"), object: format!("{object:?}") }
}

pub fn classify(n: i64, k: i64, t: &Triple) -> Result<ClassTag, Error> {
    if k < 1 || !in_p(n, k, t) {
        return Err(membership_error("andrews-classify", n, k, t));
    }
    let top = (n + k) as u32;
    let (has_top, has_next) = (t.lambda.contains(top), t.lambda.contains(top - 1));
    Ok(match (has_top, has_next) {
        (true, true) => ClassTag::C,
        (true, false) | (false, true) => ClassTag::B,
        (false, false) if t.mu.first() as i64 == 2 * k => ClassTag::A,
        (false, false) => ClassTag::Embedded,
    })
}

/// Classifies `t ∈ P_{n-2,k}` against the images of the four domain classes.
pub fn classify_codomain(n: i64, k: i64, t: &Triple) -> Result<CodomainTag, Error> {
    if k < 1 || !in_p(n - 2, k, t) {
        return Err(membership_error("andrews-classify-codomain", n, k, t));
    }
    let low = (n - k) as u32;
    let (has_low, has_below) = (t.lambda.contains(low), t.lambda.contains(low - 1));
    Ok(match (has_low, has_below) {
        (true, true) if t.mu.first() as i64 == 2 * k => CodomainTag::CPrime,
        (true, true) => CodomainTag::D,
        (true, false) | (false, true) => CodomainTag::BPrime,
        (false, false) => CodomainTag::APrime,
    })
}

/// Which rule of `φ_{n,k}` applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PhiCase {
    /// `k = 0`: the lone staircase loses two rows.
    Staircase,
    /// Identity onto `P_{n-1,k-1}`.
    Embedded,
    A,
    B,
    C,
    /// Marked input `{2n-1}×P_{n-1,k-1}`.
    D,
}

fn drop_two_rows(tau: &Partition) -> Partition {
    tau.drop_rows(2).expect("staircase of length n-k >= 2")
}

/// One application of `φ_{n,k}` (`0 ≤ k ≤ n-2`), reporting which rule fired.
pub fn phi_step(n: i64, k: i64, x: &MarkedTriple) -> Result<(PhiCase, MarkedTriple), Error> {
    if n < 2 || k < 0 || k > n - 2 {
        return Err(Error::InvalidParams(format!("andrews phi needs 0 <= k <= n-2 (got n={n}, k={k})")));
    }
    let err = || membership_error("andrews-phi", n, k, x);
    let out_marker = 2 * n - 3;
    let t = &x.payload;

    if x.is_marked() {
        if x.marker != 2 * n - 1 || x.z_shift != 0 || !in_p(n - 1, k - 1, t) {
            return Err(err());
        }
        let (a, b) = ((n - k) as u32, (n - k - 1) as u32);
        let lambda = t.lambda.with_part(a).with_part(b);
        let image = Triple::new(drop_two_rows(&t.tau), lambda, t.mu.clone());
        return Ok((PhiCase::D, MarkedObject::marked(out_marker, image)));
    }
    if !in_p(n, k, t) {
        return Err(err());
    }
    if k == 0 {
        let image = Triple::new(drop_two_rows(&t.tau), Partition::empty(), Partition::empty());
        return Ok((PhiCase::Staircase, MarkedObject::marked(out_marker, image)));
    }
    let tau = drop_two_rows(&t.tau);
    let shift = 2 * k as u32;
    let top = (n + k) as u32;
    let (case, image) = match classify(n, k, t)? {
        ClassTag::Embedded => return Ok((PhiCase::Embedded, x.clone())),
        ClassTag::A => {
            let mu = t.mu.drop_rows(1).expect("μ₁ = 2k > 0");
            (PhiCase::A, Triple::new(tau, t.lambda.clone(), mu))
        }
        ClassTag::B => {
            let part = t.lambda.first();
            let lambda = t.lambda.without_part(part).expect("first part present").with_part(part - shift);
            (PhiCase::B, Triple::new(tau, lambda, t.mu.clone()))
        }
        ClassTag::C => {
            let lambda = t.lambda.without_part(top).and_then(|l| l.without_part(top - 1)).expect("both top parts");
            let lambda = lambda.with_part(top - shift).with_part(top - 1 - shift);
            (PhiCase::C, Triple::new(tau, lambda, t.mu.with_part(shift)))
        }
    };
    Ok((case, MarkedObject::marked(out_marker, image)))
}

pub fn phi(n: i64, k: i64, x: &MarkedTriple) -> Result<MarkedTriple, Error> {
    phi_step(n, k, x).map(|(_, image)| image)
}

/// The sign-reversing involution `I_{n,k}` for `n ≥ 2`, `k ∈ {n-1, n}`, on
/// `P_{n,k} ∪ {2n-1}×P_{n-1,k-1}`. The toggle part is `2k`: it moves between
/// `λ` and `μ` (the `λ`-copy first); failing that, a top part `2n-1` of `λ` is
/// exchanged with the marker.
pub fn involution(n: i64, k: i64, x: &MarkedTriple) -> Result<MarkedTriple, Error> {
    if n < 2 || (k != n && k != n - 1) {
        return Err(Error::InvalidParams(format!(
            "andrews involution needs n >= 2, k in {{n-1, n}} (got n={n}, k={k})"
        )));
    }
    let err = || membership_error("andrews-involution", n, k, x);
    let marker_part = (2 * n - 1) as u32;
    let toggle = 2 * k as u32;
    let t = &x.payload;

    if x.is_marked() {
        if x.marker != 2 * n - 1 || x.z_shift != 0 || !in_p(n - 1, k - 1, t) {
            return Err(err());
        }
        let image = Triple::new(t.tau.clone(), t.lambda.with_part(marker_part), t.mu.clone());
        return Ok(MarkedObject::plain(image));
    }
    if !in_p(n, k, t) {
        return Err(err());
    }
    if let Some(lambda) = t.lambda.without_part(toggle) {
        return Ok(MarkedObject::plain(Triple::new(t.tau.clone(), lambda, t.mu.with_part(toggle))));
    }
    if t.mu.first() == toggle {
        let mu = t.mu.drop_rows(1).expect("μ₁ = 2k > 0");
        return Ok(MarkedObject::plain(Triple::new(t.tau.clone(), t.lambda.with_part(toggle), mu)));
    }
    if t.lambda.first() == marker_part {
        let lambda = t.lambda.drop_rows(1).expect("λ₁ present");
        return Ok(MarkedObject::marked(2 * n - 1, Triple::new(t.tau.clone(), lambda, t.mu.clone())));
    }
    Ok(x.clone())
}

fn plain(v: Vec<Triple>) -> impl Iterator<Item = MarkedTriple> {
    v.into_iter().map(MarkedObject::plain)
}

fn marked_slice(marker: i64, n: i64, k: i64, cap: u32) -> Vec<MarkedTriple> {
    match u32::try_from(marker).ok().and_then(|m| cap.checked_sub(m)) {
        Some(room) => enum_p(n, k, room).into_iter().map(|t| MarkedObject::marked(marker, t)).collect(),
        None => Vec::new(),
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

/// `P_{n,k} ∪ {2n-1}×P_{n-1,k-1}`, every element of total weight at most `cap`.
pub fn domain_slice(n: i64, k: i64, cap: u32) -> Vec<MarkedTriple> {
    let mut v: Vec<_> = plain(enum_p(n, k, cap)).collect();
    v.extend(marked_slice(2 * n - 1, n - 1, k - 1, cap));
    sorted(v)
}

/// `P_{n-1,k-1} ∪ {2n-3}×P_{n-2,k}`, every element of total weight at most `cap`.
pub fn phi_codomain_slice(n: i64, k: i64, cap: u32) -> Vec<MarkedTriple> {
    let mut v: Vec<_> = plain(enum_p(n - 1, k - 1, cap)).collect();
    v.extend(marked_slice(2 * n - 3, n - 2, k, cap));
    sorted(v)
}

pub fn certify_phi(n: i64, k: i64, cap: u32) -> Result<Certificate, Error> {
    if n < 2 || k < 0 || k > n - 2 {
        return Err(Error::InvalidParams(format!("andrews phi needs 0 <= k <= n-2 (got n={n}, k={k})")));
    }
    let domain = domain_slice(n, k, cap);
    let codomain = phi_codomain_slice(n, k, cap);
    Ok(check_graded_bijection(
        "andrews-phi",
        params([("n", n), ("k", k)]),
        |x| phi(n, k, x),
        &domain,
        &codomain,
        Some(cap as i64),
    ))
}

pub fn certify_involution(n: i64, k: i64, cap: u32) -> Result<Certificate, Error> {
    if n < 2 || (k != n && k != n - 1) {
        return Err(Error::InvalidParams(format!(
            "andrews involution needs n >= 2, k in {{n-1, n}} (got n={n}, k={k})"
        )));
    }
    let domain = domain_slice(n, k, cap);
    let fixed: Vec<_> = plain(enum_p(n - 1, k - 1, cap)).collect();
    Ok(check_sign_reversing_involution(
        "andrews-involution",
        params([("n", n), ("k", k)]),
        |x| involution(n, k, x),
        &domain,
        &fixed,
        Some(cap as i64),
    ))
}

/// A step of the cancelation orbit: level `(n, k)`, rule applied, resulting object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStep {
    pub n: i64,
    pub k: i64,
    pub case: PhiCase,
    pub image: MarkedTriple,
}

/// Follows `x` under `φ` until it leaves the embedded copies: each `Embedded`
/// step re-reads the image as a member of `P_{n-1,k-1}` and applies
/// `φ_{n-1,k-1}`. Every orbit ends at a marked object after at most `k+1` steps.
pub fn orbit(n: i64, k: i64, x: &MarkedTriple) -> Result<Vec<OrbitStep>, Error> {
    let mut steps = Vec::new();
    let (mut level_n, mut level_k, mut cur) = (n, k, x.clone());
    for _ in 0..=k.max(0) + 1 {
        let (case, image) = phi_step(level_n, level_k, &cur)?;
        steps.push(OrbitStep { n: level_n, k: level_k, case, image: image.clone() });
        if image.is_marked() {
            return Ok(steps);
        }
        level_n -= 1;
        level_k -= 1;
        cur = image;
    }
    Err(Error::IterationBudgetExceeded { steps: steps.len() })
}

/// `Σ_k F_{n,k}` through `q^cap`, summed over the enumerated triples; also
/// returns how many triples were visited.
pub fn f_trunc_counted(n: u32, cap: u32) -> (TruncatedSeries, usize) {
    let mut acc = vec![0i64; cap as usize + 1];
    let mut count = 0usize;
    let n = n as i64;
    for k in 0..=n {
        let tau_weight = staircase((n - k) as u32).weight();
        for_each_p(n, k, cap, |lambda, mu| {
            let sign = if lambda.len() % 2 == 0 { 1 } else { -1 };
            acc[(tau_weight + lambda.weight() + mu.weight()) as usize] += sign;
            count += 1;
        });
    }
    let mut series = TruncatedSeries::zero(cap);
    for (e, c) in acc.into_iter().enumerate() {
        series.add_coeff(e as u32, BigInt::from(c));
    }
    (series, count)
}

pub fn f_trunc(n: u32, cap: u32) -> TruncatedSeries {
    f_trunc_counted(n, cap).0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AndrewsCheck {
    /// `F_n = (-1)^n q^{n²} Σ_j (-1)^j q^{-j²}` through `q^cap`.
    Identity,
    /// `F_n + (q^{2n-1} - 1) F_{n-1} - q^{2n-3} F_{n-2} = 0` (`n ≥ 2`).
    RecFn,
    /// `F_n + q^{2n-1} F_{n-1} = 2` (`n ≥ 1`).
    Gn,
}

impl AndrewsCheck {
    pub const ALL: [AndrewsCheck; 3] = [AndrewsCheck::Identity, AndrewsCheck::RecFn, AndrewsCheck::Gn];

    pub fn name(self) -> &'static str {
        match self {
            AndrewsCheck::Identity => "andrews-identity",
            AndrewsCheck::RecFn => "andrews-rec-fn",
            AndrewsCheck::Gn => "andrews-gn",
        }
    }

    pub fn min_n(self) -> u32 {
        match self {
            AndrewsCheck::Identity => 0,
            AndrewsCheck::RecFn => 2,
            AndrewsCheck::Gn => 1,
        }
    }
}

fn mismatch(cert: &mut Certificate, exp: u32, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
    cert.fail(
        Reason::CoefficientMismatch,
        serde_json::json!({ "q": exp }),
        serde_json::json!({ "lhs": lhs.coeff(exp).to_string(), "rhs": rhs.coeff(exp).to_string() }),
    );
}

/// Runs one of the three checks on enumerated `F_trunc` values. Recurrence
/// checks compare on `[0, cap - (2n-1)]`, recorded as `window` in the params.
pub fn verify_andrews(n: u32, cap: u32, which: AndrewsCheck) -> Result<Certificate, Error> {
    if cap < n * n {
        return Err(Error::CapTooSmall { cap, min: n * n });
    }
    if n < which.min_n() {
        return Err(Error::InvalidParams(format!("{} needs n >= {} (got {n})", which.name(), which.min_n())));
    }
    let start = Instant::now();
    let (f_n, visited) = f_trunc_counted(n, cap);
    let (lhs, rhs, window) = match which {
        AndrewsCheck::Identity => (f_n, truncate(&rhs_andrews(n), cap)?, cap),
        AndrewsCheck::RecFn => {
            let window = cap - (2 * n - 1);
            let step = LaurentPoly::q_pow(2 * n as i64 - 1) - LaurentPoly::one();
            let lhs = f_n
                .add(&f_trunc(n - 1, cap).mul_poly(&step)?)
                .sub(&f_trunc(n - 2, cap).mul_poly(&LaurentPoly::q_pow(2 * n as i64 - 3))?);
            (lhs, TruncatedSeries::zero(cap), window)
        }
        AndrewsCheck::Gn => {
            let window = cap - (2 * n - 1);
            let lhs = f_n.add(&f_trunc(n - 1, cap).mul_poly(&LaurentPoly::q_pow(2 * n as i64 - 1))?);
            (lhs, TruncatedSeries::constant(2, cap), window)
        }
    };
    let mut cert = Certificate::new(which.name(), params([("n", n as i64)]), Some(cap as i64));
    cert.params.insert("window".into(), serde_json::json!([0, window]));
    if let Some(e) = lhs.first_mismatch(&rhs, window) {
        mismatch(&mut cert, e, &lhs, &rhs);
    }
    Ok(cert.sizes(visited, rhs.coeffs().count()).timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(tau: &[u32], lambda: &[u32], mu: &[u32]) -> Triple {
        Triple::new(p(tau), p(lambda), p(mu))
    }

    #[test]
    fn enum_p_examples() {
        assert_eq!(enum_p(1, 0, 5), vec![t(&[0], &[], &[])]);
        // λ ⊆ {1,2} and μ ∈ {∅,(2),(2,2),(2,2,2)}: 16 pairs, 12 of size at most 6.
        let slice = enum_p(1, 1, 6);
        assert_eq!(slice.len(), 12);
        let lambda_side = LaurentPoly::from_q_terms([(0, 1), (1, -1), (2, -1), (3, 1)]);
        let mu_side = LaurentPoly::from_q_terms([(0, 1), (2, 1), (4, 1), (6, 1)]);
        let expected = truncate(&(&lambda_side * &mu_side), 6).unwrap();
        let got = truncate(&crate::telescope::weighted_count(slice.iter()), 6).unwrap();
        assert_eq!(got, expected);
        assert!(enum_p(2, 3, 10).is_empty());
        assert_eq!(enum_p(0, 0, 10), vec![t(&[], &[], &[])]);
        for n in 1..6 {
            assert_eq!(enum_p(n, 0, 40), vec![Triple::new(staircase(n as u32), p(&[]), p(&[]))]);
        }
    }

    #[test]
    fn enum_p_matches_membership() {
        for n in 0..5 {
            for k in 0..=n {
                for x in enum_p(n, k, 14) {
                    assert!(in_p(n, k, &x));
                    assert!(x.size() <= 14);
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(3, 1, &t(&[1, 0], &[], &[2])).unwrap(), ClassTag::A);
        assert_eq!(classify(3, 1, &t(&[1, 0], &[4], &[])).unwrap(), ClassTag::B);
        assert_eq!(classify(3, 1, &t(&[1, 0], &[4, 3], &[])).unwrap(), ClassTag::C);
        assert_eq!(classify(3, 1, &t(&[1, 0], &[], &[])).unwrap(), ClassTag::Embedded);
        assert!(classify(3, 1, &t(&[1, 0], &[5], &[])).is_err());
        assert!(classify(3, 0, &t(&[2, 1, 0], &[], &[])).is_err());
    }

    #[test]
    fn phi_examples() {
        let (case, img) = phi_step(2, 0, &MarkedObject::plain(t(&[1, 0], &[], &[]))).unwrap();
        assert_eq!(case, PhiCase::Staircase);
        assert_eq!(img, MarkedObject::marked(1, t(&[], &[], &[])));

        let x = MarkedObject::plain(t(&[1, 0], &[4], &[]));
        let (case, img) = phi_step(3, 1, &x).unwrap();
        assert_eq!(case, PhiCase::B);
        assert_eq!(img, MarkedObject::marked(3, t(&[], &[2], &[])));
        assert_eq!(img.weight(), x.weight());

        let x = MarkedObject::marked(5, t(&[1, 0], &[], &[]));
        let (case, img) = phi_step(3, 1, &x).unwrap();
        assert_eq!(case, PhiCase::D);
        assert_eq!(img, MarkedObject::marked(3, t(&[], &[2, 1], &[])));
        assert_eq!(img.weight(), x.weight());
    }

    #[test]
    fn phi_rejects_bad_input() {
        assert!(phi(3, 2, &MarkedObject::plain(t(&[0], &[], &[]))).is_err());
        assert!(phi(3, 1, &MarkedObject::plain(t(&[1, 0], &[5], &[]))).is_err());
        assert!(phi(3, 1, &MarkedObject::marked(3, t(&[1, 0], &[], &[]))).is_err());
        assert!(phi(3, 0, &MarkedObject::marked(5, t(&[1, 0], &[], &[]))).is_err());
    }

    #[test]
    fn involution_examples() {
        let a = MarkedObject::plain(t(&[], &[4, 1], &[]));
        let b = MarkedObject::plain(t(&[], &[1], &[4]));
        assert_eq!(involution(2, 2, &a).unwrap(), b);
        assert_eq!(involution(2, 2, &b).unwrap(), a);
        assert_eq!(a.weight(), -b.weight());

        let c = MarkedObject::plain(t(&[], &[3], &[]));
        let d = MarkedObject::marked(3, t(&[], &[], &[]));
        assert_eq!(involution(2, 2, &c).unwrap(), d);
        assert_eq!(involution(2, 2, &d).unwrap(), c);
        assert_eq!(c.weight(), -d.weight());

        let fixed = MarkedObject::plain(t(&[], &[2, 1], &[2]));
        assert_eq!(involution(2, 2, &fixed).unwrap(), fixed);
        assert!(in_p(1, 1, &fixed.payload));
    }

    #[test]
    fn involution_on_lower_index() {
        // k = n-1: toggle part 2n-2 = 2, marker part 3.
        let a = MarkedObject::plain(t(&[0], &[3, 2], &[]));
        let b = MarkedObject::plain(t(&[0], &[3], &[2]));
        assert_eq!(involution(2, 1, &a).unwrap(), b);
        assert_eq!(involution(2, 1, &b).unwrap(), a);
        let c = MarkedObject::plain(t(&[0], &[3], &[]));
        assert_eq!(involution(2, 1, &c).unwrap(), MarkedObject::marked(3, t(&[0], &[], &[])));
        assert!(involution(2, 0, &c).is_err());
    }

    #[test]
    fn f_trunc_examples() {
        assert_eq!(f_trunc(0, 10).to_poly(), LaurentPoly::one());
        assert_eq!(f_trunc(1, 10).to_poly(), rhs_andrews(1));
        assert_eq!(f_trunc(2, 10).to_poly(), LaurentPoly::from_q_terms([(0, 2), (3, -2), (4, 1)]));
    }

    #[test]
    fn verify_examples() {
        for which in AndrewsCheck::ALL {
            let cert = verify_andrews(2, 20, which).unwrap();
            assert!(cert.is_verified(), "{}", cert.to_json());
        }
        assert!(verify_andrews(1, 20, AndrewsCheck::Gn).unwrap().is_verified());
        assert!(matches!(verify_andrews(2, 1, AndrewsCheck::Identity), Err(Error::CapTooSmall { cap: 1, min: 4 })));
        assert!(verify_andrews(1, 20, AndrewsCheck::RecFn).is_err());
        assert!(verify_andrews(0, 20, AndrewsCheck::Gn).is_err());
    }

    #[test]
    fn certificate_window_recorded() {
        let cert = verify_andrews(3, 24, AndrewsCheck::RecFn).unwrap();
        assert_eq!(cert.params["window"], serde_json::json!([0, 19]));
    }

    #[test]
    fn orbit_ends_marked() {
        for n in 2..6 {
            for k in 0..=n - 2 {
                for x in domain_slice(n, k, 16) {
                    let steps = orbit(n, k, &x).unwrap();
                    let last = steps.last().unwrap();
                    assert!(last.image.is_marked());
                    assert_eq!(last.image.weight(), x.weight());
                    assert!(steps.len() as i64 <= k + 1);
                }
            }
        }
    }
}
