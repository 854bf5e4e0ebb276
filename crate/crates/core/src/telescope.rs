//! Generic combinatorial-telescoping machinery: weighted objects, markers,
//! exhaustive bijection and involution checks over enumerated slices, the
//! summed telescoping relation, and the cancelation iteration that turns
//! `φ: A ∪ H → B ∪ H` into a direct map `A → B`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::qalgebra::LaurentPoly;
use crate::Error;

/// Objects carrying a signed monomial weight `±z^a q^b`.
pub trait Weighted {
    fn weight(&self) -> LaurentPoly;

    /// Exponent of `q` in the weight; used to place objects in weight-capped slices.
    fn q_degree(&self) -> i64 {
        self.weight().as_monomial().map(|(_, q, _)| q).expect("weight must be a monomial")
    }
}

impl<T: Weighted> Weighted for &T {
    fn weight(&self) -> LaurentPoly {
        (*self).weight()
    }
}

/// Sum of weights over a collection.
pub fn weighted_count<T: Weighted>(items: impl IntoIterator<Item = T>) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for item in items {
        total += &item.weight();
    }
    total
}

/// An element of `{marker} × X`. `marker == 0 && z_shift == 0` is an unmarked
/// element of `X`. The marker contributes `z^z_shift q^marker` and no sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedObject<T> {
    pub marker: i64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub z_shift: i64,
    pub payload: T,
}

fn is_zero(v: &i64) -> bool {
    *v == 0
}

impl<T> MarkedObject<T> {
    pub fn plain(payload: T) -> Self {
        Self { marker: 0, z_shift: 0, payload }
    }

    pub fn marked(marker: i64, payload: T) -> Self {
        Self { marker, z_shift: 0, payload }
    }

    pub fn marked_z(marker: i64, z_shift: i64, payload: T) -> Self {
        Self { marker, z_shift, payload }
    }

    pub fn is_marked(&self) -> bool {
        self.marker != 0 || self.z_shift != 0
    }
}

impl<T: Weighted> Weighted for MarkedObject<T> {
    fn weight(&self) -> LaurentPoly {
        self.payload.weight().shift(self.z_shift, self.marker)
    }
}

/// Free-form parameters; `BTreeMap` keeps keys sorted in JSON output.
pub type Params = BTreeMap<String, Value>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    NotInCodomain,
    Collision,
    WeightMismatch,
    NotSurjective,
    MapRejected,
    NotInDomain,
    NotInvolutive,
    SignNotReversed,
    FixedSetMismatch,
    TelescopingViolation,
    SumMismatch,
    CoefficientMismatch,
    IterationBudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub element: Value,
    pub image: Value,
    pub reason: Reason,
}

/// Verdict of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    pub params: Params,
    pub cap: Option<i64>,
    pub status: Status,
    pub domain_size: usize,
    pub codomain_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn new(check: impl Into<String>, params: Params, cap: Option<i64>) -> Self {
        Self {
            check: check.into(),
            params,
            cap,
            status: Status::Verified,
            domain_size: 0,
            codomain_size: 0,
            counterexample: None,
            elapsed_ms: 0,
        }
    }

    pub fn sizes(mut self, domain: usize, codomain: usize) -> Self {
        self.domain_size = domain;
        self.codomain_size = codomain;
        self
    }

    /// Records a failure. Only the first counterexample is kept.
    pub fn fail(&mut self, reason: Reason, element: Value, image: Value) {
        if self.status == Status::Verified {
            self.status = Status::Failed;
            self.counterexample = Some(Counterexample { element, image, reason });
        }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Compact JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self).expect("certificate serializes").to_string()
    }

    pub fn reason(&self) -> Option<Reason> {
        self.counterexample.as_ref().map(|c| c.reason)
    }
}

/// Process exit code for a batch: 0 iff every certificate verified.
pub fn exit_code(certs: &[Certificate]) -> i32 {
    if certs.iter().all(Certificate::is_verified) {
        0
    } else {
        1
    }
}

/// Builds a [`Params`] map from `(key, value)` pairs.
pub fn params<V: Into<Value>>(pairs: impl IntoIterator<Item = (&'static str, V)>) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v.into())).collect()
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

/// First term where two polynomials disagree: `((z, q), lhs_coeff, rhs_coeff)`.
pub fn first_difference(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<((i64, i64), BigInt, BigInt)> {
    let diff = lhs - rhs;
    let ((z, q), _) = diff.terms().next()?;
    Some(((z, q), lhs.coeff(z, q), rhs.coeff(z, q)))
}

/// Marks `cert` failed if `lhs != rhs`, naming the sub-identity and first differing term.
pub fn compare_polys(cert: &mut Certificate, identity: &str, lhs: &LaurentPoly, rhs: &LaurentPoly) {
    if let Some(((z, q), l, r)) = first_difference(lhs, rhs) {
        cert.fail(
            Reason::CoefficientMismatch,
            serde_json::json!({ "identity": identity, "z": z, "q": q }),
            serde_json::json!({ "lhs": l.to_string(), "rhs": r.to_string() }),
        );
    }
}

/// Checks that `map` is a weight-preserving bijection from `domain` onto
/// `codomain`. With a cap, only codomain elements of `q`-degree `<= cap` must be hit.
pub fn check_graded_bijection<T, F>(
    check: &str,
    params: Params,
    map: F,
    domain: &[T],
    codomain: &[T],
    cap: Option<i64>,
) -> Certificate
where
    T: Ord + Weighted + Serialize,
    F: Fn(&T) -> Result<T, Error>,
{
    let start = Instant::now();
    let mut cert = Certificate::new(check, params, cap).sizes(domain.len(), codomain.len());
    let targets: BTreeSet<&T> = codomain.iter().collect();
    let mut hit: BTreeMap<T, &T> = BTreeMap::new();

    for x in domain {
        let y = match map(x) {
            Ok(y) => y,
            Err(e) => {
                cert.fail(Reason::MapRejected, to_value(x), Value::String(e.to_string()));
                break;
            }
        };
        if !targets.contains(&y) {
            cert.fail(Reason::NotInCodomain, to_value(x), to_value(&y));
            break;
        }
        if x.weight() != y.weight() {
            cert.fail(Reason::WeightMismatch, to_value(x), to_value(&y));
            break;
        }
        if let Some(prev) = hit.get(&y) {
            cert.fail(Reason::Collision, serde_json::json!([to_value(*prev), to_value(x)]), to_value(&y));
            break;
        }
        hit.insert(y, x);
    }

    if cert.is_verified() {
        let missed =
            codomain.iter().filter(|c| cap.is_none_or(|cap| c.q_degree() <= cap)).find(|c| !hit.contains_key(*c));
        if let Some(c) = missed {
            cert.fail(Reason::NotSurjective, to_value(c), Value::Null);
        }
    }
    cert.timed(start)
}

/// Checks that `map` is an involution on `domain` whose fixed points are
/// exactly `expected_fixed` and whose 2-cycles pair equal `q`-weight with
/// opposite sign.
pub fn check_sign_reversing_involution<T, F>(
    check: &str,
    params: Params,
    map: F,
    domain: &[T],
    expected_fixed: &[T],
    cap: Option<i64>,
) -> Certificate
where
    T: Ord + Weighted + Serialize,
    F: Fn(&T) -> Result<T, Error>,
{
    let start = Instant::now();
    let mut cert = Certificate::new(check, params, cap).sizes(domain.len(), expected_fixed.len());
    let members: BTreeSet<&T> = domain.iter().collect();
    let mut fixed: BTreeSet<&T> = BTreeSet::new();

    for x in domain {
        let y = match map(x) {
            Ok(y) => y,
            Err(e) => {
                cert.fail(Reason::MapRejected, to_value(x), Value::String(e.to_string()));
                break;
            }
        };
        if !members.contains(&y) {
            cert.fail(Reason::NotInDomain, to_value(x), to_value(&y));
            break;
        }
        if &y == x {
            fixed.insert(x);
            continue;
        }
        match map(&y) {
            Ok(back) if &back == x => {}
            Ok(back) => {
                cert.fail(Reason::NotInvolutive, to_value(x), serde_json::json!([to_value(&y), to_value(&back)]));
                break;
            }
            Err(e) => {
                cert.fail(Reason::MapRejected, to_value(&y), Value::String(e.to_string()));
                break;
            }
        }
        let (wx, wy) = (x.weight(), y.weight());
        if wx != -&wy {
            let reason = if (&wx - &wy).is_zero() { Reason::SignNotReversed } else { Reason::WeightMismatch };
            cert.fail(reason, to_value(x), to_value(&y));
            break;
        }
    }

    if cert.is_verified() {
        let expected: BTreeSet<&T> = expected_fixed.iter().collect();
        if let Some(extra) = fixed.difference(&expected).next() {
            cert.fail(Reason::FixedSetMismatch, to_value(*extra), Value::String("unexpected fixed point".into()));
        } else if let Some(missing) = expected.difference(&fixed).next() {
            cert.fail(Reason::FixedSetMismatch, to_value(*missing), Value::String("expected fixed point".into()));
        }
    }
    cert.timed(start)
}

/// Checks `f(k) + h(k) = g(k) + h(k+1)` for `0 <= k <= k_max` and `Σf = Σg`.
/// Indices missing from a slice count as zero; `h(0)` and `h(k_max + 1)` must vanish.
pub fn telescoping_sum_check(
    check: &str,
    params: Params,
    f: &[LaurentPoly],
    g: &[LaurentPoly],
    h: &[LaurentPoly],
    k_max: usize,
) -> Certificate {
    let start = Instant::now();
    let zero = LaurentPoly::zero();
    let at = |s: &'_ [LaurentPoly], k: usize| s.get(k).cloned().unwrap_or_else(|| zero.clone());
    let mut cert = Certificate::new(check, params, None).sizes(f.len(), g.len());

    for boundary in [0, k_max + 1] {
        let hk = at(h, boundary);
        if !hk.is_zero() {
            cert.fail(
                Reason::TelescopingViolation,
                serde_json::json!({ "k": boundary, "h": to_value(&hk) }),
                Value::String("h must vanish at the boundary".into()),
            );
        }
    }
    for k in 0..=k_max {
        if !cert.is_verified() {
            break;
        }
        let lhs = at(f, k) + at(h, k);
        let rhs = at(g, k) + at(h, k + 1);
        if lhs != rhs {
            cert.fail(
                Reason::TelescopingViolation,
                serde_json::json!({ "k": k }),
                serde_json::json!({ "lhs": to_value(&lhs), "rhs": to_value(&rhs) }),
            );
        }
    }
    if cert.is_verified() {
        let sum_f: LaurentPoly = (0..=k_max).map(|k| at(f, k)).sum();
        let sum_g: LaurentPoly = (0..=k_max).map(|k| at(g, k)).sum();
        if sum_f != sum_g {
            cert.fail(
                Reason::SumMismatch,
                serde_json::json!({ "sum_f": to_value(&sum_f) }),
                serde_json::json!({ "sum_g": to_value(&sum_g) }),
            );
        }
    }
    cert.timed(start)
}

/// Iterates `phi` from `start` until an iterate satisfies `in_b`. Returns the
/// iterate and how many applications it took.
pub fn cancelation_psi<T, F, B>(phi: F, start: &T, in_b: B, max_iter: usize) -> Result<(T, usize), Error>
where
    T: Clone,
    F: Fn(&T) -> Result<T, Error>,
    B: Fn(&T) -> bool,
{
    let mut cur = start.clone();
    for step in 1..=max_iter {
        cur = phi(&cur)?;
        if in_b(&cur) {
            return Ok((cur, step));
        }
    }
    Err(Error::IterationBudgetExceeded { steps: max_iter })
}
