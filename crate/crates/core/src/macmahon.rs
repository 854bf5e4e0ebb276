//! MacMahon's finite triple-product identity
//!
//! ```text
//! Σ_{k=-m}^{n} z^k q^{k²} [m+n, m+k]_{q²} = (-q/z; q²)_m (-zq; q²)_n
//! ```
//!
//! proved by two families of weight-preserving bijections: `φ_{n,m,k}` gives
//! `F_{n,m} = (1 + q^{2m-1}/z) F_{n,m-1}` and `ψ_{n,k}` gives the initial
//! value `F_{n,0} = (1 + z q^{2n-1}) F_{n-1,0}`.
//!
//! Family membership is decided by predicates only. In particular
//! `H_{n,n} = {(S_n, ∅)}` is nonempty, which `ψ_{n,n-1}` relies on.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::partitions::{enum_even_bounded, Partition, SquareSide};
use crate::qalgebra::{factor_product, gaussian_binomial, LaurentPoly};
use crate::telescope::{
    cancelation_psi, check_graded_bijection, compare_polys, params, telescoping_sum_check, weighted_count, Certificate,
    MarkedObject, Weighted,
};
use crate::Error;

/// `(λ, μ)` with `λ = S_k` stored by its signed side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MacPair {
    pub side: SquareSide,
    pub mu: Partition,
}

impl MacPair {
    pub fn new(k: i64, mu: Partition) -> Self {
        Self { side: SquareSide(k), mu }
    }
}

impl Weighted for MacPair {
    /// `z^k q^{k² + |μ|}`.
    fn weight(&self) -> LaurentPoly {
        LaurentPoly::monomial(1, self.side.k(), self.side.weight() + self.mu.weight() as i64)
    }
}

impl fmt::Display for MacPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.side, self.mu)
    }
}

/// The four families of pairs, with their parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `μ₁ ≤ 2m+2k`, `ℓ(μ) ≤ n-k`, for `-m ≤ k ≤ n`.
    P { n: i64, m: i64, k: i64 },
    /// Members of `P` with `μ₁ = 2m+2k`.
    G { n: i64, m: i64, k: i64 },
    /// `ℓ(μ) ≤ k`, `μ₁ ≤ 2n-2k`, for `0 ≤ k ≤ n`.
    Q { n: i64, k: i64 },
    /// Members of `Q` with `μ₁ = 2n-2k`.
    H { n: i64, k: i64 },
}

impl Family {
    /// `(side, max part, max length, exact first part)`, or `None` when empty.
    fn shape(self) -> Option<(i64, i64, i64, Option<i64>)> {
        let (k, max_part, max_len, exact) = match self {
            Family::P { n, m, k } if -m <= k && k <= n => (k, 2 * m + 2 * k, n - k, None),
            Family::G { n, m, k } if -m <= k && k <= n => (k, 2 * m + 2 * k, n - k, Some(2 * m + 2 * k)),
            Family::Q { n, k } if 0 <= k && k <= n => (k, 2 * n - 2 * k, k, None),
            Family::H { n, k } if 0 <= k && k <= n => (k, 2 * n - 2 * k, k, Some(2 * n - 2 * k)),
            _ => return None,
        };
        Some((k, max_part, max_len, exact))
    }

    pub fn contains(&self, x: &MacPair) -> bool {
        let Some((k, max_part, max_len, exact)) = self.shape() else {
            return false;
        };
        let first = x.mu.first() as i64;
        x.side.k() == k
            && x.mu.is_even()
            && first <= max_part
            && x.mu.len() as i64 <= max_len
            && exact.is_none_or(|e| first == e)
    }

    /// Complete member list in canonical order.
    pub fn members(&self) -> Vec<MacPair> {
        let Some((k, max_part, max_len, exact)) = self.shape() else {
            return Vec::new();
        };
        enum_even_bounded(max_part as u32, max_len as u32)
            .into_iter()
            .filter(|mu| exact.is_none_or(|e| mu.first() as i64 == e))
            .map(|mu| MacPair::new(k, mu))
            .collect()
    }

    pub fn weighted_count(&self) -> LaurentPoly {
        weighted_count(self.members().iter())
    }
}

pub fn enum_family(which: Family) -> Vec<MacPair> {
    which.members()
}

/// Which branch of `φ_{n,m,k}` / `ψ_{n,k}` fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepCase {
    /// First part on the boundary: carried into `G_{n,m,k}` / `H_{n,k}`.
    Boundary,
    /// First part strictly inside: the same pair in the smaller family.
    Interior,
    /// Carried-in pair: square resized, first row of `μ` removed, marker attached.
    Shifted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub case: StepCase,
    pub image: MarkedObject<MacPair>,
}

fn outside(map: &'static str, params: String, x: &MarkedObject<MacPair>) -> Error {
    Error::OutsideDomain { map, params, object: format!("{x:?}") }
}

/// `φ_{n,m,k}: P_{n,m,k} ∪ G_{n,m,k-1} → P_{n,m-1,k} ∪ {2m-1}×P_{n,m-1,k} ∪ G_{n,m,k}`.
pub fn phi_step(n: i64, m: i64, k: i64, x: &MarkedObject<MacPair>) -> Result<Step, Error> {
    let err = || outside("macmahon-phi", format!("n={n} m={m} k={k}"), x);
    if x.is_marked() {
        return Err(err());
    }
    let pair = &x.payload;
    if (Family::P { n, m, k }).contains(pair) {
        let case = if pair.mu.first() as i64 == 2 * m + 2 * k { StepCase::Boundary } else { StepCase::Interior };
        return Ok(Step { case, image: x.clone() });
    }
    if (Family::G { n, m, k: k - 1 }).contains(pair) {
        let mu = pair.mu.drop_rows(1).unwrap_or_default();
        let image = MarkedObject::marked_z(2 * m - 1, -1, MacPair::new(k, mu));
        return Ok(Step { case: StepCase::Shifted, image });
    }
    Err(err())
}

/// `ψ_{n,k}: Q_{n,k} ∪ H_{n,k+1} → Q_{n-1,k} ∪ {2n-1}×Q_{n-1,k} ∪ H_{n,k}`.
pub fn psi_step(n: i64, k: i64, x: &MarkedObject<MacPair>) -> Result<Step, Error> {
    let err = || outside("macmahon-psi", format!("n={n} k={k}"), x);
    if x.is_marked() {
        return Err(err());
    }
    let pair = &x.payload;
    if (Family::Q { n, k }).contains(pair) {
        let case = if pair.mu.first() as i64 == 2 * n - 2 * k { StepCase::Boundary } else { StepCase::Interior };
        return Ok(Step { case, image: x.clone() });
    }
    if (Family::H { n, k: k + 1 }).contains(pair) {
        let mu = pair.mu.drop_rows(1).unwrap_or_default();
        let image = MarkedObject::marked_z(2 * n - 1, 1, MacPair::new(k, mu));
        return Ok(Step { case: StepCase::Shifted, image });
    }
    Err(err())
}

fn plain(v: Vec<MacPair>) -> impl Iterator<Item = MarkedObject<MacPair>> {
    v.into_iter().map(MarkedObject::plain)
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

/// Domain and codomain of `φ_{n,m,k}`.
pub fn phi_sets(n: i64, m: i64, k: i64) -> (Vec<MarkedObject<MacPair>>, Vec<MarkedObject<MacPair>>) {
    let domain = plain(Family::P { n, m, k }.members()).chain(plain(Family::G { n, m, k: k - 1 }.members()));
    let lower = Family::P { n, m: m - 1, k }.members();
    let codomain = plain(lower.clone())
        .chain(lower.into_iter().map(|p| MarkedObject::marked_z(2 * m - 1, -1, p)))
        .chain(plain(Family::G { n, m, k }.members()));
    (sorted(domain.collect()), sorted(codomain.collect()))
}

/// Domain and codomain of `ψ_{n,k}`.
pub fn psi_sets(n: i64, k: i64) -> (Vec<MarkedObject<MacPair>>, Vec<MarkedObject<MacPair>>) {
    let domain = plain(Family::Q { n, k }.members()).chain(plain(Family::H { n, k: k + 1 }.members()));
    let lower = Family::Q { n: n - 1, k }.members();
    let codomain = plain(lower.clone())
        .chain(lower.into_iter().map(|p| MarkedObject::marked_z(2 * n - 1, 1, p)))
        .chain(plain(Family::H { n, k }.members()));
    (sorted(domain.collect()), sorted(codomain.collect()))
}

pub fn certify_phi(n: i64, m: i64, k: i64) -> Certificate {
    let (domain, codomain) = phi_sets(n, m, k);
    check_graded_bijection(
        "macmahon-phi",
        params([("n", n), ("m", m), ("k", k)]),
        |x| phi_step(n, m, k, x).map(|s| s.image),
        &domain,
        &codomain,
        None,
    )
}

pub fn certify_psi(n: i64, k: i64) -> Certificate {
    let (domain, codomain) = psi_sets(n, k);
    check_graded_bijection(
        "macmahon-psi",
        params([("n", n), ("k", k)]),
        |x| psi_step(n, k, x).map(|s| s.image),
        &domain,
        &codomain,
        None,
    )
}

/// `F_{n,m}` as the weighted count of `⋃_k P_{n,m,k}`.
pub fn f_enumerated(n: i64, m: i64) -> LaurentPoly {
    (-m..=n).map(|k| Family::P { n, m, k }.weighted_count()).sum()
}

/// `F_{n,0}` as the weighted count of `⋃_k Q_{n,k}`.
pub fn f_initial_enumerated(n: i64) -> LaurentPoly {
    (0..=n).map(|k| Family::Q { n, k }.weighted_count()).sum()
}

/// `Σ_k z^k q^{k²} [m+n, m+k]_{q²}`.
pub fn lhs_closed(n: u32, m: u32) -> LaurentPoly {
    let (n, m) = (n as i64, m as i64);
    (-m..=n).map(|k| gaussian_binomial((m + n) as u32, m + k, 2).shift(k, k * k)).sum()
}

/// `(-q/z; q²)_m (-zq; q²)_n`.
pub fn rhs_closed(n: u32, m: u32) -> LaurentPoly {
    &factor_product(m, 1, -1, 1, 2) * &factor_product(n, 1, 1, 1, 2)
}

/// Checks the two bijection-induced recurrences on enumerated sets, the
/// enumerated count against the Gaussian-binomial form, and the identity itself.
pub fn verify_macmahon(n: u32, m: u32) -> Certificate {
    let start = Instant::now();
    let (ni, mi) = (n as i64, m as i64);
    let mut cert = Certificate::new("macmahon", params([("n", ni), ("m", mi)]), None);

    let f_nm = f_enumerated(ni, mi);
    if m >= 1 {
        let factor = LaurentPoly::one() + LaurentPoly::monomial(1, -1, 2 * mi - 1);
        compare_polys(&mut cert, "recurrence-in-m", &f_nm, &(&factor * &f_enumerated(ni, mi - 1)));
    }
    if n >= 1 {
        let factor = LaurentPoly::one() + LaurentPoly::monomial(1, 1, 2 * ni - 1);
        let lhs = f_initial_enumerated(ni);
        compare_polys(&mut cert, "recurrence-in-n", &lhs, &(&factor * &f_initial_enumerated(ni - 1)));
    }
    let lhs = lhs_closed(n, m);
    compare_polys(&mut cert, "weighted-count", &f_nm, &lhs);
    let rhs = rhs_closed(n, m);
    compare_polys(&mut cert, "identity", &lhs, &rhs);
    cert.sizes(lhs.num_terms(), rhs.num_terms()).timed(start)
}

/// The summed telescoping relation for `φ_{n,m,·}`, indexed from `k = -m`:
/// `f(k) = P_{n,m,k}`, `h(k) = G_{n,m,k-1}`, `g(k) = (1 + q^{2m-1}/z) P_{n,m-1,k}`.
pub fn certify_telescoping(n: i64, m: i64) -> Result<Certificate, Error> {
    if n < 0 || m < 1 {
        return Err(Error::InvalidParams(format!("telescoping needs n >= 0, m >= 1 (got n={n}, m={m})")));
    }
    let factor = LaurentPoly::one() + LaurentPoly::monomial(1, -1, 2 * m - 1);
    let ks: Vec<i64> = (-m..=n).collect();
    let f: Vec<_> = ks.iter().map(|&k| Family::P { n, m, k }.weighted_count()).collect();
    let h: Vec<_> = ks.iter().map(|&k| Family::G { n, m, k: k - 1 }.weighted_count()).collect();
    let g: Vec<_> = ks.iter().map(|&k| &factor * &Family::P { n, m: m - 1, k }.weighted_count()).collect();
    Ok(telescoping_sum_check(
        "macmahon-telescoping",
        params([("n", n), ("m", m), ("k_min", -m)]),
        &f,
        &g,
        &h,
        ks.len() - 1,
    ))
}

/// Where an object sits in the combined map `φ: A ∪ H → B ∪ H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// `A = ⋃_k P_{n,m,k}`.
    Source,
    /// `H = ⋃_k G_{n,m,k}`.
    Carry,
    /// `B = ⋃_k (P_{n,m-1,k} ∪ {2m-1}×P_{n,m-1,k})`.
    Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Placed {
    pub role: Role,
    pub object: MarkedObject<MacPair>,
}

impl Weighted for Placed {
    fn weight(&self) -> LaurentPoly {
        self.object.weight()
    }
}

/// One application of the combined `φ` over all `k`.
pub fn combined_phi(n: i64, m: i64, x: &Placed) -> Result<Placed, Error> {
    let k = x.object.payload.side.k();
    let (step, from) = match x.role {
        Role::Source => (phi_step(n, m, k, &x.object)?, Role::Source),
        // G_{n,m,k} is the carried-in part of φ_{n,m,k+1}.
        Role::Carry => (phi_step(n, m, k + 1, &x.object)?, Role::Carry),
        Role::Target => return Err(outside("macmahon-combined-phi", format!("n={n} m={m}"), &x.object)),
    };
    let role = match (from, step.case) {
        (Role::Source, StepCase::Boundary) => Role::Carry,
        (Role::Source, StepCase::Interior) | (Role::Carry, StepCase::Shifted) => Role::Target,
        _ => return Err(outside("macmahon-combined-phi", format!("n={n} m={m}"), &x.object)),
    };
    Ok(Placed { role, object: step.image })
}

/// `A`, `H` and `B` of the combined map.
pub fn cancelation_sets(n: i64, m: i64) -> (Vec<Placed>, Vec<Placed>, Vec<Placed>) {
    let place = |role, object| Placed { role, object };
    let mut a = Vec::new();
    let mut h = Vec::new();
    let mut b = Vec::new();
    for k in -m..=n {
        a.extend(plain(Family::P { n, m, k }.members()).map(|o| place(Role::Source, o)));
        h.extend(plain(Family::G { n, m, k }.members()).map(|o| place(Role::Carry, o)));
        for p in (Family::P { n, m: m - 1, k }).members() {
            b.push(place(Role::Target, MarkedObject::marked_z(2 * m - 1, -1, p.clone())));
            b.push(place(Role::Target, MarkedObject::plain(p)));
        }
    }
    (sorted(a), sorted(h), sorted(b))
}

/// Builds `ψ: A → B` by iterating the combined `φ` until the orbit lands in `B`,
/// then certifies it as a weight-preserving bijection.
pub fn certify_cancelation(n: i64, m: i64) -> Certificate {
    let (a, h, b) = cancelation_sets(n, m);
    let budget = a.len() + h.len() + 1;
    let psi = |x: &Placed| {
        cancelation_psi(|y| combined_phi(n, m, y), x, |y| y.role == Role::Target, budget).map(|(img, _)| img)
    };
    let mut cert = check_graded_bijection("macmahon-cancelation", params([("n", n), ("m", m)]), psi, &a, &b, None);
    cert.params.insert("budget".into(), budget.into());
    cert
}
