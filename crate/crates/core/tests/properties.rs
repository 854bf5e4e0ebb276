mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use qtelescope::andrews12::{
    self, classify, classify_codomain, domain_slice, enum_p, f_trunc, involution, phi_step, ClassTag, CodomainTag,
    PhiCase,
};
use qtelescope::macmahon::{phi_sets, phi_step as mac_phi_step, Family};
use qtelescope::partitions::{enum_distinct_range, enum_even_bounded, enum_even_capped};
use qtelescope::qalgebra::{gaussian_binomial, truncate};
use qtelescope::telescope::weighted_count;
use qtelescope::{LaurentPoly, MarkedObject, Partition, Weighted};

use common::*;

fn parts(v: Vec<Partition>) -> Vec<Vec<u32>> {
    v.into_iter().map(|p| p.parts().to_vec()).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn distinct_enumerator_matches_subsets() {
    for lo in 1..=5 {
        for hi in 0..=9 {
            assert_eq!(parts(enum_distinct_range(lo, hi)), naive_distinct(lo, hi), "lo={lo} hi={hi}");
        }
    }
}

#[test]
fn even_bounded_enumerator_matches_tuples() {
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            let values: Vec<u32> = (1..=a).map(|i| 2 * i).collect();
            let got = parts(enum_even_bounded(2 * a, b));
            assert_eq!(got, naive_partitions(&values, b as usize, |_| true), "a={a} b={b}");
            assert_eq!(got.len() as u64, binomial((a + b) as u64, b as u64));
            // An odd bound behaves like the even number below it.
            assert_eq!(enum_even_bounded(2 * a + 1, b), enum_even_bounded(2 * a, b));
        }
    }
}

#[test]
fn even_capped_enumerator_matches_tuples() {
    for max_part in 0..=8u32 {
        for cap in 0..=12u32 {
            let values: Vec<u32> = (1..=max_part / 2).map(|i| 2 * i).collect();
            let expected = naive_partitions(&values, (cap / 2) as usize, |t| t.iter().sum::<u32>() <= cap);
            assert_eq!(parts(enum_even_capped(max_part, cap)), expected, "max_part={max_part} cap={cap}");
        }
    }
}

#[test]
fn gaussian_binomial_counts_box_partitions() {
    for n in 0..=12u32 {
        for k in 0..=n {
            let g = gaussian_binomial(n, k as i64, 1);
            let coeffs = g.q_coefficients().expect("z-free polynomial");
            let oracle = box_counts(k as usize, n - k);
            assert_eq!(coeffs, oracle.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(), "n={n} k={k}");
            assert_eq!(g.max_q_exp(), Some((k * (n - k)) as i64));
            assert_eq!(g.eval_at_one(), BigInt::from(binomial(n as u64, k as u64)));
            let reversed: Vec<_> = coeffs.iter().rev().cloned().collect();
            assert_eq!(coeffs, reversed, "palindromic n={n} k={k}");
        }
        assert!(gaussian_binomial(n, -1, 1).is_zero());
        assert!(gaussian_binomial(n, n as i64 + 1, 1).is_zero());
    }
}

#[test]
fn gaussian_binomial_step_is_a_stretch() {
    for n in 0..=9u32 {
        for k in 0..=n as i64 {
            for step in 1..=3 {
                assert_eq!(gaussian_binomial(n, k, step), gaussian_binomial(n, k, 1).stretch_q(step as i64));
            }
        }
    }
}

#[test]
fn macmahon_families_count_boxes() {
    for n in 0..=5i64 {
        for m in 0..=5i64 {
            for k in -m..=n {
                let counts = box_counts((n - k) as usize, (m + k) as u32);
                let oracle = LaurentPoly::from_terms(
                    counts.iter().enumerate().map(|(w, &c)| (k, k * k + 2 * w as i64, BigInt::from(c))),
                );
                assert_eq!(Family::P { n, m, k }.weighted_count(), oracle, "n={n} m={m} k={k}");
            }
        }
    }
}

#[test]
fn macmahon_boundary_family_is_a_subfamily() {
    for n in 0..=4i64 {
        for m in 0..=4i64 {
            for k in -m..=n {
                let p = Family::P { n, m, k };
                let g = Family::G { n, m, k }.members();
                assert!(g.iter().all(|x| p.contains(x) && x.mu.first() as i64 == 2 * m + 2 * k));
                let boundary = p.members().into_iter().filter(|x| x.mu.first() as i64 == 2 * m + 2 * k).count();
                assert_eq!(boundary, g.len());
            }
        }
    }
}

#[test]
fn macmahon_phi_cases_are_disjoint() {
    for n in 0..=4i64 {
        for m in 1..=4i64 {
            for k in -m..=n {
                let (domain, _) = phi_sets(n, m, k);
                for x in &domain {
                    let in_p = Family::P { n, m, k }.contains(&x.payload);
                    let in_g = Family::G { n, m, k: k - 1 }.contains(&x.payload);
                    assert!(in_p ^ in_g, "{x:?}");
                    assert!(mac_phi_step(n, m, k, x).is_ok());
                }
            }
        }
    }
}

const CAP: u32 = 30;

#[test]
fn classification_partitions_the_domain() {
    for n in 2..=6i64 {
        for k in 1..=n - 2 {
            let slice = enum_p(n, k, CAP);
            let mut by_class: BTreeMap<ClassTag, Vec<_>> = BTreeMap::new();
            for t in &slice {
                by_class.entry(classify(n, k, t).unwrap()).or_default().push(t.clone());
            }
            assert_eq!(by_class.values().map(Vec::len).sum::<usize>(), slice.len());
            assert_eq!(
                by_class.remove(&ClassTag::Embedded).unwrap_or_default(),
                enum_p(n - 1, k - 1, CAP),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn classification_partitions_the_codomain() {
    for n in 3..=6i64 {
        for k in 1..=n - 2 {
            let slice = enum_p(n - 2, k, CAP);
            let tags: Vec<_> = slice.iter().map(|t| classify_codomain(n, k, t).unwrap()).collect();
            for t in &slice {
                let low = (n - k) as u32;
                let hits = [t.lambda.contains(low), t.lambda.contains(low - 1)];
                let expected = match hits {
                    [true, true] if t.mu.first() as i64 == 2 * k => CodomainTag::CPrime,
                    [true, true] => CodomainTag::D,
                    [false, false] => CodomainTag::APrime,
                    _ => CodomainTag::BPrime,
                };
                assert_eq!(classify_codomain(n, k, t).unwrap(), expected);
            }
            assert_eq!(tags.len(), slice.len());
        }
    }
}

#[test]
fn phi_sends_each_class_to_its_counterpart() {
    for n in 3..=6i64 {
        for k in 1..=n - 2 {
            for x in domain_slice(n, k, CAP) {
                let (case, image) = phi_step(n, k, &x).unwrap();
                let expected = match case {
                    PhiCase::A => CodomainTag::APrime,
                    PhiCase::B => CodomainTag::BPrime,
                    PhiCase::C => CodomainTag::CPrime,
                    PhiCase::D => CodomainTag::D,
                    PhiCase::Embedded => continue,
                    PhiCase::Staircase => unreachable!("k >= 1"),
                };
                assert_eq!(image.marker, 2 * n - 3);
                assert_eq!(classify_codomain(n, k, &image.payload).unwrap(), expected, "{x:?}");
            }
        }
    }
}

#[test]
fn f_trunc_matches_series_oracle() {
    for n in 0..=6u32 {
        let cap = n * n + 15;
        let oracle = andrews_oracle(n as usize, cap as usize);
        let got = f_trunc(n, cap);
        for (e, &c) in oracle.iter().enumerate() {
            assert_eq!(got.coeff(e as u32), BigInt::from(c), "n={n} q^{e}");
        }
        // F_n is a polynomial of degree n².
        assert!(oracle[(n * n) as usize + 1..].iter().all(|&c| c == 0), "tail n={n}");
    }
}

/// Each bijection gives `P_{n,k} + q^{2n-1} P_{n-1,k-1} = P_{n-1,k-1} + q^{2n-3} P_{n-2,k}`
/// on weights; check it through enumeration and through the product oracle.
#[test]
fn slice_identity_both_routes() {
    let cap = 24usize;
    for n in 2..=5usize {
        for k in 0..=n - 2 {
            let count =
                |nn: i64, kk: i64| truncate(&weighted_count(enum_p(nn, kk, cap as u32).iter()), cap as u32).unwrap();
            let (ni, ki) = (n as i64, k as i64);
            let enumerated_lhs =
                count(ni, ki).add(&count(ni - 1, ki - 1).mul_poly(&LaurentPoly::q_pow(2 * ni - 1)).unwrap());
            let enumerated_rhs =
                count(ni - 1, ki - 1).add(&count(ni - 2, ki).mul_poly(&LaurentPoly::q_pow(2 * ni - 3)).unwrap());
            assert_eq!(enumerated_lhs.first_mismatch(&enumerated_rhs, cap as u32), None, "n={n} k={k}");

            let summand = |nn: usize, kk: Option<usize>, shift: usize| -> Vec<i64> {
                let base = kk.filter(|&kk| kk <= nn).map(|kk| andrews_summand(nn, kk, cap)).unwrap_or(vec![0; cap + 1]);
                (0..=cap).map(|e| if e >= shift { base[e - shift] } else { 0 }).collect()
            };
            let add = |a: Vec<i64>, b: Vec<i64>| a.into_iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
            let lower = k.checked_sub(1);
            let lhs = add(summand(n, Some(k), 0), summand(n - 1, lower, 2 * n - 1));
            let rhs = add(summand(n - 1, lower, 0), summand(n - 2, Some(k), 2 * n - 3));
            assert_eq!(lhs, rhs, "oracle n={n} k={k}");
        }
    }
}

#[test]
fn lower_cap_certificates_stay_verified() {
    for n in 2..=4i64 {
        for k in 0..=n - 2 {
            let high = andrews12::certify_phi(n, k, 24).unwrap();
            let low = andrews12::certify_phi(n, k, 14).unwrap();
            assert!(high.is_verified() && low.is_verified());
            assert!(low.domain_size <= high.domain_size);
        }
        for k in [n - 1, n] {
            assert!(andrews12::certify_involution(n, k, 14).unwrap().is_verified());
        }
    }
}

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn insert_then_remove_roundtrips(p in arb_partition(9, 6), part in 0u32..12) {
        let with = p.with_part(part);
        prop_assert_eq!(with.len(), p.len() + 1);
        prop_assert_eq!(with.weight(), p.weight() + part);
        prop_assert_eq!(with.without_part(part), Some(p));
    }

    #[test]
    fn partition_json_roundtrips(p in arb_partition(9, 6)) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn unsorted_parts_are_rejected(v in prop::collection::vec(0u32..9, 2..6)) {
        let sorted = v.windows(2).all(|w| w[0] >= w[1]);
        prop_assert_eq!(Partition::new(v).is_ok(), sorted);
    }

    #[test]
    fn andrews_phi_preserves_marker_weight(n in 2i64..=6, k_off in 0i64..5, idx in any::<prop::sample::Index>()) {
        let k = k_off % (n - 1);
        let slice = domain_slice(n, k, 22);
        let x = &slice[idx.index(slice.len())];
        let y = andrews12::phi(n, k, x).unwrap();
        prop_assert_eq!(y.weight(), x.weight());
    }

    #[test]
    fn andrews_involution_is_self_inverse(n in 2i64..=6, top in any::<bool>(), idx in any::<prop::sample::Index>()) {
        let k = if top { n } else { n - 1 };
        let slice = domain_slice(n, k, 22);
        let x = &slice[idx.index(slice.len())];
        let y = involution(n, k, x).unwrap();
        prop_assert_eq!(&involution(n, k, &y).unwrap(), x);
        if &y != x {
            prop_assert_eq!(y.weight(), -x.weight());
        }
    }

    #[test]
    fn marked_object_json_roundtrips(marker in -5i64..10, z in -2i64..3, p in arb_partition(6, 4)) {
        let x = MarkedObject::marked_z(marker, z, p);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(json.contains("z_shift"), z != 0);
        prop_assert_eq!(serde_json::from_str::<MarkedObject<Partition>>(&json).unwrap(), x);
    }
}
