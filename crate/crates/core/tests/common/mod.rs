//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's enumerators or q-algebra.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Every tuple of length `len` over `values` (odometer order).
pub fn tuples(values: &[u32], len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn nonincreasing(t: &[u32]) -> bool {
    t.windows(2).all(|w| w[0] >= w[1])
}

/// Nonincreasing sequences of length at most `max_len` over `values`, sorted.
pub fn naive_partitions(values: &[u32], max_len: usize, keep: impl Fn(&[u32]) -> bool) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> =
        (0..=max_len).flat_map(|len| tuples(values, len)).filter(|t| nonincreasing(t) && keep(t)).collect();
    out.sort();
    out.dedup();
    out
}

/// Distinct-part partitions with parts in `[lo, hi]`, via subsets.
pub fn naive_distinct(lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let parts: Vec<u32> = (lo..=hi).rev().collect();
    let mut out: Vec<Vec<u32>> = (0u64..1 << parts.len())
        .map(|mask| parts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect())
        .collect();
    out.sort();
    out
}

/// Number of partitions in an `rows × cols` box, by weight.
pub fn box_counts(rows: usize, cols: u32) -> Vec<u64> {
    let values: Vec<u32> = (0..=cols).collect();
    let mut counts = vec![0u64; rows * cols as usize + 1];
    for t in tuples(&values, rows).iter().filter(|t| nonincreasing(t)) {
        counts[t.iter().sum::<u32>() as usize] += 1;
    }
    counts
}

/// Dense truncated series helpers over `i64`.
pub fn mul_trunc(a: &[i64], b: &[i64], cap: usize) -> Vec<i64> {
    let mut out = vec![0i64; cap + 1];
    for (i, &x) in a.iter().enumerate().take(cap + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(cap + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn one(cap: usize) -> Vec<i64> {
    let mut v = vec![0i64; cap + 1];
    v[0] = 1;
    v
}

/// `(q^{n-k+1}; q)_{2k} q^{C(n-k,2)} / (q²; q²)_k` through `q^cap`.
pub fn andrews_summand(n: usize, k: usize, cap: usize) -> Vec<i64> {
    let mut acc = one(cap);
    for i in (n - k + 1)..=(n + k) {
        let mut f = one(cap);
        if i <= cap {
            f[i] = -1;
        }
        acc = mul_trunc(&acc, &f, cap);
    }
    for i in 1..=k {
        let geometric: Vec<i64> = (0..=cap).map(|e| i64::from(e % (2 * i) == 0)).collect();
        acc = mul_trunc(&acc, &geometric, cap);
    }
    let shift = (n - k) * (n - k).saturating_sub(1) / 2;
    let mut out = vec![0i64; cap + 1];
    for e in 0..=cap.saturating_sub(shift) {
        if e + shift <= cap {
            out[e + shift] = acc[e];
        }
    }
    out
}

pub fn andrews_oracle(n: usize, cap: usize) -> Vec<i64> {
    let mut total = vec![0i64; cap + 1];
    for k in 0..=n {
        for (t, s) in total.iter_mut().zip(andrews_summand(n, k, cap)) {
            *t += s;
        }
    }
    total
}

/// `(-q/z; q²)_m (-zq; q²)_n` expanded over all subsets of factors, keyed by `(z, q)`.
pub fn macmahon_rhs_oracle(n: u32, m: u32) -> BTreeMap<(i64, i64), i64> {
    let factors: Vec<(i64, i64)> =
        (0..m).map(|i| (-1, 2 * i as i64 + 1)).chain((0..n).map(|i| (1, 2 * i as i64 + 1))).collect();
    let mut out = BTreeMap::new();
    for mask in 0u64..1 << factors.len() {
        let (mut z, mut q) = (0, 0);
        for (i, (dz, dq)) in factors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                z += dz;
                q += dq;
            }
        }
        *out.entry((z, q)).or_insert(0) += 1;
    }
    out
}
