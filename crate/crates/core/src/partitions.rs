//! Partitions with explicit zero parts, square sides, and the finite
//! enumerators used by both case studies.
//!
//! Zero parts are significant: `(0)` and `∅` are different partitions, which
//! is what lets a staircase always lose its first two rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A nonincreasing sequence of nonnegative parts.
///
/// Derived ordering is lexicographic on the part list, which is the canonical
/// order every enumerator returns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonincreasing(parts));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest part, with `0` for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.contains(&part)
    }

    /// Strictly decreasing positive parts (the set `D`).
    pub fn is_distinct(&self) -> bool {
        self.0.iter().all(|&p| p > 0) && self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// All parts positive and even (the set `E`).
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|&p| p > 0 && p % 2 == 0)
    }

    /// Drops the first `rows` parts; `None` if there are fewer.
    pub fn drop_rows(&self, rows: usize) -> Option<Self> {
        (rows <= self.0.len()).then(|| Self(self.0[rows..].to_vec()))
    }

    /// Inserts a part, keeping the sequence nonincreasing.
    pub fn with_part(&self, part: u32) -> Self {
        let mut parts = self.0.clone();
        let at = parts.partition_point(|&p| p >= part);
        parts.insert(at, part);
        Self(parts)
    }

    /// Removes one copy of `part`; `None` if absent.
    pub fn without_part(&self, part: u32) -> Option<Self> {
        let at = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(at);
        Some(Self(parts))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// The square partition `S_k`: `|k|` parts equal to `|k|`, with the sign of `k`
/// carried as a formal tag. Serializes as the bare integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SquareSide(pub i64);

impl SquareSide {
    pub fn k(self) -> i64 {
        self.0
    }

    /// `|S_k| = k^2`.
    pub fn weight(self) -> i64 {
        self.0 * self.0
    }

    pub fn rows(self) -> u32 {
        self.0.unsigned_abs() as u32
    }
}

impl fmt::Display for SquareSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}", self.0)
    }
}

/// `(r-1, r-2, ..., 1, 0)`; `staircase(0)` is empty.
pub fn staircase(r: u32) -> Partition {
    Partition((0..r).rev().collect())
}

/// Distinct-part partitions with every part in `[lo, hi]`; `{∅}` if the range is empty.
pub fn enum_distinct_range(lo: u32, hi: u32) -> Vec<Partition> {
    assert!(lo >= 1, "distinct parts must be positive");
    let mut out = Vec::new();
    let mut cur = Vec::new();
    distinct_rec(lo, hi, &mut cur, &mut out);
    out.sort();
    out
}

fn distinct_rec(lo: u32, below: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(cur.clone()));
    for p in (lo..=below).rev() {
        cur.push(p);
        distinct_rec(lo, p - 1, cur, out);
        cur.pop();
    }
}

/// Even-part partitions fitting in a `max_len × max_part` box.
pub fn enum_even_bounded(max_part: u32, max_len: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    even_rec(max_part, max_len as usize, u32::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Even-part partitions with largest part at most `max_part` and weight at most `weight_cap`.
pub fn enum_even_capped(max_part: u32, weight_cap: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    even_rec(max_part, usize::MAX, weight_cap, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn even_rec(max_part: u32, len_left: usize, weight_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(cur.clone()));
    if len_left == 0 {
        return;
    }
    let top = max_part.min(weight_left) & !1;
    for p in (2..=top).rev().step_by(2) {
        cur.push(p);
        even_rec(p, len_left - 1, weight_left - p, cur, out);
        cur.pop();
    }
}
