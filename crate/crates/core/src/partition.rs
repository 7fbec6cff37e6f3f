//! Integer partitions and compositions.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{DescentSet, Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// All partitions of `n`, lexicographically decreasing: `(n), (n-1,1), ...`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        gen_partitions(n, n, &mut current, &mut out);
        out
    }

    /// Dominance order `self ⊵ other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Partitions obtained by adding one box, in order of the row receiving it.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Containment of Young diagrams, `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (0..self.len()).all(|i| self.0[i] <= other.0[i])
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

fn gen_partitions(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        current.push(p);
        gen_partitions(n - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2`, `(3,2)` or `[3,2]`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// An ordered sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            let n = parts.iter().sum();
            return Err(Error::InvalidComposition { n, parts });
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `{e_1 < ... < e_k} ⊆ [n-1]  ↦  (e_1, e_2 - e_1, ..., n - e_k)`.
    pub fn from_subset(s: &DescentSet) -> Self {
        let n = s.n();
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut prev = 0;
        for e in s.iter().filter(|&e| e < n) {
            parts.push(e - prev);
            prev = e;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Composition(parts)
    }

    /// Partial sums, as a subset of `[n-1]`.
    pub fn to_subset(&self) -> DescentSet {
        let n = self.size();
        let mut s = DescentSet::empty(n);
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            s.insert(acc);
        }
        s
    }

    /// The partition with the same multiset of parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All compositions of `n`, ordered by their partial-sum subsets.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        let mut subsets: Vec<DescentSet> = (0..1u64 << (n - 1))
            .map(|m| DescentSet::from_mask(n, m))
            .collect();
        subsets.sort();
        subsets.iter().map(Composition::from_subset).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidShape(s.to_string()))
        })
        .collect()
}
