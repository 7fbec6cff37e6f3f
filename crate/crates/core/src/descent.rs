//! Subsets of `[n] = {1, ..., n}` used as descent and cyclic descent sets.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{reduce_mod, Error, Result, MAX_SIZE};

/// A subset of `{1, ..., n}`.
///
/// Linear descent sets live in `[n-1]`; cyclic descent sets may contain `n`.
/// Element `i` is stored as bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    bits: u64,
}

impl DescentSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_SIZE, "size {n} exceeds {MAX_SIZE}");
        DescentSet { n, bits: 0 }
    }

    /// The full set `[m]` inside ambient size `n`.
    pub fn interval(n: usize, m: usize) -> Self {
        assert!(m <= n && n <= MAX_SIZE);
        DescentSet {
            n,
            bits: low_mask(m),
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        if n > MAX_SIZE {
            return Err(Error::UnsupportedSize(n));
        }
        let mut s = DescentSet::empty(n);
        for e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    bound: n,
                });
            }
            s.bits |= 1 << (e - 1);
        }
        Ok(s)
    }

    /// Build from a bit mask (bit `i - 1` means `i` is present).
    pub fn from_mask(n: usize, bits: u64) -> Self {
        assert!(
            n <= MAX_SIZE && bits & !low_mask(n) == 0,
            "mask outside [n]"
        );
        DescentSet { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n && self.bits & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i >= 1 && i <= self.n, "element {i} outside [{}]", self.n);
        self.bits |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        if i >= 1 && i <= self.n {
            self.bits &= !(1 << (i - 1));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// True when the set is all of `[n]`.
    pub fn is_full(&self) -> bool {
        self.bits == low_mask(self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..=self.n).filter(move |&i| bits & (1 << (i - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `k + D` with addition modulo `n` on `{1, ..., n}`.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.n;
        if n == 0 {
            return *self;
        }
        let shift = reduce_mod(k, n);
        let mut out = DescentSet::empty(n);
        for i in self.iter() {
            out.insert((i - 1 + shift) % n + 1);
        }
        out
    }

    /// `D ∩ [m]`, keeping ambient size `n`.
    pub fn truncate(&self, m: usize) -> Self {
        DescentSet {
            n: self.n,
            bits: self.bits & low_mask(m.min(self.n)),
        }
    }

    /// Same elements, new ambient size (all elements must fit).
    pub fn with_size(&self, n: usize) -> Result<Self> {
        DescentSet::from_elements(n, self.iter())
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.bits & !other.bits == 0
    }
}

fn low_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

// Ordered by ambient size, then cardinality, then lexicographically on the
// sorted elements: ∅ < {1} < {2} < {1,2} < ...
impl Ord for DescentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for DescentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, i) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}⊆[{}]", self.n)
    }
}
