//! Permutations in one-line notation, descent statistics, horizontal
//! rotations and multisets of permutations.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{reduce_mod, DescentSet, Error, Result, MAX_SIZE};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > MAX_SIZE {
            return Err(Error::UnsupportedSize(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { n, word });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_SIZE).contains(&n));
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The long cycle `c = (1, 2, ..., n)`, i.e. `c(i) = i + 1` and `c(n) = 1`.
    pub fn long_cycle(n: usize) -> Self {
        assert!((1..=MAX_SIZE).contains(&n));
        Permutation {
            word: (2..=n).chain(core::iter::once(1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// `{i ∈ [n-1] : π(i) > π(i+1)}`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.n();
        let mut d = DescentSet::empty(n);
        for i in 1..n {
            if self.word[i - 1] > self.word[i] {
                d.insert(i);
            }
        }
        d
    }

    /// Cellini's cyclic descent set: `Des(π)`, plus `n` when `π(n) > π(1)`.
    pub fn cyclic_descent_set(&self) -> Result<DescentSet> {
        let n = self.n();
        if n < 2 {
            return Err(Error::CyclicDescentUndefined);
        }
        let mut d = self.descent_set();
        if self.word[n - 1] > self.word[0] {
            d.insert(n);
        }
        Ok(d)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&j| self.word[j - 1]).collect(),
        })
    }

    /// Horizontal rotation `π c^k`: `(π c^k)(i) = π(i + k mod n)`.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.n();
        let shift = reduce_mod(k, n);
        Permutation {
            word: (0..n).map(|i| self.word[(i + shift) % n]).collect(),
        }
    }

    /// Vertical rotation `c^k π`: every value is shifted by `k` modulo `n`.
    pub fn rotate_values(&self, k: i64) -> Self {
        let n = self.n();
        let shift = reduce_mod(k, n);
        Permutation {
            word: self.word.iter().map(|&v| (v - 1 + shift) % n + 1).collect(),
        }
    }

    /// Embed into `S_{n+1}` by appending the letter `n + 1`.
    pub fn embed(&self) -> Self {
        let mut word = self.word.clone();
        word.push(self.n() + 1);
        Permutation { word }
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        assert!((1..=MAX_SIZE).contains(&n));
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lex(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        for (idx, v) in self.word.iter().enumerate() {
            if idx > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`"3142"`) for `n ≤ 9`, comma-separated integers otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidFilling(s.to_string());
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// A finite multiset of permutations of a common size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermMultiset {
    n: usize,
    entries: BTreeMap<Permutation, u64>,
}

impl PermMultiset {
    pub fn new(n: usize) -> Self {
        PermMultiset {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// A set (all multiplicities 1); duplicates accumulate.
    pub fn from_perms<I: IntoIterator<Item = Permutation>>(n: usize, perms: I) -> Result<Self> {
        let mut m = PermMultiset::new(n);
        for p in perms {
            m.insert(p, 1)?;
        }
        Ok(m)
    }

    /// The cyclic subgroup `C_n = {c^k : 0 ≤ k < n}`.
    pub fn cyclic_group(n: usize) -> Self {
        let mut m = PermMultiset::new(n);
        let mut c = Permutation::identity(n);
        let gen = Permutation::long_cycle(n);
        for _ in 0..n {
            m.entries.insert(c.clone(), 1);
            c = c.compose(&gen).expect("same size");
        }
        m
    }

    pub fn insert(&mut self, p: Permutation, mult: u64) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        if mult > 0 {
            *self.entries.entry(p).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct members.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, p: &Permutation) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, u64)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    /// Multiset union (multiplicities add).
    pub fn extend(&mut self, other: &PermMultiset) -> Result<()> {
        for (p, m) in other.iter() {
            self.insert(p.clone(), m)?;
        }
        Ok(())
    }

    /// Elementwise inverse.
    pub fn inverse(&self) -> Self {
        PermMultiset {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(p, &m)| (p.inverse(), m))
                .collect(),
        }
    }

    /// `A C_n` for `A ⊆ S_{n-1}`: embed each member by appending `n`, then
    /// take all horizontal rotations `π̂ c^{-k}`, `0 ≤ k < n`.
    pub fn horizontal_closure(&self) -> Self {
        let n = self.n + 1;
        let mut out = PermMultiset::new(n);
        for (p, m) in self.iter() {
            let hat = p.embed();
            for k in 0..n {
                *out.entries.entry(hat.rotate(-(k as i64))).or_insert(0) += m;
            }
        }
        out
    }

    /// `C_n A` for `A ⊆ S_{n-1}`: vertical rotations `c^k π̂`.
    pub fn left_closure(&self) -> Self {
        let n = self.n + 1;
        let mut out = PermMultiset::new(n);
        for (p, m) in self.iter() {
            let hat = p.embed();
            for k in 0..n {
                *out.entries.entry(hat.rotate_values(k as i64)).or_insert(0) += m;
            }
        }
        out
    }
}

/// The descent class `D_{n,J} = {π : Des(π) = J}`, or its elementwise inverse.
pub fn descent_class(n: usize, j: &DescentSet, inverse: bool) -> Result<PermMultiset> {
    if j.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: j.n(),
        });
    }
    if j.contains(n) {
        return Err(Error::ElementOutOfRange {
            element: n,
            bound: n - 1,
        });
    }
    let members = Permutation::all(n)
        .filter(|p| p.descent_set() == *j)
        .map(|p| if inverse { p.inverse() } else { p });
    PermMultiset::from_perms(n, members)
}

/// `Des(σ̂ c^{-k}) = ((k + D) \ {n}) ∪ {k}` for `σ ∈ S_{n-1}` with `Des(σ) = D`,
/// `1 ≤ k ≤ n-1`. `D` is given with ambient size `n - 1`.
pub fn rotated_descent_formula(d: &DescentSet, k: usize) -> Result<DescentSet> {
    let n = d.n() + 1;
    if k == 0 || k >= n {
        return Err(Error::RotationOutOfRange { k, max: n - 1 });
    }
    let mut out = d.with_size(n)?.rotate(k as i64);
    out.remove(n);
    out.insert(k);
    Ok(out)
}
