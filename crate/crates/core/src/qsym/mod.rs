//! Exact quasisymmetric and symmetric function arithmetic.
//!
//! A degree-`n` quasisymmetric function is stored in the fundamental basis
//! `F_{n,D}`, `D ⊆ [n-1]`. The monomial quasisymmetric basis `M_α` is used to
//! decide symmetry and to peel off Schur functions; the dense polynomial in
//! finitely many variables is kept as an independent oracle.

mod poly;
mod schur;

pub use poly::{f_to_polynomial, Polynomial};
pub use schur::{kostka, pieri_s1, schur_expand, schur_in_f, schur_in_m};

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Composition, DescentSet, Error, Partition, PermMultiset, Result};

/// A homogeneous degree-`n` quasisymmetric function in the fundamental basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymF {
    n: usize,
    coeffs: BTreeMap<DescentSet, BigInt>,
}

impl QSymF {
    pub fn zero(n: usize) -> Self {
        QSymF {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `F_{n,D}`.
    pub fn fundamental(d: DescentSet) -> Result<Self> {
        let n = d.n();
        if n > 0 && d.contains(n) {
            return Err(Error::ElementOutOfRange {
                element: n,
                bound: n - 1,
            });
        }
        let mut q = QSymF::zero(n);
        q.add_term(d, BigInt::one());
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, d: &DescentSet) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DescentSet, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · F_{n,D}`.
    pub fn add_term(&mut self, d: DescentSet, c: BigInt) {
        assert_eq!(d.n(), self.n, "index has the wrong ambient size");
        add_into(&mut self.coeffs, d, c);
    }

    /// `self + c · other`.
    pub fn add_scaled(&mut self, other: &QSymF, c: &BigInt) -> Result<()> {
        if other.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        for (d, v) in other.terms() {
            add_into(&mut self.coeffs, *d, v * c);
        }
        Ok(())
    }
}

/// An expansion in the monomial quasisymmetric basis `M_α`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MExpansion {
    n: usize,
    coeffs: BTreeMap<Composition, BigInt>,
}

impl MExpansion {
    pub fn zero(n: usize) -> Self {
        MExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: BigInt) {
        assert_eq!(alpha.size(), self.n, "composition has the wrong size");
        add_into(&mut self.coeffs, alpha, c);
    }

    pub fn add_scaled(&mut self, other: &MExpansion, c: &BigInt) -> Result<()> {
        if other.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        for (a, v) in other.terms() {
            add_into(&mut self.coeffs, a.clone(), v * c);
        }
        Ok(())
    }

    /// `M_α(x_1, ..., x_m) = Σ_{i_1 < ... < i_k} x_{i_1}^{α_1} ⋯ x_{i_k}^{α_k}`.
    pub fn to_polynomial(&self, m: usize) -> Result<Polynomial> {
        poly::m_to_polynomial(self, m)
    }
}

/// An integer combination of Schur functions `s_λ`, `λ ⊢ n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero(n: usize) -> Self {
        SchurExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single term `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut e = SchurExpansion::zero(lambda.size());
        e.add_term(lambda, BigInt::one());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms with the dominance-largest partitions first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        assert_eq!(lambda.size(), self.n, "partition has the wrong size");
        add_into(&mut self.coeffs, lambda, c);
    }

    /// Back to the fundamental basis, `s_λ ↦ Σ_{T ∈ SYT(λ)} F_{Des(T)}`.
    pub fn to_qsym(&self) -> QSymF {
        let mut q = QSymF::zero(self.n);
        for (lambda, c) in self.terms() {
            q.add_scaled(&schur_in_f(&crate::Shape::straight(lambda.clone())), c)
                .expect("same degree");
        }
        q
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `𝒬(B) = Σ_{π ∈ B} F_{n,Des(π)}`, counting multiplicities.
pub fn q_of(b: &PermMultiset) -> QSymF {
    let mut q = QSymF::zero(b.n());
    for (p, mult) in b.iter() {
        q.add_term(p.descent_set(), BigInt::from(mult));
    }
    q
}

/// `F_{n,D} = Σ_{E ⊇ D} M_{comp(E)}`, extended linearly.
pub fn f_to_m(q: &QSymF) -> MExpansion {
    let n = q.n();
    let mut out = MExpansion::zero(n);
    let full = if n == 0 { 0 } else { (1u64 << (n - 1)) - 1 };
    for (d, c) in q.terms() {
        let base = d.mask();
        let free = full & !base;
        let mut sub = free;
        loop {
            let e = DescentSet::from_mask(n, base | sub);
            out.add_term(Composition::from_subset(&e), c.clone());
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    out
}

/// True when every two compositions with the same parts carry the same
/// `M`-coefficient.
pub fn is_symmetric(q: &QSymF) -> bool {
    m_is_symmetric(&f_to_m(q))
}

pub(crate) fn m_is_symmetric(m: &MExpansion) -> bool {
    let mut groups: BTreeMap<Partition, (BigInt, u64)> = BTreeMap::new();
    for (alpha, c) in m.terms() {
        let slot = groups
            .entry(alpha.sorted())
            .or_insert_with(|| (c.clone(), 0));
        if slot.0 != *c {
            return false;
        }
        slot.1 += 1;
    }
    groups
        .iter()
        .all(|(mu, (_, count))| *count == rearrangements(mu))
}

/// Number of distinct orderings of the parts of `mu`.
fn rearrangements(mu: &Partition) -> u64 {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let run = (j - i) as u128;
        // multiply by C(placed + run, run)
        for t in 1..=run {
            total = total * (placed + t) / t;
        }
        placed += run;
        i = j;
    }
    total as u64
}

/// Symmetric with nonnegative Schur coefficients.
pub fn is_schur_positive(q: &QSymF) -> bool {
    match schur_expand(q) {
        Ok(e) => e.is_nonnegative(),
        Err(_) => false,
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt) -> fmt::Result {
    let mag = c.abs();
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    Ok(())
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            write_coeff(f, i == 0, c)?;
            write!(f, "F{d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for MExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.terms().enumerate() {
            write_coeff(f, i == 0, c)?;
            write!(f, "M{a}")?;
        }
        Ok(())
    }
}

/// Renders like `2*s[2,2] + s[3,1]`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().enumerate() {
            write_coeff(f, i == 0, c)?;
            f.write_str("s[")?;
            for (j, p) in lambda.parts().iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::descent_class;
    use crate::Permutation;
    use alloc::string::ToString;

    fn set(n: usize, e: &[usize]) -> DescentSet {
        DescentSet::from_elements(n, e.iter().copied()).unwrap()
    }

    fn perms(n: usize, words: &[&str]) -> PermMultiset {
        PermMultiset::from_perms(n, words.iter().map(|w| w.parse::<Permutation>().unwrap()))
            .unwrap()
    }

    #[test]
    fn q_of_examples() {
        let id = PermMultiset::from_perms(4, [Permutation::identity(4)]).unwrap();
        assert_eq!(q_of(&id), QSymF::fundamental(DescentSet::empty(4)).unwrap());

        let cn = q_of(&PermMultiset::cyclic_group(5));
        let mut expected = QSymF::zero(5);
        expected.add_term(DescentSet::empty(5), BigInt::one());
        for k in 1..5 {
            expected.add_term(set(5, &[k]), BigInt::one());
        }
        assert_eq!(cn, expected);

        let d = descent_class(3, &set(3, &[1]), false).unwrap();
        assert_eq!(q_of(&d).to_string(), "2*F{1}");
    }

    #[test]
    fn f_to_m_examples() {
        let m = f_to_m(&QSymF::fundamental(DescentSet::empty(3)).unwrap());
        assert_eq!(m.to_string(), "M(1,1,1) + M(1,2) + M(2,1) + M(3)");
        let top = f_to_m(&QSymF::fundamental(set(4, &[1, 2, 3])).unwrap());
        assert_eq!(top.to_string(), "M(1,1,1,1)");
    }

    #[test]
    fn symmetry_examples() {
        assert!(!is_symmetric(&q_of(&perms(3, &["132"]))));
        assert!(is_symmetric(&q_of(&PermMultiset::cyclic_group(6))));
        assert!(is_symmetric(&QSymF::zero(4)));
    }

    #[test]
    fn rearrangement_counts() {
        let r = |s: &str| rearrangements(&s.parse().unwrap());
        assert_eq!(r("3"), 1);
        assert_eq!(r("2,1"), 2);
        assert_eq!(r("2,1,1"), 3);
        assert_eq!(r("3,2,1"), 6);
        assert_eq!(r("1,1,1,1"), 1);
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut q = QSymF::fundamental(set(3, &[1])).unwrap();
        q.add_term(set(3, &[1]), BigInt::from(-1));
        assert!(q.is_zero());
        assert_eq!(q, QSymF::zero(3));
    }

    #[test]
    fn schur_display() {
        let mut e = SchurExpansion::zero(4);
        e.add_term("3,1".parse().unwrap(), BigInt::one());
        e.add_term("4".parse().unwrap(), BigInt::one());
        e.add_term("2,2".parse().unwrap(), BigInt::from(-2));
        assert_eq!(e.to_string(), "s[4] + s[3,1] - 2*s[2,2]");
        assert_eq!(SchurExpansion::zero(3).to_string(), "0");
    }
}
