//! Dense multivariate polynomials with big-integer coefficients, used as an
//! oracle for identities between quasisymmetric functions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MExpansion, QSymF};
use crate::{Error, Result};

/// A polynomial in `x_1, ..., x_m`: exponent vector ↦ coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        super::add_into(&mut self.terms, exponents, c);
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::SizeMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Polynomial {
            nvars: self.nvars,
            terms: acc,
        })
    }
}

/// Expands `Σ c_D F_{n,D}(x_1, ..., x_m)` by listing the weakly increasing
/// index sequences `i_1 ≤ ... ≤ i_n` with `i_j < i_{j+1}` for `j ∈ D`.
pub fn f_to_polynomial(q: &QSymF, m: usize) -> Result<Polynomial> {
    if m < 1 {
        return Err(Error::NoVariables);
    }
    let mut out = Polynomial::zero(m);
    let n = q.n();
    for (d, c) in q.terms() {
        let strict: Vec<bool> = (1..n).map(|j| d.contains(j)).collect();
        let mut exps = vec![0u32; m];
        walk_sequences(&strict, 0, 0, n, &mut exps, &mut |e| {
            out.add_term(e.to_vec(), c.clone())
        });
    }
    Ok(out)
}

fn walk_sequences(
    strict: &[bool],
    pos: usize,
    min_index: usize,
    n: usize,
    exps: &mut [u32],
    emit: &mut dyn FnMut(&[u32]),
) {
    if pos == n {
        emit(exps);
        return;
    }
    for i in min_index..exps.len() {
        exps[i] += 1;
        let next_min = if pos + 1 < n && strict[pos] { i + 1 } else { i };
        walk_sequences(strict, pos + 1, next_min, n, exps, emit);
        exps[i] -= 1;
    }
}

pub(super) fn m_to_polynomial(mexp: &MExpansion, m: usize) -> Result<Polynomial> {
    if m < 1 {
        return Err(Error::NoVariables);
    }
    let mut out = Polynomial::zero(m);
    for (alpha, c) in mexp.terms() {
        let parts = alpha.parts();
        let mut exps = vec![0u32; m];
        choose_increasing(parts, 0, 0, &mut exps, &mut |e| {
            out.add_term(e.to_vec(), c.clone())
        });
    }
    Ok(out)
}

fn choose_increasing(
    parts: &[usize],
    pos: usize,
    start: usize,
    exps: &mut [u32],
    emit: &mut dyn FnMut(&[u32]),
) {
    if pos == parts.len() {
        emit(exps);
        return;
    }
    for i in start..exps.len() {
        exps[i] = parts[pos] as u32;
        choose_increasing(parts, pos + 1, i + 1, exps, emit);
        exps[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DescentSet;
    use num_traits::One;

    #[test]
    fn two_variable_examples() {
        let f = f_to_polynomial(&QSymF::fundamental(DescentSet::empty(2)).unwrap(), 2).unwrap();
        assert_eq!(f.len(), 3);
        for e in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(f.coeff(&e), BigInt::one());
        }
        let d = DescentSet::from_elements(2, [1]).unwrap();
        let g = f_to_polynomial(&QSymF::fundamental(d).unwrap(), 2).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.coeff(&[1, 1]), BigInt::one());
        assert!(f_to_polynomial(&QSymF::zero(3), 3).unwrap().is_zero());
        assert_eq!(f_to_polynomial(&QSymF::zero(3), 0), Err(Error::NoVariables));
    }

    #[test]
    fn product_of_linear_forms() {
        // (x1 + x2)^2 = F_{2,∅} + F_{2,{1}} evaluated in two variables
        let p1 = f_to_polynomial(&QSymF::fundamental(DescentSet::empty(1)).unwrap(), 2).unwrap();
        let sq = p1.mul(&p1).unwrap();
        let mut h2 = QSymF::fundamental(DescentSet::empty(2)).unwrap();
        h2.add_term(DescentSet::from_elements(2, [1]).unwrap(), BigInt::one());
        assert_eq!(sq, f_to_polynomial(&h2, 2).unwrap());
    }
}
