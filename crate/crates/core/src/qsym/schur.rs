//! Schur functions: fundamental and monomial expansions, Schur expansion by
//! back-substitution, and multiplication by `s_1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{f_to_m, m_is_symmetric, MExpansion, QSymF, SchurExpansion};
use crate::tableau::enumerate_syt;
use crate::{Composition, Error, Partition, Result, Shape};

/// `s_{shape} = Σ_{T ∈ SYT(shape)} F_{n,Des(T)}`; straight, skew or boxed.
pub fn schur_in_f(shape: &Shape) -> QSymF {
    let mut q = QSymF::zero(shape.size());
    for t in enumerate_syt(shape) {
        q.add_term(t.row_descents(), BigInt::one());
    }
    q
}

/// Number of semistandard tableaux of shape `lambda` and content `content`,
/// generated as chains of horizontal strips.
pub fn kostka(lambda: &Partition, content: &[usize]) -> u64 {
    if lambda.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let target = lambda.parts();
    let mut current = alloc::vec![0usize; target.len()];
    count_strips(target, content, &mut current)
}

fn count_strips(target: &[usize], content: &[usize], current: &mut Vec<usize>) -> u64 {
    match content.split_first() {
        None => u64::from(current.as_slice() == target),
        Some((&size, rest)) => {
            let before = current.clone();
            let mut total = 0;
            add_strip(target, &before, current, 0, size, &mut |cur| {
                total += count_strips(target, rest, cur)
            });
            total
        }
    }
}

/// Enumerates ways of growing `before` by a horizontal strip of `remaining`
/// boxes, row by row, staying inside `target`.
fn add_strip(
    target: &[usize],
    before: &[usize],
    current: &mut Vec<usize>,
    row: usize,
    remaining: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    if row == target.len() {
        return;
    }
    // a horizontal strip puts at most one box per column, so row `row` may
    // grow up to the old length of the row above it
    let cap = if row == 0 {
        target[0]
    } else {
        target[row].min(before[row - 1])
    };
    let max_add = cap.saturating_sub(before[row]).min(remaining);
    for add in 0..=max_add {
        current[row] = before[row] + add;
        add_strip(target, before, current, row + 1, remaining - add, visit);
    }
    current[row] = before[row];
}

/// `s_λ = Σ_α K_{λ,α} M_α` over all compositions `α ⊨ n`.
pub fn schur_in_m(lambda: &Partition) -> MExpansion {
    let n = lambda.size();
    let mut out = MExpansion::zero(n);
    for alpha in Composition::all(n) {
        let k = kostka(lambda, alpha.parts());
        if k > 0 {
            out.add_term(alpha, BigInt::from(k));
        }
    }
    out
}

/// The Schur expansion of a symmetric `q`.
///
/// Repeatedly takes the lexicographically largest partition `μ` whose
/// `M`-coefficient `a` is nonzero (lexicographic order extends dominance),
/// records `a · s_μ` and subtracts `a · s_μ` from the remainder.
///
/// # Panics
///
/// If the remainder is nonzero once no partition-indexed coefficient is
/// left. That cannot happen for a symmetric input.
pub fn schur_expand(q: &QSymF) -> Result<SchurExpansion> {
    let n = q.n();
    let mut rem = f_to_m(q);
    if !m_is_symmetric(&rem) {
        return Err(Error::NotSymmetric);
    }
    let partitions = Partition::all(n);
    let mut cache: BTreeMap<Partition, MExpansion> = BTreeMap::new();
    let mut out = SchurExpansion::zero(n);
    loop {
        let lead = partitions.iter().find_map(|mu| {
            let a = rem.coeff(&mu.as_composition());
            (!a.is_zero()).then(|| (mu.clone(), a))
        });
        let Some((mu, a)) = lead else { break };
        let s_mu = cache.entry(mu.clone()).or_insert_with(|| schur_in_m(&mu));
        rem.add_scaled(s_mu, &-&a).expect("same degree");
        out.add_term(mu, a);
    }
    assert!(
        rem.is_zero(),
        "Schur back-substitution left a nonzero remainder: {rem}"
    );
    Ok(out)
}

/// `e · s_1` by Pieri's rule: each `s_λ` becomes the sum of `s_μ` over the
/// partitions `μ` obtained by adding one box to `λ`.
pub fn pieri_s1(e: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero(e.n() + 1);
    for (lambda, c) in e.terms() {
        for mu in lambda.add_one_box() {
            out.add_term(mu, c.clone());
        }
    }
    out
}
