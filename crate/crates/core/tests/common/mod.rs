#![allow(dead_code)]

use rand::Rng;
use rotschur::{DescentSet, Partition, QSymF};

/// `n! / ∏ hooks`, evaluated with exact integer arithmetic.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let parts = lambda.parts();
    let n = lambda.size() as u128;
    let mut numer: u128 = (1..=n).product();
    let mut denom: u128 = 1;
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&l| l > c).count();
            denom *= (arm + leg + 1) as u128;
        }
    }
    // keep the division exact
    let g = gcd(numer, denom);
    numer /= g;
    denom /= g;
    assert_eq!(denom, 1, "hook length formula must divide n!");
    numer
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random degree-`n` quasisymmetric function with a few small coefficients.
pub fn random_qsym<R: Rng>(rng: &mut R, n: usize) -> QSymF {
    let mut q = QSymF::zero(n);
    let terms = rng.gen_range(0..=4);
    for _ in 0..terms {
        let mask = rng.gen_range(0..1u64 << (n - 1));
        let c: i64 = rng.gen_range(-3..=3);
        q.add_term(DescentSet::from_mask(n, mask), c.into());
    }
    q
}

/// `(0..n)` subsets of `[m]` as descent sets with ambient size `n`.
pub fn subsets(n: usize, m: usize) -> impl Iterator<Item = DescentSet> {
    (0..1u64 << m).map(move |mask| DescentSet::from_mask(n, mask))
}
