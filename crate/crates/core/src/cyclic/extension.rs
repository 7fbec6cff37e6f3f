use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt::Debug;

use super::{cdes_boxed, psi};
use crate::tableau::enumerate_syt;
use crate::{DescentSet, Error, Partition, Permutation, Result, Shape, Tableau};

/// A finite set with a descent map, a candidate cyclic descent map and a
/// candidate `ℤ_n`-action.
pub trait CyclicExtension {
    type Object: Clone + Ord + Debug;

    fn n(&self) -> usize;
    fn objects(&self) -> Result<Vec<Self::Object>>;
    fn des(&self, x: &Self::Object) -> Result<DescentSet>;
    fn cdes(&self, x: &Self::Object) -> Result<DescentSet>;
    /// `ψ(k)x` for `0 ≤ k < n`.
    fn act(&self, k: usize, x: &Self::Object) -> Result<Self::Object>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `ψ(0)x ≠ x`.
    Identity,
    /// `ψ(a)ψ(b)x ≠ ψ(a+b)x`.
    Composition { a: usize, b: usize },
    /// `cDes(x) ∩ [n-1] ≠ Des(x)`.
    RestrictsToDes,
    /// `cDes(ψ(k)x) ≠ k + cDes(x)`.
    Rotation { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Index into the object list.
    pub object: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub n: usize,
    pub objects: usize,
    pub violations: Vec<Violation>,
}

impl ExtensionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the action laws and both cyclic-descent-extension axioms on every
/// object and every `k`.
pub fn verify_extension<W: CyclicExtension>(w: &W) -> Result<ExtensionReport> {
    let n = w.n();
    let objects = w.objects()?;
    let index: BTreeMap<&W::Object, usize> =
        objects.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut violations = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        let orbit: Vec<usize> = (0..n)
            .map(|k| {
                let y = w.act(k, x)?;
                index
                    .get(&y)
                    .copied()
                    .ok_or(Error::ActionNotClosed { object: i, k })
            })
            .collect::<Result<_>>()?;
        if orbit[0] != i {
            violations.push(Violation {
                object: i,
                kind: ViolationKind::Identity,
            });
        }
        for b in 0..n {
            let y = &objects[orbit[b]];
            for a in 0..n {
                let z = w.act(a, y)?;
                if index.get(&z) != Some(&orbit[(a + b) % n]) {
                    violations.push(Violation {
                        object: i,
                        kind: ViolationKind::Composition { a, b },
                    });
                }
            }
        }
        let c = w.cdes(x)?;
        if c.truncate(n - 1) != w.des(x)? {
            violations.push(Violation {
                object: i,
                kind: ViolationKind::RestrictsToDes,
            });
        }
        for (k, &j) in orbit.iter().enumerate() {
            if w.cdes(&objects[j])? != c.rotate(k as i64) {
                violations.push(Violation {
                    object: i,
                    kind: ViolationKind::Rotation { k },
                });
            }
        }
    }
    Ok(ExtensionReport {
        n,
        objects: objects.len(),
        violations,
    })
}

/// `S_n` with `ψ(k)π = π c^{-k}` and Cellini's cyclic descents.
pub struct PermutationRotation {
    pub n: usize,
}

impl CyclicExtension for PermutationRotation {
    type Object = Permutation;

    fn n(&self) -> usize {
        self.n
    }

    fn objects(&self) -> Result<Vec<Permutation>> {
        Ok(Permutation::all(self.n).collect())
    }

    fn des(&self, x: &Permutation) -> Result<DescentSet> {
        Ok(x.descent_set())
    }

    fn cdes(&self, x: &Permutation) -> Result<DescentSet> {
        x.cyclic_descent_set()
    }

    fn act(&self, k: usize, x: &Permutation) -> Result<Permutation> {
        Ok(x.rotate(-(k as i64)))
    }
}

/// Rotated standard tableaux of a fixed shape, with `ψ(k)R = k + R` and
/// `cDes_rot`; here `Des(R) = cDes_rot(R) ∩ [n-1]`.
pub struct RotatedTableaux {
    pub shape: Shape,
}

impl CyclicExtension for RotatedTableaux {
    type Object = Tableau;

    fn n(&self) -> usize {
        self.shape.size()
    }

    fn objects(&self) -> Result<Vec<Tableau>> {
        let n = self.n() as i64;
        let all: BTreeSet<Tableau> = enumerate_syt(&self.shape)
            .iter()
            .flat_map(|t| (0..n).map(move |k| t.add_mod(k)))
            .collect();
        Ok(all.into_iter().collect())
    }

    fn des(&self, x: &Tableau) -> Result<DescentSet> {
        Ok(x.row_descents())
    }

    fn cdes(&self, x: &Tableau) -> Result<DescentSet> {
        Ok(x.cdes_rot())
    }

    fn act(&self, k: usize, x: &Tableau) -> Result<Tableau> {
        Ok(x.add_mod(k as i64))
    }
}

/// `SYT(λ^□)` with the straightening action `ψ` and `cDes(P) = cDes_rot(jdt⁻¹(P))`.
pub struct BoxedTableaux {
    pub lambda: Partition,
}

impl CyclicExtension for BoxedTableaux {
    type Object = Tableau;

    fn n(&self) -> usize {
        self.lambda.size() + 1
    }

    fn objects(&self) -> Result<Vec<Tableau>> {
        Ok(enumerate_syt(&Shape::boxed(self.lambda.clone())?))
    }

    fn des(&self, x: &Tableau) -> Result<DescentSet> {
        x.descent_set()
    }

    fn cdes(&self, x: &Tableau) -> Result<DescentSet> {
        cdes_boxed(x)
    }

    fn act(&self, k: usize, x: &Tableau) -> Result<Tableau> {
        psi(x, k as i64)
    }
}
