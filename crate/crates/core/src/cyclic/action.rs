use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{jdt, jdt_inverse};
use crate::tableau::enumerate_syt;
use crate::{reduce_mod, DescentSet, Error, Partition, Result, Shape, Tableau};

fn require_standard_boxed(p: &Tableau) -> Result<()> {
    if !p.shape().is_boxed() {
        return Err(Error::NotBoxed);
    }
    if !p.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(())
}

/// `cDes(P) = cDes_rot(jdt⁻¹(P))` for `P ∈ SYT(λ^□)`.
pub fn cdes_boxed(p: &Tableau) -> Result<DescentSet> {
    require_standard_boxed(p)?;
    Ok(jdt_inverse(p)?.cdes_rot())
}

/// The generator `P ↦ jdt(1 + jdt⁻¹(P))`.
pub fn psi_generator(p: &Tableau) -> Result<Tableau> {
    require_standard_boxed(p)?;
    Ok(jdt(&jdt_inverse(p)?.add_mod(1))?.0)
}

/// `ψ(k)P`: the generator applied `k mod n` times.
pub fn psi(p: &Tableau, k: i64) -> Result<Tableau> {
    require_standard_boxed(p)?;
    let mut t = p.clone();
    for _ in 0..reduce_mod(k, p.n()) {
        t = psi_generator(&t)?;
    }
    Ok(t)
}

/// `jdt(k + jdt⁻¹(P))` in one shot. Agrees with [`psi`].
pub fn psi_direct(p: &Tableau, k: i64) -> Result<Tableau> {
    require_standard_boxed(p)?;
    Ok(jdt(&jdt_inverse(p)?.add_mod(k))?.0)
}

/// The `ψ`-orbits of `SYT(λ^□)`, each listed from its smallest member
/// (in enumeration order) along the generator.
pub fn psi_orbits(lambda: &Partition) -> Result<Vec<Vec<Tableau>>> {
    let all = enumerate_syt(&Shape::boxed(lambda.clone())?);
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for p in all {
        if seen.contains(&p) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut t = p.clone();
        loop {
            seen.insert(t.clone());
            orbit.push(t.clone());
            t = psi_generator(&t)?;
            if t == p {
                break;
            }
            if seen.contains(&t) || orbit.len() > p.n() {
                return Err(Error::OutsideDomain(alloc::format!(
                    "generator is not a permutation near {p:?}"
                )));
            }
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}
