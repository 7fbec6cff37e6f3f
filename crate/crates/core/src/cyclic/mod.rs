//! Straightening of rotated `λ^□` tableaux and the cyclic structure it
//! induces on `SYT(λ^□)`.
//!
//! `jdt` takes `k + T` (with `T` standard of shape `λ^□` and `δ(T) = n`) to a
//! standard tableau with `δ = k` by repeated elementary steps; `ijdt` undoes
//! it. Conjugating `+1` by `jdt` gives a `ℤ_n`-action `ψ` on `SYT(λ^□)`
//! that rotates the cyclic descent set `cDes(P) = cDes_rot(jdt⁻¹(P))`.

mod action;
mod extension;
mod straighten;

pub use action::{cdes_boxed, psi, psi_direct, psi_generator, psi_orbits};
pub use extension::{
    verify_extension, BoxedTableaux, CyclicExtension, ExtensionReport, PermutationRotation,
    RotatedTableaux, Violation, ViolationKind,
};
pub use straighten::{
    check_jdt_trace, elementary_step, elementary_step_inv, ijdt, jdt, jdt_inverse, Direction, Step,
    StraighteningTrace, TraceViolation,
};
