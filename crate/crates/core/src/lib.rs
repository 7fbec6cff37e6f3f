//! Descent and cyclic-descent combinatorics of permutations and tableaux,
//! exact quasisymmetric function arithmetic, and the jeu-de-taquin
//! straightening that carries horizontal rotations of permutations onto
//! standard Young tableaux of boxed shapes `λ^□`.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact.
//!
//! Positions and values are 1-based everywhere. Modular arithmetic on
//! `{1, ..., n}` identifies the residue 0 with `n`.

#![no_std]

extern crate alloc;

mod error;

pub mod cyclic;
pub mod descent;
pub mod partition;
pub mod perm;
pub mod qsym;
pub mod rsk;
pub mod shape;
pub mod tableau;

pub use error::{Error, Result};

pub use cyclic::{
    cdes_boxed, elementary_step, elementary_step_inv, ijdt, jdt, jdt_inverse, psi, psi_direct,
    psi_orbits, verify_extension, CyclicExtension, ExtensionReport, StraighteningTrace,
};
pub use descent::DescentSet;
pub use partition::{Composition, Partition};
pub use perm::{PermMultiset, Permutation};
pub use qsym::{MExpansion, Polynomial, QSymF, SchurExpansion};
pub use rsk::rsk;
pub use shape::Shape;
pub use tableau::Tableau;

/// Largest supported size `n`. Descent sets are stored as 64-bit masks.
pub const MAX_SIZE: usize = 64;

/// Reduce a signed shift into `0..n`.
pub(crate) fn reduce_mod(k: i64, n: usize) -> usize {
    k.rem_euclid(n as i64) as usize
}
