//! Galois-theoretic layer over `k = F_q(t)`: Artin–Schreier classes of
//! rational functions, the field of definition of the 2-power torsion of an
//! ordinary curve, decomposition groups of that field at places of `k`, and
//! the resulting order of Ш¹(k, E[2^N]) — the group of cohomology classes
//! that die in every completion.
//!
//! The route is entirely place-local: quadratic extensions of `k` are
//! presented by reduced Artin–Schreier representatives, their splitting
//! behaviour at a place is read off Laurent expansions, and the global
//! verdict needs only the finitely many ramified places.
//!
//! Integer divisibility inside a finitely generated Mordell–Weil group lives
//! here too ([`mw`]); it supplies the "not globally divisible" half of the
//! local-global comparisons.

use crate::algebra::{AlgebraError, Place};
use crate::local::LocalError;

mod asclass;
mod decomp;
mod mw;
mod sha;
mod torsion;

pub use asclass::ArtinSchreierClass;
pub use decomp::{decomposition_group, DecompositionReport};
pub use mw::{MordellWeilElement, MordellWeilGroup};
pub use sha::{sha1_order, Sha1Reason, Sha1Verdict};
pub use torsion::{torsion_field, TorsionField};

/// Failure modes of the Galois-layer computations.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum GaloisError {
    /// Torsion fields are presented explicitly only up to the 8-torsion; a
    /// request above level 3 whose j-invariant is a 16-th power would need a
    /// presentation this crate does not have.
    #[error("no torsion-field presentation above level 3 (level {requested} requested)")]
    UnsupportedLevel { requested: u32 },
    /// Exactly two of the three quadratic subextensions split at a place,
    /// which trace additivity rules out; signals an implementation bug.
    #[error("inconsistent splitting triple at {place}")]
    InconsistentTriple { place: Place },
    /// A coordinate vector does not match its group presentation.
    #[error("coordinate vector does not match the group presentation")]
    MismatchedCoordinates,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Local(#[from] LocalError),
}
