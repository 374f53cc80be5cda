//! Decomposition groups of the biquadratic torsion field at places of `k`.
//!
//! With `G = Gal(k(u, v)/k) ≅ (Z/2)²` presented by two independent classes
//! `[f₁]`, `[f₂]`, the decomposition group at a place `v` is determined by
//! which of the three quadratic subextensions — cut out by `[f₁]`, `[f₂]`,
//! and `[f₁ + f₂]` — have `v` split: the fixed field of `D_v` is the largest
//! subfield in which `v` splits completely. No split means `D_v = G`; exactly
//! one split pins `D_v` to the order-2 subgroup fixing that layer; all three
//! splits force `D_v = 1`. Two splits are impossible (containment in two
//! distinct index-2 subgroups already forces the third).

use crate::algebra::Place;
use crate::local::{classify_at_place, LocalField, LocalSplitting};

use super::{ArtinSchreierClass, GaloisError};

/// The decomposition group at one place, with the splitting evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionReport {
    place: Place,
    verdicts: [LocalSplitting; 3],
    group_order: u32,
    is_full: bool,
}

impl DecompositionReport {
    pub fn place(&self) -> &Place {
        &self.place
    }

    /// Local verdicts for `[f₁]`, `[f₂]`, `[f₁ + f₂]`, in that order.
    pub fn verdicts(&self) -> [LocalSplitting; 3] {
        self.verdicts
    }

    /// `|D_v|`: 4, 2, or 1.
    pub fn group_order(&self) -> u32 {
        self.group_order
    }

    /// Whether `D_v` is all of `G` (order 4 under the rank-2 precondition).
    pub fn is_full(&self) -> bool {
        self.is_full
    }
}

/// Compute the decomposition group at `place` of the biquadratic extension
/// presented by two classes.
///
/// Precondition: the classes and their sum are all nontrivial (`G` has rank
/// 2); with fewer independent classes the order bookkeeping below loses its
/// meaning.
pub fn decomposition_group(
    place: &Place,
    first: &ArtinSchreierClass,
    second: &ArtinSchreierClass,
) -> Result<DecompositionReport, GaloisError> {
    let base = first.representative().field();
    let local = LocalField::new(base, place)?;
    let sum = first.representative() + second.representative();
    let mut verdicts = [LocalSplitting::Split; 3];
    for (slot, f) in
        [first.representative(), second.representative(), &sum].into_iter().enumerate()
    {
        verdicts[slot] = classify_at_place(&local, f)?.splitting;
    }
    let splits = verdicts.iter().filter(|v| v.splits()).count();
    let group_order = match splits {
        0 => 4,
        1 => 2,
        3 => 1,
        _ => return Err(GaloisError::InconsistentTriple { place: place.clone() }),
    };
    Ok(DecompositionReport {
        place: place.clone(),
        verdicts,
        group_order,
        is_full: group_order == 4,
    })
}
