//! Cross-validation of the place-splitting verdict against the cocycle
//! enumeration.
//!
//! The two paths share no arithmetic. The splitting criterion works with
//! Artin–Schreier classes at places; the check here rebuilds the verdict as
//! a restricted kernel of `H¹(G, Z/2^N)` for the abstract Galois group `G`,
//! modeled inside `(Z/2^N)^×` by its order:
//!
//! - rank 2 → the full unit group, rank 1 → an order-2 subgroup, rank ≤ 0 →
//!   trivial (restriction kernels only depend on the orders involved, since
//!   restriction to any proper subgroup vanishes);
//! - the restriction family contains every cyclic subgroup of `G` — each one
//!   is a decomposition group somewhere, by the density of Frobenius
//!   conjugacy classes — plus `G` itself whenever some computed
//!   decomposition group is full.

use serde::Serialize;
use twodiv_core::{sha1_kernel, Sha1Verdict, UnitSubgroup};

/// Both orders and their comparison, plus the model that produced the
/// cohomology side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CrossValidation {
    /// `#Ш¹` from the place-splitting criterion.
    pub galois_order: u32,
    /// Order of the restricted kernel of `H¹(G, Z/2^N)`.
    pub cohomology_order: u64,
    pub agree: bool,
    /// The `N` of the module `Z/2^N` used for the model.
    pub module_exponent: u32,
    /// Elements of the modeled ambient group.
    pub ambient: Vec<u32>,
    /// The restriction family, rendered as element lists.
    pub family: Vec<String>,
}

pub fn cross_validate(verdict: &Sha1Verdict) -> CrossValidation {
    let exponent = verdict.torsion().level().max(1);
    let modulus = 1u32 << exponent;
    let ambient = match verdict.torsion().galois_rank() {
        Some(2) => UnitSubgroup::full_units(exponent),
        Some(1) => UnitSubgroup::generated_by(exponent, &[modulus - 1])
            .expect("-1 is an odd residue"),
        _ => UnitSubgroup::trivial(exponent),
    };

    let mut family: Vec<UnitSubgroup> = UnitSubgroup::all_subgroups(exponent)
        .into_iter()
        .filter(|g| g.is_cyclic() && g.is_subgroup_of(&ambient))
        .collect();
    if verdict.decomposition().iter().any(|r| r.is_full()) {
        family.push(ambient.clone());
    }

    let kernel = sha1_kernel(&ambient, &family)
        .expect("family members are subgroups of the ambient model");
    CrossValidation {
        galois_order: verdict.order(),
        cohomology_order: kernel.order(),
        agree: u64::from(verdict.order()) == kernel.order(),
        module_exponent: exponent,
        ambient: ambient.elements().to_vec(),
        family: family.iter().map(|g| format!("{:?}", g.elements())).collect(),
    }
}
