//! The order of Ш¹(k, E[2^N]): cohomology classes that die in every
//! completion of `k = F_q(t)`.
//!
//! For the cyclic module `E[2^N](k_s) ≅ Z/2^N` with `G = Gal(K/k)` acting
//! through the torsion field `K`, the locally-trivial part of `H¹(k, Z/2^N)`
//! is trivial unless `G` is noncyclic and no decomposition group is all of
//! `G`, in which case it has order exactly 2. Only finitely many places can
//! carry a full decomposition group: at an unramified place `D_v` is
//! generated by Frobenius, hence cyclic and proper inside the rank-2 `G`, so
//! the sweep is confined to the ramified places of the three quadratic
//! layers.

use std::fmt;

use crate::algebra::{Place, RatFunc};
use crate::curve::Curve;

use super::{
    decomposition_group, torsion_field, ArtinSchreierClass, DecompositionReport, GaloisError,
    TorsionField,
};

/// Why the verdict came out the way it did.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Sha1Reason {
    /// `G` is cyclic (rank ≤ 1 or level < 3): restriction to a decomposition
    /// group of the same order is injective.
    CyclicGalois,
    /// Some place carries all of `G`, and restriction there is injective.
    FullDecompositionGroupAt(Place),
    /// `G` is noncyclic and every decomposition group is proper.
    NonCyclicNoFullPlace,
}

impl fmt::Display for Sha1Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sha1Reason::CyclicGalois => f.write_str("cyclic Galois group"),
            Sha1Reason::FullDecompositionGroupAt(v) => {
                write!(f, "full decomposition group at {v}")
            }
            Sha1Reason::NonCyclicNoFullPlace => {
                f.write_str("noncyclic Galois group with no full decomposition group")
            }
        }
    }
}

/// The computed order of Ш¹(k, E[2^N]) together with the evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sha1Verdict {
    order: u32,
    torsion: TorsionField,
    decomposition: Vec<DecompositionReport>,
    reason: Sha1Reason,
}

impl Sha1Verdict {
    /// |Ш¹(k, E[2^N])|: 1 or 2.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn torsion(&self) -> &TorsionField {
        &self.torsion
    }

    /// Reports for every candidate place, in canonical place order.
    pub fn decomposition(&self) -> &[DecompositionReport] {
        &self.decomposition
    }

    pub fn reason(&self) -> &Sha1Reason {
        &self.reason
    }
}

/// Compute |Ш¹(k, E[2ⁿ])| for an ordinary curve over `F_q(t)`.
///
/// The effective level is capped at 3 by the torsion-field presentation (see
/// [`torsion_field`]); the verdict then only depends on the Galois group of
/// that field and its decomposition groups.
pub fn sha1_order(curve: &Curve<RatFunc>, n: u32) -> Result<Sha1Verdict, GaloisError> {
    let torsion = torsion_field(curve, n)?;
    if torsion.galois_is_cyclic() {
        return Ok(Sha1Verdict {
            order: 1,
            torsion,
            decomposition: Vec::new(),
            reason: Sha1Reason::CyclicGalois,
        });
    }

    let first = &torsion.classes()[0];
    let second = &torsion.classes()[1];
    let sum = ArtinSchreierClass::reduce(
        &(first.representative() + second.representative()),
    )?;
    let mut candidates: Vec<Place> = first
        .ramified_places()
        .iter()
        .chain(second.ramified_places())
        .chain(sum.ramified_places())
        .cloned()
        .collect();
    candidates.sort();
    candidates.dedup();

    let mut decomposition = Vec::with_capacity(candidates.len());
    let mut full_place = None;
    for place in candidates {
        let report = decomposition_group(&place, first, second)?;
        if report.is_full() && full_place.is_none() {
            full_place = Some(place);
        }
        decomposition.push(report);
    }
    let (order, reason) = match full_place {
        Some(place) => (1, Sha1Reason::FullDecompositionGroupAt(place)),
        None => (2, Sha1Reason::NonCyclicNoFullPlace),
    };
    Ok(Sha1Verdict { order, torsion, decomposition, reason })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ratfunc, BinaryField, Poly};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> BinaryField {
        BinaryField::new(1).unwrap()
    }

    fn curve(a: &str, b: &str) -> Curve<RatFunc> {
        Curve::new(
            parse_ratfunc(a, f2()).unwrap(),
            parse_ratfunc(b, f2()).unwrap(),
        )
        .unwrap()
    }

    fn place(text: &str) -> Place {
        Place::finite(parse_ratfunc(text, f2()).unwrap().as_poly().unwrap().clone())
    }

    #[test]
    fn the_obstructed_curves_have_order_two() {
        // a = t⁸, b = (t¹⁶+1)/t⁸.
        let verdict = sha1_order(&curve("t^8", "(t^16+1)/t^8"), 3).unwrap();
        assert_eq!(verdict.order(), 2);
        assert_eq!(*verdict.reason(), Sha1Reason::NonCyclicNoFullPlace);
        let places: Vec<&Place> =
            verdict.decomposition().iter().map(|r| r.place()).collect();
        assert_eq!(places, [&place("t"), &Place::Infinity]);
        assert!(verdict.decomposition().iter().all(|r| r.group_order() == 2));

        // a = t⁸, b = 1/t⁸, at every requested level from 3 up.
        for n in [3, 5, 9] {
            let verdict = sha1_order(&curve("t^8", "1/t^8"), n).unwrap();
            assert_eq!(verdict.order(), 2);
            assert_eq!(verdict.torsion().level(), 3);
            assert_eq!(*verdict.reason(), Sha1Reason::NonCyclicNoFullPlace);
        }
    }

    #[test]
    fn cyclic_galois_groups_leave_nothing_locally_invisible() {
        // Constant curve: [a] = [0] is trivial, so the group is cyclic.
        let verdict = sha1_order(&curve("0", "1"), 3).unwrap();
        assert_eq!(verdict.order(), 1);
        assert_eq!(*verdict.reason(), Sha1Reason::CyclicGalois);
        assert!(verdict.decomposition().is_empty());
        // Low effective level: same reason.
        let verdict = sha1_order(&curve("t", "t^2"), 3).unwrap();
        assert_eq!(verdict.torsion().level(), 1);
        assert_eq!(*verdict.reason(), Sha1Reason::CyclicGalois);
    }

    #[test]
    fn a_full_decomposition_group_forces_order_one() {
        // [t] ramifies at infinity where the constant layer [1] is inert:
        // D_∞ = G.
        let verdict = sha1_order(&curve("t", "1"), 3).unwrap();
        assert_eq!(verdict.order(), 1);
        assert_eq!(
            *verdict.reason(),
            Sha1Reason::FullDecompositionGroupAt(Place::Infinity)
        );
        let full: Vec<_> =
            verdict.decomposition().iter().filter(|r| r.is_full()).collect();
        assert_eq!(full.len(), 1);
    }

    #[test]
    fn verdicts_are_invariant_under_coboundary_shifts_of_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x51a1);
        let examples =
            [curve("t^8", "(t^16+1)/t^8"), curve("t^8", "1/t^8"), curve("t", "1")];
        for base in &examples {
            let reference = sha1_order(base, 3).unwrap();
            for _ in 0..12 {
                let num = Poly::from_coeffs(
                    f2(),
                    (0..4).map(|_| f2().element(rng.gen_range(0..2u32))).collect(),
                );
                let den = Poly::from_coeffs(
                    f2(),
                    (0..3).map(|_| f2().element(rng.gen_range(0..2u32))).collect(),
                );
                if den.is_zero() {
                    continue;
                }
                let h = RatFunc::new(num, den).unwrap();
                let shifted_a = base.a() + &(&h.square() + &h);
                let shifted = Curve::new(shifted_a, base.b().clone()).unwrap();
                let verdict = sha1_order(&shifted, 3).unwrap();
                assert_eq!(verdict.order(), reference.order());
                assert_eq!(verdict.reason(), reference.reason());
                let key = |v: &Sha1Verdict| -> Vec<(Place, [crate::local::LocalSplitting; 3], u32)> {
                    v.decomposition()
                        .iter()
                        .map(|r| (r.place().clone(), r.verdicts(), r.group_order()))
                        .collect()
                };
                assert_eq!(key(&verdict), key(&reference));
            }
        }
    }

    #[test]
    fn the_multiplicative_twist_of_b_is_a_different_curve() {
        // Scaling b by t⁸ preserves neither the curve (j moves from
        // t⁸/(t+1)¹⁶ to 1/(t¹⁶+1)) nor the verdict: the twisted classes
        // [t] and [t+1] ramify together at infinity, where the third layer
        // [1] is inert, so a full decomposition group appears and the
        // obstruction dies.
        let original = sha1_order(&curve("t^8", "(t^16+1)/t^8"), 3).unwrap();
        let twisted = sha1_order(&curve("t^8", "t^16+1"), 3).unwrap();
        assert_eq!(original.order(), 2);
        assert_eq!(twisted.order(), 1);
        assert_eq!(
            *twisted.reason(),
            Sha1Reason::FullDecompositionGroupAt(Place::Infinity)
        );
    }

    #[test]
    fn reports_cover_exactly_the_ramified_candidates() {
        let verdict = sha1_order(&curve("t^8", "1/t^8"), 3).unwrap();
        let places: Vec<&Place> =
            verdict.decomposition().iter().map(|r| r.place()).collect();
        // [t] ramifies at inf, [1/t] at (t), [t + 1/t] at both.
        assert_eq!(places, [&place("t"), &Place::Infinity]);
    }
}
