//! Rational functions modulo the Artin–Schreier operator `℘(h) = h² + h`.
//!
//! Two functions `f` and `f + ℘(h)` present the same quadratic extension
//! `k(u)/k`, `u² + u = f`. The representative kept here has every surviving
//! pole of odd order, which makes the invariants of the extension visible:
//! its ramified places are exactly the poles of the representative, and the
//! extension is trivial precisely when the representative is a constant of
//! absolute trace 0 (a pole-free function on the projective line is constant,
//! and `c = w² + w` is solvable in `F_q` exactly when `Tr_{F_q/F₂}(c) = 0`).

use crate::algebra::{poles_of, AlgebraError, Place, Poly, RatFunc};
use crate::local::LocalField;

/// A rational function considered modulo `h² + h`, reduced so that every
/// pole of the stored representative has odd order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArtinSchreierClass {
    rep: RatFunc,
    ramified: Vec<Place>,
    trivial: bool,
}

impl ArtinSchreierClass {
    /// Reduce `f` modulo the image of `℘` and package the class invariants.
    pub fn reduce(f: &RatFunc) -> Result<ArtinSchreierClass, AlgebraError> {
        let (rep, witness) = reduce_with_witness(f)?;
        debug_assert_eq!(
            f + &rep,
            &witness.square() + &witness,
            "reduction must shift by an exact coboundary"
        );
        let ramified: Vec<Place> = poles_of(&rep)
            .into_iter()
            .map(|(place, order)| {
                debug_assert!(order % 2 == 1, "even pole survived reduction");
                place
            })
            .collect();
        let trivial = rep.as_constant().is_some_and(|c| c.trace() == 0);
        Ok(ArtinSchreierClass { rep, ramified, trivial })
    }

    /// The reduced representative (all poles of odd order).
    pub fn representative(&self) -> &RatFunc {
        &self.rep
    }

    /// Places where the quadratic extension ramifies: the poles of the
    /// representative, finite places first in canonical order.
    pub fn ramified_places(&self) -> &[Place] {
        &self.ramified
    }

    /// Whether the class is a coboundary, i.e. the extension is trivial.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    /// Whether two classes present the same extension: their difference must
    /// reduce to a coboundary. (Representatives themselves are not canonical
    /// — distinct reduced functions can still differ by `℘(h)`.)
    pub fn same_class(&self, other: &ArtinSchreierClass) -> Result<bool, AlgebraError> {
        Ok(ArtinSchreierClass::reduce(&(&self.rep + &other.rep))?.is_trivial())
    }
}

/// The reduced representative together with the accumulated shift `h`, so the
/// caller can re-verify `f = rep + h² + h` exactly.
pub(crate) fn reduce_with_witness(f: &RatFunc) -> Result<(RatFunc, RatFunc), AlgebraError> {
    let field = f.field();
    let mut rep = f.clone();
    let mut witness = RatFunc::zero(field);
    let shift = |rep: &RatFunc, witness: &RatFunc, step: RatFunc| {
        (rep + &(&step.square() + &step), witness + &step)
    };

    // At infinity: while the polynomial part has even positive degree 2m and
    // leading coefficient c, subtracting ℘(√c·t^m) cancels the leading term.
    // The step is a polynomial, so no finite place is disturbed.
    loop {
        let (poly, _) = rep.poly_and_proper_parts();
        let Some(d) = poly.degree() else { break };
        if d == 0 || d % 2 != 0 {
            break;
        }
        let lead = poly.leading().expect("degree is defined").sqrt();
        let step = RatFunc::from_poly(Poly::monomial(lead, d / 2));
        (rep, witness) = shift(&rep, &witness, step);
    }

    // At each finite pole of even order 2m: with s the canonical lift
    // (degree < deg v) of the residue square root of f·v^{2m}, subtracting
    // ℘(s/v^m) lowers the pole order below 2m. The step is a proper fraction
    // with its only pole at v, so neither infinity nor the other finite
    // places move, and one sweep over the original pole set suffices.
    for (place, order) in poles_of(&rep) {
        let Place::Finite(v) = place.clone() else { continue };
        if order % 2 != 0 {
            continue;
        }
        let local = LocalField::new(field, &place)?;
        let mut order = order;
        while order > 0 && order % 2 == 0 {
            let m = order / 2;
            let shifted = &rep * &RatFunc::from_poly(v.pow(order as u32));
            let residue = local
                .residue_map()
                .eval(&shifted)
                .expect("pole cleared by shifting");
            let step = RatFunc::new(local.poly_lift(residue.sqrt()), v.pow(m as u32))?;
            (rep, witness) = shift(&rep, &witness, step);
            let val = if rep.is_zero() { 0 } else { place.valuation(&rep).min(0) };
            debug_assert!(-val < order as i64, "pole order must strictly decrease");
            order = (-val) as usize;
        }
    }
    Ok((rep, witness))
}
