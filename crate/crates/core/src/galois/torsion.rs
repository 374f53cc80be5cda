//! The field of definition of the 2-power torsion of an ordinary curve.
//!
//! Over the imperfect base `k = F_q(t)` the separable 2ⁿ-torsion of
//! `y² + xy = x³ + ax² + b` is only as large as the 2-power content of the
//! j-invariant allows: `E[2ⁿ](k_s) ≅ Z/2^N` where `N = min(n, ν)` and `ν` is
//! the largest exponent with `j = 1/b ∈ k^(2^ν)`. Writing the torsion
//! abscissae needs the inseparable roots `b^(1/2), b^(1/4), …`, which live in
//! `k_s` exactly when they already lie in `k`.
//!
//! At full level `N = 3` the torsion field is `K = k(u, v)` with
//! `u² + u = a` and `v² + v = b` (the root `b^(1/8)` is already rational, and
//! `[b^(1/4)] = [b]` modulo coboundaries via `x⁴ + x = ℘(x² + x)`), so
//! `Gal(K/k) ≅ (Z/2)^r` with `r` the span of the classes `[a]`, `[b]`. Below
//! level 3 the tower is generated by a single quadratic layer over the
//! inseparable roots, and the group is cyclic.

use crate::algebra::RatFunc;
use crate::curve::Curve;

use super::{ArtinSchreierClass, GaloisError};

/// Shape of `K = k(E[2^N](k_s))` and of `G = Gal(K/k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionField {
    requested: u32,
    level: u32,
    classes: Vec<ArtinSchreierClass>,
    rank: Option<u32>,
}

impl TorsionField {
    /// The level `n` the caller asked for.
    pub fn requested_level(&self) -> u32 {
        self.requested
    }

    /// The effective level `N ≤ min(n, 3)`: `E[2ⁿ](k_s) ≅ Z/2^N`.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// At level 3, the classes `[a]`, `[b]` presenting `K = k(u, v)`; empty
    /// below level 3.
    pub fn classes(&self) -> &[ArtinSchreierClass] {
        &self.classes
    }

    /// At level 3, the rank `r` with `G ≅ (Z/2)^r`; `None` below level 3,
    /// where the group is cyclic by construction.
    pub fn galois_rank(&self) -> Option<u32> {
        self.rank
    }

    pub fn galois_is_cyclic(&self) -> bool {
        self.rank.map_or(true, |r| r <= 1)
    }
}

/// Determine `K = k(E[2ⁿ](k_s))` and `G = Gal(K/k)` for an ordinary curve
/// over `F_q(t)`.
///
/// Fails with [`GaloisError::UnsupportedLevel`] when `n > 3` and the
/// j-invariant is a 16-th power (constant `j` included): the torsion field
/// would then exceed the 8-torsion, for which no presentation is kept here.
pub fn torsion_field(curve: &Curve<RatFunc>, n: u32) -> Result<TorsionField, GaloisError> {
    assert!(n >= 1, "torsion level must be positive");
    let j = curve.j_invariant();
    if n > 3 && j.pow2_root(4)?.is_some() {
        return Err(GaloisError::UnsupportedLevel { requested: n });
    }
    let nu = (1u32..=3).rev().find(|&nu| {
        j.pow2_root(nu).expect("j is nonzero").is_some()
    });
    let level = n.min(nu.unwrap_or(0));
    if level < 3 {
        return Ok(TorsionField { requested: n, level, classes: Vec::new(), rank: None });
    }

    let class_a = ArtinSchreierClass::reduce(curve.a())?;
    let class_b = ArtinSchreierClass::reduce(curve.b())?;
    let class_sum = ArtinSchreierClass::reduce(&(curve.a() + curve.b()))?;
    // [a] + [b] = [a + b], so the three triviality bits must be consistent.
    debug_assert!(
        !(class_a.is_trivial() && class_b.is_trivial()) || class_sum.is_trivial(),
        "sum of trivial classes must be trivial"
    );
    let rank = match (class_a.is_trivial(), class_b.is_trivial()) {
        (true, true) => 0,
        (false, false) if !class_sum.is_trivial() => 2,
        _ => 1,
    };
    Ok(TorsionField {
        requested: n,
        level,
        classes: vec![class_a, class_b],
        rank: Some(rank),
    })
}
