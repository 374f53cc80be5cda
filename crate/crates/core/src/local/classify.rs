//! Classification of quadratic Artin–Schreier classes in a completion.
//!
//! A class `[f]` of `w² + w = f` over `k_v` falls into exactly one bucket:
//! the equation is solvable (`Split`), or it cuts out the unramified
//! quadratic extension (`Inert`), or a ramified one (`Ramified`). The
//! classifier is exact: every verdict is certified by finitely many known
//! coefficients.

use std::fmt;

use crate::algebra::RatFunc;

use super::series::{LaurentSeries, LocalField};
use super::LocalError;

/// Behaviour of the quadratic extension `k_v(w)/k_v` cut out by `w² + w = f`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LocalSplitting {
    /// The equation already has a root in `k_v`.
    Split,
    /// Unramified quadratic extension (residue has absolute trace 1).
    Inert,
    /// Ramified quadratic extension (odd-order pole survives reduction).
    Ramified,
}

impl LocalSplitting {
    /// Whether the place splits, i.e. the class dies locally.
    pub fn splits(self) -> bool {
        self == LocalSplitting::Split
    }
}

impl fmt::Display for LocalSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocalSplitting::Split => "split",
            LocalSplitting::Inert => "inert",
            LocalSplitting::Ramified => "ramified",
        })
    }
}

/// Verdict for one class at one place, with the evidence that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlaceClass {
    pub splitting: LocalSplitting,
    /// Pole order of the locally reduced representative (odd; 0 unless
    /// ramified).
    pub reduced_pole_order: i64,
    /// Absolute trace of the reduced residue (1 iff inert).
    pub residue_trace: u32,
}

impl PlaceClass {
    fn split() -> PlaceClass {
        PlaceClass { splitting: LocalSplitting::Split, reduced_pole_order: 0, residue_trace: 0 }
    }
}

/// Classify `[f]` in the completion `local`.
///
/// The expansion buffer `2·pole + 16` never runs out: each reduction step
/// `f ← f + h² + h` with `h = √c·π^(v/2)` uses exactly-known monomials, so
/// precision is preserved while the pole strictly shrinks. The error branch
/// exists for defensive completeness only.
pub fn classify_at_place(local: &LocalField, f: &RatFunc) -> Result<PlaceClass, LocalError> {
    if f.is_zero() {
        return Ok(PlaceClass::split());
    }
    let pole = (-local.place().valuation(f)).max(0);
    let prec = 2 * pole + 16;
    let mut s = local.expand(f, prec);
    loop {
        let Some(v) = s.valuation() else {
            // ν ≥ prec > 0: integral with zero residue, hence solvable.
            return Ok(PlaceClass::split());
        };
        if v >= 0 {
            let trace = s.coeff_at(0).trace();
            return Ok(if trace == 0 {
                PlaceClass::split()
            } else {
                PlaceClass {
                    splitting: LocalSplitting::Inert,
                    reduced_pole_order: 0,
                    residue_trace: 1,
                }
            });
        }
        if v % 2 != 0 {
            return Ok(PlaceClass {
                splitting: LocalSplitting::Ramified,
                reduced_pole_order: -v,
                residue_trace: 0,
            });
        }
        // Even pole: absorb the leading term into h² + h with h = √c·π^(v/2).
        let c = s.coeff_at(v);
        let lead = LaurentSeries::exact_monomial(s.field(), c, v);
        let half = LaurentSeries::exact_monomial(s.field(), c.sqrt(), v / 2);
        let reduced = s.add(&lead).add(&half);
        debug_assert_eq!(reduced.precision(), prec, "exact reduction keeps precision");
        debug_assert!(reduced.valuation().map_or(true, |nv| nv > v));
        if reduced.precision() < 1 {
            return Err(LocalError::InsufficientPrecision);
        }
        s = reduced;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ratfunc, BinaryField, Place, Poly};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> BinaryField {
        BinaryField::new(1).unwrap()
    }

    fn local(place_text: &str) -> LocalField {
        let place = match place_text {
            "inf" => Place::Infinity,
            _ => {
                let p = parse_ratfunc(place_text, f2()).unwrap();
                Place::finite(p.as_poly().unwrap().clone())
            }
        };
        LocalField::new(f2(), &place).unwrap()
    }

    fn classify(f_text: &str, place_text: &str) -> PlaceClass {
        let f = parse_ratfunc(f_text, f2()).unwrap();
        classify_at_place(&local(place_text), &f).unwrap()
    }

    #[test]
    fn pinned_small_verdicts() {
        // [t] ramifies at ∞ (simple pole), splits at (t), is inert at (t+1).
        assert_eq!(
            classify("t", "inf"),
            PlaceClass {
                splitting: LocalSplitting::Ramified,
                reduced_pole_order: 1,
                residue_trace: 0
            }
        );
        assert_eq!(classify("t", "t").splitting, LocalSplitting::Split);
        assert_eq!(
            classify("t", "t+1"),
            PlaceClass { splitting: LocalSplitting::Inert, reduced_pole_order: 0, residue_trace: 1 }
        );
        // [1/t] is integral at ∞ with zero residue.
        assert_eq!(classify("1/t", "inf").splitting, LocalSplitting::Split);
        // [1] has trace-1 residue everywhere over F₂.
        assert_eq!(classify("1", "t").splitting, LocalSplitting::Inert);
        assert_eq!(classify("1", "inf").splitting, LocalSplitting::Inert);
    }

    #[test]
    fn even_poles_reduce_before_judgement() {
        // 1/t² ≡ 1/t (mod ℘): still ramified at (t), but with pole order 1.
        let c = classify("1/t^2", "t");
        assert_eq!(c.splitting, LocalSplitting::Ramified);
        assert_eq!(c.reduced_pole_order, 1);
        // 1/t² + 1/t ≡ 0 (mod ℘): splits at (t) despite the visible pole.
        assert_eq!(classify("1/t^2+1/t", "t").splitting, LocalSplitting::Split);
        // t² + t ≡ 0 at ∞ after two reduction passes.
        assert_eq!(classify("t^2+t", "inf").splitting, LocalSplitting::Split);
        // t⁸ at ∞ telescopes down to t ≡ π⁻¹: ramified.
        let c = classify("t^8", "inf");
        assert_eq!(c.splitting, LocalSplitting::Ramified);
        assert_eq!(c.reduced_pole_order, 1);
    }

    #[test]
    fn verdicts_only_depend_on_the_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc1a5);
        let field = f2();
        let places = ["t", "t+1", "t^2+t+1", "inf"];
        for _ in 0..200 {
            let f = random_ratfunc(&mut rng, field, 4);
            let h = random_ratfunc(&mut rng, field, 3);
            let shifted = &f + &(&h.square() + &h);
            for p in places {
                let lf = local(p);
                let a = classify_at_place(&lf, &f).unwrap();
                let b = classify_at_place(&lf, &shifted).unwrap();
                assert_eq!(a, b, "h = {h} changed the verdict of {f} at {p}");
            }
        }
    }

    #[test]
    fn unramified_verdicts_add_like_traces() {
        // For v-integral f and g the classes form a group of order two:
        // split = 0, inert = 1, and [f+g] = [f] xor [g].
        let mut rng = ChaCha8Rng::seed_from_u64(0x0e0e);
        let field = f2();
        let v = local("t^2+t+1");
        for _ in 0..200 {
            let f = RatFunc::from_poly(random_poly(&mut rng, field, 5));
            let g = RatFunc::from_poly(random_poly(&mut rng, field, 5));
            let cf = classify_at_place(&v, &f).unwrap();
            let cg = classify_at_place(&v, &g).unwrap();
            let cs = classify_at_place(&v, &(&f + &g)).unwrap();
            assert_eq!(cs.residue_trace, cf.residue_trace ^ cg.residue_trace);
        }
    }

    fn random_poly(rng: &mut ChaCha8Rng, field: BinaryField, max_deg: usize) -> Poly {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs: Vec<_> =
            (0..=deg).map(|_| field.element(rng.gen_range(0..field.order()) as u32)).collect();
        Poly::from_coeffs(field, coeffs)
    }

    fn random_ratfunc(rng: &mut ChaCha8Rng, field: BinaryField, max_deg: usize) -> RatFunc {
        let num = random_poly(rng, field, max_deg);
        loop {
            let den = random_poly(rng, field, max_deg);
            if !den.is_zero() {
                return RatFunc::new(num, den).unwrap();
            }
        }
    }
}
