//! Point halving over a completion and the local 2-power divisibility
//! search.
//!
//! Halving inverts duplication: for `Q = (ξ, η)` the abscissae of candidate
//! halves satisfy `z² + ξz + b = 0` with `z = x²`, solved through the
//! substitution `z = ξw`, `w² + w = b/ξ²`. Refutations (no Artin–Schreier
//! root, not a square) are exact; every affirmative answer is modulo the
//! working precision, and the search escalates precision before conceding
//! `Indeterminate`.

use crate::algebra::{Place, RatFunc};
use crate::local::{LaurentSeries, LocalError, LocalField, MAX_PRECISION};

use super::{Curve, CurveError, CurveField, Point};

/// Outcome of a local divisibility query.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Divisibility {
    /// A full halving chain exists modulo the working precision.
    Yes,
    /// Every branch of the search died on an exact refutation.
    No,
    /// Precision escalation hit its ceiling with branches still open.
    Indeterminate,
}

/// A curve base-changed to the completion at a place, at a fixed working
/// precision.
pub struct LocalCurve {
    field: LocalField,
    curve: Curve<LaurentSeries>,
    precision: i64,
}

impl LocalCurve {
    pub fn new(e: &Curve<RatFunc>, v: &Place, precision: i64) -> Result<LocalCurve, CurveError> {
        let field = LocalField::new(e.a().field(), v)?;
        let a = field.expand(e.a(), precision);
        let b = field.expand(e.b(), precision);
        let curve = Curve::new(a, b)?;
        Ok(LocalCurve { field, curve, precision })
    }

    pub fn curve(&self) -> &Curve<LaurentSeries> {
        &self.curve
    }

    pub fn field(&self) -> &LocalField {
        &self.field
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Expand a global point coordinatewise.
    pub fn localize(&self, p: &Point<RatFunc>) -> Point<LaurentSeries> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(
                self.field.expand(x, self.precision),
                self.field.expand(y, self.precision),
            ),
        }
    }
}

/// Strip even-order poles off `c` by `c ← c + h² + h`, `h = √(lead)·π^(ν/2)`,
/// returning the integral representative and the accumulated offset
/// (`w ↦ w + offset` maps roots back). `None` means an odd-order pole
/// survived — an exact proof that `w² + w = c` has no root in `k_v`.
fn peel_even_poles(c: &LaurentSeries) -> Option<(LaurentSeries, LaurentSeries)> {
    let mut reduced = c.clone();
    let mut offset = c.zero_like();
    while let Some(v) = reduced.valuation() {
        if v >= 0 {
            break;
        }
        if v % 2 != 0 {
            return None;
        }
        let lead = reduced.coeff_at(v);
        let h = LaurentSeries::exact_monomial(reduced.field(), lead.sqrt(), v / 2);
        reduced = reduced.add(&h.square()).add(&h);
        offset = offset.add(&h);
    }
    Some((reduced, offset))
}

/// Solve `w² + w = c` in the completion, allowing poles of even order.
/// `Ok(None)` is an exact refutation; precision exhaustion propagates.
fn artin_schreier_roots(c: &LaurentSeries) -> Result<Option<LaurentSeries>, CurveError> {
    let Some((reduced, offset)) = peel_even_poles(c) else {
        return Ok(None);
    };
    match reduced.artin_schreier_solve() {
        Ok(w) => Ok(Some(w.add(&offset))),
        Err(LocalError::Unsolvable) => Ok(None),
        Err(LocalError::InsufficientPrecision) => Err(CurveError::Indeterminate),
        Err(e) => unreachable!("poles were peeled before solving: {e}"),
    }
}

/// Square root with the two outcomes separated: `Ok(None)` is an exact
/// refutation, precision exhaustion escalates.
fn sqrt_or_escalate(s: &LaurentSeries) -> Result<Option<LaurentSeries>, CurveError> {
    match s.sqrt() {
        Ok(root) => Ok(Some(root)),
        Err(LocalError::NotASquare { .. }) => Ok(None),
        Err(LocalError::InsufficientPrecision) => Err(CurveError::Indeterminate),
        Err(e) => unreachable!("sqrt only fails on squareness or precision: {e}"),
    }
}

/// All `R ∈ E(k_v)` with `2R = Q`, up to the working precision: at most two
/// points, differing by the rational 2-torsion. The empty list is an exact
/// refutation; `Indeterminate` propagates precision exhaustion.
pub fn halve_local(
    e: &Curve<LaurentSeries>,
    q: &Point<LaurentSeries>,
) -> Result<Vec<Point<LaurentSeries>>, CurveError> {
    let mut found: Vec<Point<LaurentSeries>> = Vec::new();
    let mut keep = |r: Point<LaurentSeries>| {
        if !found.iter().any(|p| p.agrees_with(&r)) {
            found.push(r);
        }
    };

    let Point::Affine { x: xi, y: _ } = q else {
        // 2R = ∞ means R = ∞ or R is the rational 2-torsion point.
        keep(Point::Infinity);
        match sqrt_or_escalate(e.b())? {
            Some(root) => keep(Point::affine(root.zero_like(), root)),
            None => {}
        }
        return Ok(found);
    };

    // Abscissa candidates: roots z of z² + ξz + b with z = x².
    let mut abscissae: Vec<LaurentSeries> = Vec::new();
    if CurveField::is_zero(xi) {
        // Double root z = √b.
        match sqrt_or_escalate(e.b())? {
            Some(z) => abscissae.push(z),
            None => return Ok(found),
        }
    } else {
        let c = e.b().div(&xi.square()).ok_or(CurveError::Indeterminate)?;
        match artin_schreier_roots(&c)? {
            Some(w) => {
                let z = xi.mul(&w);
                abscissae.push(z.add(xi));
                abscissae.push(z);
            }
            None => return Ok(found),
        }
    }

    for z in abscissae {
        let Some(x) = sqrt_or_escalate(&z)? else { continue };
        // Ordinates: y = x·s with s² + s = x + a + b/x² (the curve relation
        // for (x, y)); both roots are candidates, duplication filters.
        let b_over_x2 = e.b().div(&x.square()).ok_or(CurveError::Indeterminate)?;
        let c = x.add(e.a()).add(&b_over_x2);
        let Some(s) = artin_schreier_roots(&c)? else { continue };
        for y in [x.mul(&s), x.mul(&s).add(&x)] {
            let r = Point::affine(x.clone(), y);
            if e.double(&r).agrees_with(q) {
                keep(r);
            }
        }
    }
    Ok(found)
}

/// Is `Q` divisible by `2ⁿ` in `E(k_v)`?
///
/// Breadth-first search: level `i` holds every known point `R` with
/// `2^i·R = Q`. Branching is essential — halves differ by 2-torsion and can
/// differ in further divisibility. `Yes` needs one surviving chain of depth
/// `n`; `No` needs an empty level with every abandoned branch exactly
/// refuted; otherwise the precision doubles, up to the module ceiling.
pub fn divisible_local(
    e: &Curve<RatFunc>,
    q: &Point<RatFunc>,
    n: u32,
    v: &Place,
    base_precision: i64,
) -> Result<Divisibility, CurveError> {
    assert!(base_precision >= 1);
    let mut precision = base_precision;
    while precision <= MAX_PRECISION {
        match attempt_at_precision(e, q, n, v, precision)? {
            Some(verdict) => return Ok(verdict),
            None => precision *= 2,
        }
    }
    Ok(Divisibility::Indeterminate)
}

/// One BFS pass at a fixed precision; `None` requests escalation.
fn attempt_at_precision(
    e: &Curve<RatFunc>,
    q: &Point<RatFunc>,
    n: u32,
    v: &Place,
    precision: i64,
) -> Result<Option<Divisibility>, CurveError> {
    let local = match LocalCurve::new(e, v, precision) {
        Ok(local) => local,
        // b not yet visible at this precision: a deeper expansion will fix it.
        Err(CurveError::SingularCurve) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut level = vec![local.localize(q)];
    let mut branch_exhausted = false;
    for _ in 0..n {
        let mut next: Vec<Point<LaurentSeries>> = Vec::new();
        for r in &level {
            match halve_local(local.curve(), r) {
                Ok(halves) => {
                    for h in halves {
                        if !next.iter().any(|p| p.agrees_with(&h)) {
                            next.push(h);
                        }
                    }
                }
                Err(CurveError::Indeterminate) => branch_exhausted = true,
                Err(e) => return Err(e),
            }
        }
        if next.is_empty() {
            return if branch_exhausted {
                Ok(None) // all open branches hit precision limits: escalate
            } else {
                Ok(Some(Divisibility::No))
            };
        }
        level = next;
    }
    Ok(Some(Divisibility::Yes))
}
