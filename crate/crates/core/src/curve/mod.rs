//! The ordinary elliptic curve family `y² + xy = x³ + ax² + b` (so `b ≠ 0`,
//! `j = 1/b`) over any of the supported coefficient domains: finite fields,
//! rational functions, and local Laurent series.
//!
//! The group law, duplication, and the torsion constructions are generic over
//! [`CurveField`]; point counting, reduction at places, and local halving
//! live in their own submodules.

use std::fmt;

use crate::algebra::{AlgebraError, FieldElement, RatFunc};
use crate::local::LaurentSeries;

mod finite;
mod halving;
mod reduce;

pub use finite::{count_points, point_order};
pub use halving::{divisible_local, halve_local, Divisibility, LocalCurve};
pub use reduce::{nontorsion_witness, reduce_at_place, NontorsionWitness};

/// Failure modes of curve constructions and point operations.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum CurveError {
    #[error("b = 0 defines a singular or supersingular model, outside the family")]
    SingularCurve,
    #[error("b is not a square in the coefficient field")]
    NotASquare,
    #[error("b is not a fourth power in the coefficient field")]
    NotAFourthPower,
    #[error("u does not satisfy u² + u = a")]
    BadU,
    #[error("the 2-torsion abscissa x = 0 doubles to infinity")]
    ZeroX,
    #[error("point has a pole or the curve degenerates at this place")]
    BadReduction,
    #[error("working precision exhausted before a verdict")]
    Indeterminate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Field operations the group law needs, kept by-reference so one trait fits
/// copyable finite-field elements, heap-backed rational functions, and
/// precision-carrying Laurent series.
///
/// For Laurent series, `is_zero` and `eq_elem` mean *within the working
/// precision*; verdicts built on them inherit that qualifier.
pub trait CurveField: Clone {
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn square(&self) -> Self;
    /// Multiplicative inverse; `None` for zero (within precision).
    fn invert(&self) -> Option<Self>;
    /// Square root; `None` when the element is certainly not a square. Total
    /// on finite fields of characteristic 2.
    fn sqrt_elem(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn eq_elem(&self, rhs: &Self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.invert().map(|inv| self.mul(&inv))
    }
}

impl CurveField for FieldElement {
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn square(&self) -> Self {
        FieldElement::square(self)
    }
    fn invert(&self) -> Option<Self> {
        self.inverse()
    }
    fn sqrt_elem(&self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn eq_elem(&self, rhs: &Self) -> bool {
        self == rhs
    }
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
}

impl CurveField for RatFunc {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn square(&self) -> Self {
        RatFunc::square(self)
    }
    fn invert(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn sqrt_elem(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        self.pow2_root(1).expect("nonzero input")
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn eq_elem(&self, rhs: &Self) -> bool {
        self == rhs
    }
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.field())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.field())
    }
}

impl CurveField for LaurentSeries {
    fn add(&self, rhs: &Self) -> Self {
        LaurentSeries::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentSeries::mul(self, rhs)
    }
    fn square(&self) -> Self {
        LaurentSeries::square(self)
    }
    fn invert(&self) -> Option<Self> {
        self.inverse()
    }
    fn sqrt_elem(&self) -> Option<Self> {
        self.sqrt().ok()
    }
    fn is_zero(&self) -> bool {
        self.is_zero_within_precision()
    }
    fn eq_elem(&self, rhs: &Self) -> bool {
        self.eq_within_precision(rhs)
    }
    fn zero_like(&self) -> Self {
        self.sub(self)
    }
    fn one_like(&self) -> Self {
        LaurentSeries::exact_constant(self.field().one())
    }
}

/// A member of the family `y² + xy = x³ + ax² + b` with `b ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Curve<F: CurveField> {
    a: F,
    b: F,
}

/// A point of `E`, either the identity or an affine pair satisfying the
/// Weierstrass relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point<F: CurveField> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: CurveField> Point<F> {
    pub fn affine(x: F, y: F) -> Point<F> {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn coordinates(&self) -> Option<(&F, &F)> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, y } => Some((x, y)),
        }
    }

    /// Semantic equality (within precision for Laurent coordinates).
    pub fn agrees_with(&self, other: &Point<F>) -> bool {
        match (self, other) {
            (Point::Infinity, Point::Infinity) => true,
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => {
                x1.eq_elem(x2) && y1.eq_elem(y2)
            }
            _ => false,
        }
    }
}

impl<F: CurveField> Curve<F> {
    pub fn new(a: F, b: F) -> Result<Curve<F>, CurveError> {
        if b.is_zero() {
            return Err(CurveError::SingularCurve);
        }
        Ok(Curve { a, b })
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    /// `j(E) = 1/b`.
    pub fn j_invariant(&self) -> F {
        self.b.invert().expect("b is nonzero by construction")
    }

    /// Exact check of `y² + xy = x³ + ax² + b` (infinity passes).
    pub fn contains(&self, p: &Point<F>) -> bool {
        let Point::Affine { x, y } = p else { return true };
        let lhs = y.square().add(&x.mul(y));
        let x2 = x.square();
        let rhs = x2.mul(x).add(&self.a.mul(&x2)).add(&self.b);
        lhs.eq_elem(&rhs)
    }

    pub fn neg(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: x.clone(), y: x.add(y) },
        }
    }

    /// Chord-and-tangent addition. Coincident abscissae route to doubling or
    /// to the identity, so no division by zero can escape.
    pub fn add_points(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) = (p, q) else {
            return if p.is_infinity() { q.clone() } else { p.clone() };
        };
        if x1.eq_elem(x2) {
            // Same abscissa: the only ordinates are y and y + x, so the
            // points are equal (double) or mutually inverse (identity).
            return if y1.eq_elem(y2) { self.double(p) } else { Point::Infinity };
        }
        let lambda = y1.add(y2).div(&x1.add(x2)).expect("distinct abscissae");
        let x3 = lambda.square().add(&lambda).add(x1).add(x2).add(&self.a);
        let y3 = lambda.mul(&x1.add(&x3)).add(&x3).add(y1);
        Point::Affine { x: x3, y: y3 }
    }

    /// Tangent duplication; the 2-torsion abscissa `x = 0` doubles to the
    /// identity.
    pub fn double(&self, p: &Point<F>) -> Point<F> {
        let Point::Affine { x, y } = p else { return Point::Infinity };
        let Some(y_over_x) = y.div(x) else { return Point::Infinity };
        let lambda = x.add(&y_over_x);
        let x3 = lambda.square().add(&lambda).add(&self.a);
        let y3 = x.square().add(&lambda.add(&x.one_like()).mul(&x3));
        Point::Affine { x: x3, y: y3 }
    }

    /// Abscissa of `2P` from the abscissa of `P`: `x² + b/x²`.
    pub fn x_double(&self, x: &F) -> Result<F, CurveError> {
        let x2 = x.square();
        let quotient = self.b.div(&x2).ok_or(CurveError::ZeroX)?;
        Ok(x2.add(&quotient))
    }

    /// `n·P` by double-and-add.
    pub fn mul_scalar(&self, n: u64, p: &Point<F>) -> Point<F> {
        let mut acc = Point::Infinity;
        for i in (0..64 - n.leading_zeros()).rev() {
            acc = self.double(&acc);
            if n & (1 << i) != 0 {
                acc = self.add_points(&acc, p);
            }
        }
        acc
    }

    /// The rational 2-torsion point `(0, √b)`, when `b` is a square.
    pub fn two_torsion(&self) -> Result<Point<F>, CurveError> {
        let root = self.b.sqrt_elem().ok_or(CurveError::NotASquare)?;
        Ok(Point::Affine { x: root.square().zero_like(), y: root })
    }

    /// A point of order 4, `(b^{1/4}, b^{1/2} + u·b^{1/4})`, given a solution
    /// `u` of `u² + u = a`; it doubles to `(0, √b)`.
    pub fn four_torsion(&self, u: &F) -> Result<Point<F>, CurveError> {
        if !u.square().add(u).eq_elem(&self.a) {
            return Err(CurveError::BadU);
        }
        let sqrt = self.b.sqrt_elem().ok_or(CurveError::NotAFourthPower)?;
        let quartic = sqrt.sqrt_elem().ok_or(CurveError::NotAFourthPower)?;
        let point = Point::Affine { x: quartic.clone(), y: sqrt.add(&u.mul(&quartic)) };
        debug_assert!(self.contains(&point));
        debug_assert!(self.double(&point).agrees_with(&self.two_torsion()?));
        Ok(point)
    }
}

impl<F: CurveField + fmt::Display> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => f.write_str("inf"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}
