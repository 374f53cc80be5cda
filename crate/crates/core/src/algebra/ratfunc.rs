//! Rational functions over `GF(2^m)` in canonical form: monic denominator,
//! numerator and denominator coprime. Canonicalization is enforced eagerly
//! after every operation so equality is representation equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use super::field::{BinaryField, FieldElement};
use super::poly::Poly;
use super::AlgebraError;

/// An element of `F_q(t)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonicalize `num/den`; the denominator must be nonzero.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        assert_eq!(num.field(), den.field(), "field mismatch in rational function");
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one(den.field()) });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead_inv = den.leading().unwrap().inverse().unwrap();
        Ok(RatFunc { num: num.scale(lead_inv), den: den.scale(lead_inv) })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let one = Poly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: BinaryField) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn one(field: BinaryField) -> RatFunc {
        RatFunc::from_poly(Poly::one(field))
    }

    /// The variable `t`.
    pub fn t(field: BinaryField) -> RatFunc {
        RatFunc::from_poly(Poly::t(field))
    }

    pub fn constant(c: FieldElement) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn field(&self) -> BinaryField {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value if the function is a constant, else `None`.
    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.den.degree() == Some(0) {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Is this a polynomial (denominator 1)?
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.degree() == Some(0) {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Frobenius square — exact.
    pub fn square(&self) -> RatFunc {
        RatFunc { num: self.num.square(), den: self.den.square() }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::one(self.field());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Split into polynomial part and proper remainder: `self = q + r/den`
    /// with `deg r < deg den`.
    pub fn poly_and_proper_parts(&self) -> (Poly, RatFunc) {
        let (q, r) = self.num.divrem(&self.den);
        (q, RatFunc::new(r, self.den.clone()).unwrap())
    }

    /// `2^ν`-th root if one exists: iterate ν square-root steps, each valid iff
    /// numerator and denominator are supported on even degrees (characteristic
    /// 2). `Ok(None)` means certainly not a `2^ν`-th power.
    pub fn pow2_root(&self, nu: u32) -> Result<Option<RatFunc>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let mut cur = self.clone();
        for _ in 0..nu {
            let (Some(n), Some(d)) = (cur.num.sqrt(), cur.den.sqrt()) else {
                return Ok(None);
            };
            // Coprimality and monicity survive the square root, so the result
            // is already canonical.
            cur = RatFunc { num: n, den: d };
        }
        Ok(Some(cur))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

/// Subtraction coincides with addition in characteristic 2.
impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + rhs
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] at boundaries
/// where a zero divisor is an input error rather than a bug.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl fmt::Display for RatFunc {
    /// Canonical rendering that reparses to the same value: numerator
    /// parenthesized iff it is a sum, denominator omitted when 1 and
    /// parenthesized unless it is a monic monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        if numerator_needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        if self.den.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

/// A single monomial (even with a parenthesized coefficient) extends a `*`/`/`
/// chain safely; sums, and bare constants that render as sums, do not.
fn numerator_needs_parens(num: &Poly) -> bool {
    let terms = num.coeffs().iter().filter(|c| !c.is_zero()).count();
    if terms >= 2 {
        return true;
    }
    num.as_constant().is_some_and(|c| c.needs_parens())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> BinaryField {
        BinaryField::new(1).unwrap()
    }

    fn poly_f2(bits: &[u8]) -> Poly {
        let f = f2();
        Poly::from_coeffs(f, bits.iter().map(|&b| f.from_int(b as u64)).collect())
    }

    #[test]
    fn canonical_form_is_monic_and_coprime() {
        // (t²+1)/(t³+t) = (t+1)²/(t(t+1)²) = 1/t.
        let f = RatFunc::new(poly_f2(&[1, 0, 1]), poly_f2(&[0, 1, 0, 1])).unwrap();
        assert_eq!(f.num(), &Poly::one(f2()));
        assert_eq!(f.den(), &Poly::t(f2()));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RatFunc::new(Poly::one(f2()), Poly::zero(f2())),
            Err(AlgebraError::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_identities() {
        let t = RatFunc::t(f2());
        let inv_t = t.inverse().unwrap();
        assert_eq!(&t * &inv_t, RatFunc::one(f2()));
        // t + t = 0 in characteristic 2.
        assert_eq!(&t + &t, RatFunc::zero(f2()));
        // t + 1/t = (t²+1)/t.
        let sum = &t + &inv_t;
        assert_eq!(sum.num(), &poly_f2(&[1, 0, 1]));
        assert_eq!(sum.den(), &Poly::t(f2()));
    }

    #[test]
    fn pow2_root_of_t8_is_t_but_not_a_16th_power() {
        let t8 = RatFunc::t(f2()).pow(8);
        assert_eq!(t8.pow2_root(3).unwrap().unwrap(), RatFunc::t(f2()));
        assert_eq!(t8.pow2_root(4).unwrap(), None);
        assert_eq!(
            RatFunc::zero(f2()).pow2_root(1),
            Err(AlgebraError::ZeroInput)
        );
    }

    #[test]
    fn pow2_root_of_prop_style_quotient() {
        // (t¹⁶+1)/t⁸ is ((t²+1)/t)⁸; check the cube of square roots and the
        // exact re-expansion g^(2^ν) = f.
        let mut c = vec![0u8; 17];
        c[0] = 1;
        c[16] = 1;
        let f = RatFunc::new(poly_f2(&c), poly_f2(&[0, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        let g = f.pow2_root(3).unwrap().unwrap();
        assert_eq!(g, RatFunc::new(poly_f2(&[1, 0, 1]), poly_f2(&[0, 1])).unwrap());
        assert_eq!(g.pow(8), f);
    }

    #[test]
    fn display_forms() {
        let t = RatFunc::t(f2());
        let one = RatFunc::one(f2());
        assert_eq!((&one / &t).to_string(), "1/t");
        let f = &(&t + &one.checked_div(&t.pow(8)).unwrap()) * &one;
        // t + 1/t⁸ = (t⁹+1)/t⁸.
        assert_eq!(f.to_string(), "(t^9+1)/t^8");
        let f4 = BinaryField::new(2).unwrap();
        let w1 = RatFunc::constant(f4.element(0b11));
        let quotient = w1.checked_div(&RatFunc::t(f4)).unwrap();
        assert_eq!(quotient.to_string(), "(w+1)/t");
    }
}
