//! Univariate polynomials in `t` over a binary finite field, dense
//! representation with a trimmed leading coefficient.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use super::field::{BinaryField, FieldElement};

/// A polynomial in `t` over `GF(2^m)`. The zero polynomial has an empty
/// coefficient vector; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    field: BinaryField,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero(field: BinaryField) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: BinaryField) -> Poly {
        Poly::constant(field.one())
    }

    /// The variable `t`.
    pub fn t(field: BinaryField) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    pub fn constant(c: FieldElement) -> Poly {
        let field = c.field();
        if c.is_zero() {
            Poly::zero(field)
        } else {
            Poly { field, coeffs: vec![c] }
        }
    }

    /// `c·t^deg`.
    pub fn monomial(c: FieldElement, deg: usize) -> Poly {
        let field = c.field();
        if c.is_zero() {
            return Poly::zero(field);
        }
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Poly { field, coeffs }
    }

    /// Build from low-to-high coefficients, trimming leading zeros.
    pub fn from_coeffs(field: BinaryField, coeffs: Vec<FieldElement>) -> Poly {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> BinaryField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Constant value: the coefficient of `t^0` if the polynomial is
    /// constant, else `None`.
    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly::from_coeffs(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divide by the leading coefficient.
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(l.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let dl_inv = d.leading().unwrap().inverse().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() * dl_inv;
            let shift = rd - dd;
            quo[shift] += factor;
            // rem -= factor · t^shift · d  (subtraction is addition).
            for (i, &dc) in d.coeffs.iter().enumerate() {
                rem.coeffs[i + shift] += factor * dc;
            }
            rem.trim();
        }
        (Poly::from_coeffs(self.field, quo), rem)
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Exact valuation of `self` at the irreducible `p`: the multiplicity of
    /// `p` as a factor. Panics on the zero polynomial.
    pub fn ord_at(&self, p: &Poly) -> usize {
        assert!(!self.is_zero(), "valuation of zero polynomial");
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(p);
            if !r.is_zero() {
                return k;
            }
            k += 1;
            cur = q;
        }
    }

    /// Horner evaluation at a point of the coefficient field (or an extension
    /// holding the embedded coefficients — caller maps coefficients first).
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let mut acc = x.field().zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.field);
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

    /// In characteristic 2 a polynomial is a square iff it is supported on
    /// even degrees; the root halves exponents and takes coefficient square
    /// roots. Returns `None` with certainty otherwise.
    pub fn sqrt(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        let root: Vec<FieldElement> = self.coeffs.iter().step_by(2).map(|c| c.sqrt()).collect();
        Some(Poly::from_coeffs(self.field, root))
    }

    /// Frobenius square, exact: exponents double, coefficients square.
    pub fn square(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); 2 * self.coeffs.len() - 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.square();
        }
        Poly::from_coeffs(self.field, coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch in polynomial addition");
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, &c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::from_coeffs(self.field, coeffs)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

/// Subtraction coincides with addition in characteristic 2.
impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch in polynomial multiplication");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(self.field, coeffs)
    }
}

impl fmt::Display for Poly {
    /// Renders highest power first, e.g. `t^16+1` or `(w+1)*t^2+w*t`.
    /// Reparses to the same polynomial under the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                if c.needs_parens() {
                    write!(f, "({c})*")?;
                } else {
                    write!(f, "{c}*")?;
                }
            }
            if i == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{i}")?;
            }
        }
        Ok(())
    }
}
