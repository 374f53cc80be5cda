//! Binary finite fields `GF(2^m)`, `1 ≤ m ≤ 16`, with elements stored as
//! bit-packed polynomials over `F₂` reduced modulo a fixed irreducible.
//!
//! The modulus for each degree is pinned to the lexicographically least
//! irreducible (equivalently: the smallest bit-packed value with bit `m`
//! set), so serialized elements mean the same thing across runs, versions
//! and reimplementations. `GF(2^8)` lands on the familiar `x⁸+x⁴+x³+x+1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use super::AlgebraError;

/// Largest supported extension degree over `F₂`.
///
/// Residue fields of places are realized inside this bound, which keeps every
/// exhaustive search (roots, least embeddings, point counts) trivially fast.
pub const MAX_FIELD_DEGREE: usize = 16;

/// `MODULI[m-1]` is the bit-packed lexicographically least irreducible of
/// degree `m` over `F₂` (bit `i` = coefficient of `x^i`). Verified by trial
/// division in the tests below.
const MODULI: [u32; MAX_FIELD_DEGREE] = [
    0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

/// A binary finite field `GF(2^m)` together with its display symbol for the
/// multiplicative generator `x mod modulus` (conventionally `w`).
///
/// The context is tiny and `Copy`; every [`FieldElement`] embeds its own
/// context so mixed-field arithmetic is caught immediately.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BinaryField {
    m: u8,
    modulus: u32,
    symbol: char,
}

impl BinaryField {
    /// The field `GF(2^m)` with the pinned modulus and symbol `w`.
    pub fn new(m: usize) -> Result<Self, AlgebraError> {
        if m == 0 || m > MAX_FIELD_DEGREE {
            return Err(AlgebraError::UnsupportedDegree { m });
        }
        Ok(BinaryField {
            m: m as u8,
            modulus: MODULI[m - 1],
            symbol: 'w',
        })
    }

    /// The field with `q` elements; `q` must be a power of two in range.
    pub fn with_order(q: u64) -> Result<Self, AlgebraError> {
        if q < 2 || !q.is_power_of_two() {
            return Err(AlgebraError::NotAPowerOfTwo { q });
        }
        Self::new(q.trailing_zeros() as usize)
    }

    /// Extension degree `m` over `F₂`.
    pub fn degree(&self) -> usize {
        self.m as usize
    }

    /// Number of elements `2^m`.
    pub fn order(&self) -> u64 {
        1 << self.m
    }

    /// Bit-packed modulus polynomial.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Display symbol for the generator.
    pub fn symbol(&self) -> char {
        self.symbol
    }

    /// Additive identity.
    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, bits: 0 }
    }

    /// Multiplicative identity.
    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, bits: 1 }
    }

    /// The class of `x` modulo the field modulus — the element printed as the
    /// field symbol. Only meaningful for proper extensions (`m ≥ 2`).
    pub fn generator(&self) -> FieldElement {
        debug_assert!(self.m >= 2, "GF(2) has no displayed generator");
        FieldElement { field: *self, bits: 0b10 }
    }

    /// The element with the given coefficient bits (`bits < 2^m`).
    pub fn element(&self, bits: u32) -> FieldElement {
        assert!(bits < (1u32 << self.m), "element bits out of range for GF(2^{})", self.m);
        FieldElement { field: *self, bits }
    }

    /// Image of an integer under `Z → GF(2^m)` (reduction mod 2).
    pub fn from_int(&self, n: u64) -> FieldElement {
        FieldElement { field: *self, bits: (n & 1) as u32 }
    }

    /// All field elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        let field = *self;
        (0..self.order() as u32).map(move |bits| FieldElement { field, bits })
    }

    /// Deterministic embedding of `self` into `target`, defined whenever
    /// `degree(self) | degree(target)` by sending the generator to the
    /// lexicographically least root of this field's modulus in `target`.
    pub fn embed_into(&self, target: BinaryField) -> Option<FieldEmbedding> {
        if target.degree() % self.degree() != 0 {
            return None;
        }
        let root = target
            .elements()
            .find(|z| eval_f2_poly(self.modulus, *z).is_zero())?;
        Some(FieldEmbedding { from: *self, to: target, gen_image: root })
    }
}

/// Evaluate a polynomial over `F₂` (bit-packed coefficients) at a field
/// element.
fn eval_f2_poly(poly: u32, z: FieldElement) -> FieldElement {
    let mut acc = z.field.zero();
    // Horner from the top bit down; coefficients are 0/1.
    for i in (0..32).rev() {
        if i < 31 {
            acc = acc * z;
        }
        if poly & (1 << i) != 0 {
            acc += z.field.one();
        }
    }
    acc
}

/// A deterministic field homomorphism `GF(2^s) → GF(2^t)` with `s | t`,
/// fixed by the image of the source generator.
#[derive(Clone, Copy, Debug)]
pub struct FieldEmbedding {
    from: BinaryField,
    to: BinaryField,
    gen_image: FieldElement,
}

impl FieldEmbedding {
    /// The identity map on a field. (Note that `embed_into` a field of the
    /// same degree would pick the least *conjugate* root, which is a Frobenius
    /// twist rather than the identity for some moduli.)
    pub fn identity(field: BinaryField) -> FieldEmbedding {
        let gen_image = if field.degree() >= 2 { field.generator() } else { field.zero() };
        FieldEmbedding { from: field, to: field, gen_image }
    }

    pub fn source(&self) -> BinaryField {
        self.from
    }

    pub fn target(&self) -> BinaryField {
        self.to
    }

    /// Where the source generator lands.
    pub fn generator_image(&self) -> FieldElement {
        self.gen_image
    }

    /// Apply the embedding.
    pub fn map(&self, x: FieldElement) -> FieldElement {
        assert_eq!(x.field, self.from, "embedding applied to foreign element");
        let mut acc = self.to.zero();
        for i in (0..self.from.degree() as u32).rev() {
            acc = acc * self.gen_image;
            if x.bits & (1 << i) != 0 {
                acc += self.to.one();
            }
        }
        acc
    }
}

/// An element of a [`BinaryField`], carrying its field so that arithmetic
/// across mismatched fields panics instead of silently corrupting data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    field: BinaryField,
    bits: u32,
}

impl FieldElement {
    pub fn field(&self) -> BinaryField {
        self.field
    }

    /// Bit-packed coefficients over `F₂`.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    /// `self^e` by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Frobenius square — exact and cheap, used pervasively.
    pub fn square(&self) -> FieldElement {
        *self * *self
    }

    /// The unique square root (Frobenius is bijective): `x^(2^(m-1))`.
    pub fn sqrt(&self) -> FieldElement {
        let m = self.field.degree() as u32;
        let mut acc = *self;
        for _ in 0..m.saturating_sub(1) {
            acc = acc.square();
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero. Fermat: `x^(2^m - 2)`.
    pub fn inverse(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(self.pow(self.field.order() - 2))
    }

    /// Absolute trace `Tr_{GF(2^m)/F₂}(x) = Σ x^(2^i)`, returned as 0 or 1.
    pub fn trace(&self) -> u32 {
        let mut acc = self.field.zero();
        let mut pw = *self;
        for _ in 0..self.field.degree() {
            acc += pw;
            pw = pw.square();
        }
        debug_assert!(acc.bits <= 1, "trace landed outside F₂");
        acc.bits
    }

    /// Solve `w² + w = self`; `None` exactly when the absolute trace is 1.
    /// The full solution set is `{w, w+1}`.
    ///
    /// Odd `m` uses the half-trace closed form `Σ_{i=0}^{(m-1)/2} c^(2^(2i))`;
    /// even `m` solves the `F₂`-linear system for `w ↦ w² + w` directly.
    pub fn artin_schreier_root(&self) -> Option<FieldElement> {
        if self.trace() == 1 {
            return None;
        }
        let m = self.field.degree();
        let w = if m % 2 == 1 {
            let mut acc = self.field.zero();
            let mut pw = *self;
            for i in 0..m {
                if i % 2 == 0 {
                    acc += pw;
                }
                pw = pw.square();
            }
            acc
        } else {
            self.solve_artin_schreier_linear()?
        };
        debug_assert_eq!(w.square() + w, *self);
        Some(w)
    }

    /// Gaussian elimination over `F₂` for `w² + w = self` (any parity of m).
    fn solve_artin_schreier_linear(&self) -> Option<FieldElement> {
        let m = self.field.degree();
        // Row i of the augmented system: Σ_j M[i][j] w_j = c_i where column j
        // is the bit pattern of e_j² + e_j. Stored transposed as columns, then
        // eliminated as rows of (M | c) packed into u64 (matrix low, rhs bit m).
        let mut rows: Vec<u64> = Vec::with_capacity(m);
        for i in 0..m {
            let mut row: u64 = 0;
            for j in 0..m {
                let ej = self.field.element(1 << j);
                let img = ej.square() + ej;
                if img.bits & (1 << i) != 0 {
                    row |= 1 << j;
                }
            }
            if self.bits & (1 << i) != 0 {
                row |= 1 << m;
            }
            rows.push(row);
        }
        // Forward elimination with back substitution folded in.
        let mut solution: u32 = 0;
        let mut used = vec![false; m];
        for col in 0..m {
            let pivot = (0..m).find(|&r| !used[r] && rows[r] & (1 << col) != 0);
            let Some(p) = pivot else { continue };
            used[p] = true;
            for r in 0..m {
                if r != p && rows[r] & (1 << col) != 0 {
                    rows[r] ^= rows[p];
                }
            }
        }
        // Inconsistent row ⇒ no solution (trace 1, already filtered, but keep
        // the check so the linear path stands on its own).
        for r in 0..m {
            let row = rows[r];
            if row & ((1 << m) - 1) == 0 && row >> m != 0 {
                return None;
            }
        }
        for col in 0..m {
            if let Some(r) = (0..m).find(|&r| rows[r] & ((1 << m) - 1) == 1 << col) {
                if rows[r] >> m != 0 {
                    solution |= 1 << col;
                }
            }
        }
        Some(self.field.element(solution))
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.field, rhs.field, "field mismatch in addition");
        FieldElement { field: self.field, bits: self.bits ^ rhs.bits }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

/// Subtraction coincides with addition in characteristic 2.
impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.field, rhs.field, "field mismatch in multiplication");
        // Carry-less multiply (degrees ≤ 15, so the product fits in 31 bits)
        // followed by reduction mod the field modulus.
        let mut prod: u64 = 0;
        let a = self.bits as u64;
        for i in 0..=15 {
            if rhs.bits & (1 << i) != 0 {
                prod ^= a << i;
            }
        }
        let m = self.field.degree() as u32;
        let modulus = self.field.modulus as u64;
        while prod >> m != 0 {
            let d = 63 - prod.leading_zeros();
            prod ^= modulus << (d - m);
        }
        FieldElement { field: self.field, bits: prod as u32 }
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

impl fmt::Display for FieldElement {
    /// Renders as a polynomial in the field symbol, highest power first:
    /// `w^3+w+1`. Reparses to the same element under the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "0");
        }
        let sym = self.field.symbol;
        let mut first = true;
        for i in (0..self.field.degree() as u32).rev() {
            if self.bits & (1 << i) == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "{sym}")?,
                _ => write!(f, "{sym}^{i}")?,
            }
        }
        Ok(())
    }
}

impl FieldElement {
    /// True if rendering this coefficient needs parentheses inside a product
    /// (more than one additive term).
    pub(crate) fn needs_parens(&self) -> bool {
        self.bits.count_ones() > 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bit-packed polynomial division over F₂, for re-deriving the modulus
    /// table independently of the field arithmetic above.
    fn f2_poly_rem(mut a: u64, b: u64) -> u64 {
        let db = 63 - b.leading_zeros();
        while a != 0 {
            let da = 63 - a.leading_zeros();
            if da < db {
                break;
            }
            a ^= b << (da - db);
        }
        a
    }

    fn f2_irreducible(p: u64, m: u32) -> bool {
        for d in 1..=(m / 2) {
            for q in (1u64 << d)..(1u64 << (d + 1)) {
                if f2_poly_rem(p, q) == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn modulus_table_is_least_irreducible_per_degree() {
        for m in 1..=MAX_FIELD_DEGREE as u32 {
            let expected = ((1u64 << m)..(1u64 << (m + 1)))
                .find(|&p| f2_irreducible(p, m))
                .unwrap();
            assert_eq!(MODULI[m as usize - 1] as u64, expected, "degree {m}");
        }
    }

    #[test]
    fn gf4_multiplication_table() {
        // GF(4) = F₂[w]/(w²+w+1): w·w = w+1, w·(w+1) = 1, (w+1)² = w.
        let f = BinaryField::new(2).unwrap();
        let w = f.generator();
        let w1 = f.element(0b11);
        assert_eq!(w * w, w1);
        assert_eq!(w * w1, f.one());
        assert_eq!(w1 * w1, w);
        assert_eq!(w + w1, f.one());
    }

    #[test]
    fn inverse_and_pow_agree_exhaustively() {
        for m in 1..=8 {
            let f = BinaryField::new(m).unwrap();
            assert!(f.zero().inverse().is_none());
            for x in f.elements().skip(1) {
                let inv = x.inverse().unwrap();
                assert_eq!(x * inv, f.one());
                assert_eq!(x.pow(f.order() - 1), f.one());
            }
        }
    }

    #[test]
    fn sqrt_is_inverse_frobenius_exhaustively() {
        for m in 1..=8 {
            let f = BinaryField::new(m).unwrap();
            for x in f.elements() {
                assert_eq!(x.sqrt().square(), x);
                assert_eq!(x.square().sqrt(), x);
            }
        }
    }

    #[test]
    fn trace_is_additive_and_balanced() {
        for m in 1..=8 {
            let f = BinaryField::new(m).unwrap();
            let zeros = f.elements().filter(|x| x.trace() == 0).count();
            assert_eq!(zeros as u64, f.order() / 2, "m = {m}");
            for x in f.elements() {
                for y in f.elements().take(16) {
                    assert_eq!((x + y).trace(), x.trace() ^ y.trace());
                }
            }
        }
    }

    #[test]
    fn artin_schreier_root_solves_exactly_when_trace_vanishes() {
        for m in 1..=8 {
            let f = BinaryField::new(m).unwrap();
            for c in f.elements() {
                match c.artin_schreier_root() {
                    Some(w) => {
                        assert_eq!(c.trace(), 0);
                        assert_eq!(w.square() + w, c);
                        // Solution set is exactly {w, w+1}.
                        let other = w + f.one();
                        assert_eq!(other.square() + other, c);
                        let count = f.elements().filter(|z| z.square() + *z == c).count();
                        assert_eq!(count, 2);
                    }
                    None => {
                        assert_eq!(c.trace(), 1);
                        assert!(f.elements().all(|z| z.square() + z != c));
                    }
                }
            }
        }
    }

    #[test]
    fn embeddings_are_field_homomorphisms() {
        let pairs = [(1usize, 2usize), (1, 4), (2, 4), (2, 8), (3, 6), (4, 8), (8, 16)];
        for (s, t) in pairs {
            let small = BinaryField::new(s).unwrap();
            let big = BinaryField::new(t).unwrap();
            let emb = small.embed_into(big).unwrap();
            for x in small.elements() {
                for y in small.elements() {
                    assert_eq!(emb.map(x + y), emb.map(x) + emb.map(y));
                    assert_eq!(emb.map(x * y), emb.map(x) * emb.map(y));
                }
            }
            assert_eq!(emb.map(small.one()), big.one());
            // Injectivity on a spot basis: nonzero maps to nonzero.
            assert!(small.elements().skip(1).all(|x| !emb.map(x).is_zero()));
        }
        // No embedding when degrees do not divide.
        let f3 = BinaryField::new(3).unwrap();
        let f4 = BinaryField::new(4).unwrap();
        assert!(f3.embed_into(f4).is_none());
    }

    #[test]
    fn display_round_trips_basic_elements() {
        let f = BinaryField::new(4).unwrap();
        assert_eq!(f.zero().to_string(), "0");
        assert_eq!(f.one().to_string(), "1");
        assert_eq!(f.element(0b0110).to_string(), "w^2+w");
        assert_eq!(f.element(0b1011).to_string(), "w^3+w+1");
    }
}
