//! Places of `F_q(t)`: monic irreducible polynomials in `t` plus the place at
//! infinity (the degree valuation), with deterministic ordering, residue
//! fields, and evaluation of rational functions at a place.

use std::cmp::Ordering;
use std::fmt;

use super::field::{BinaryField, FieldElement, FieldEmbedding};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::AlgebraError;

/// A place of `F_q(t)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    /// The valuation attached to a monic irreducible polynomial.
    Finite(Poly),
    /// The degree valuation; uniformizer `1/t`.
    Infinity,
}

impl Place {
    /// Wrap a monic irreducible polynomial as a place.
    pub fn finite(p: Poly) -> Place {
        assert!(p.is_monic(), "place polynomial must be monic");
        assert!(is_irreducible(&p), "place polynomial must be irreducible");
        Place::Finite(p)
    }

    pub fn infinity() -> Place {
        Place::Infinity
    }

    /// Residue degree over the constant field (`deg v`; 1 at infinity).
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().expect("irreducible is nonzero"),
            Place::Infinity => 1,
        }
    }

    pub fn polynomial(&self) -> Option<&Poly> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinity => None,
        }
    }

    /// Exact valuation `ν_v(f)` of a nonzero rational function.
    pub fn valuation(&self, f: &RatFunc) -> i64 {
        assert!(!f.is_zero(), "valuation of zero");
        match self {
            Place::Finite(p) => f.num().ord_at(p) as i64 - f.den().ord_at(p) as i64,
            Place::Infinity => {
                f.den().degree().unwrap() as i64 - f.num().degree().unwrap() as i64
            }
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Place) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical place order: finite places by degree then by coefficient vector
/// (highest-degree coefficient first, coefficients compared by bit value);
/// infinity sorts after every finite place. Reports list places in this
/// order, so they are diffable.
impl Ord for Place {
    fn cmp(&self, other: &Place) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Finite(a), Place::Finite(b)) => {
                let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
                da.cmp(&db).then_with(|| {
                    for i in (0..da).rev() {
                        let c = a.coeff(i).bits().cmp(&b.coeff(i).bits());
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Monic polynomial number `counter` of the given degree, coefficients read
/// as base-q digits (constant coefficient = fastest digit). Enumerating
/// `counter` in increasing order yields the canonical place order within a
/// degree.
fn monic_by_counter(field: BinaryField, degree: usize, counter: u64) -> Poly {
    let q = field.order();
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut c = counter;
    for _ in 0..degree {
        coeffs.push(field.element((c % q) as u32));
        c /= q;
    }
    coeffs.push(field.one());
    Poly::from_coeffs(field, coeffs)
}

/// Irreducibility over `GF(2^m)` by trial division against all monic
/// polynomials of degree at most half the input's.
pub(crate) fn is_irreducible(p: &Poly) -> bool {
    let Some(d) = p.degree() else { return false };
    if d == 0 {
        return false;
    }
    let field = p.field();
    let q = field.order();
    for dd in 1..=(d / 2) {
        for counter in 0..q.pow(dd as u32) {
            let cand = monic_by_counter(field, dd, counter);
            if p.rem(&cand).is_zero() {
                return false;
            }
        }
    }
    true
}

/// All monic irreducibles of degree ≤ `max_degree` over the constant field,
/// in canonical order, followed by the place at infinity.
pub fn places_up_to_degree(field: BinaryField, max_degree: usize) -> Vec<Place> {
    assert!(max_degree >= 1, "degree bound must be positive");
    let q = field.order();
    let mut irreducibles: Vec<Poly> = Vec::new();
    for d in 1..=max_degree {
        for counter in 0..q.pow(d as u32) {
            let cand = monic_by_counter(field, d, counter);
            // Divisibility by a reducible implies divisibility by one of its
            // irreducible factors, all of which were enumerated earlier.
            let reducible = irreducibles
                .iter()
                .take_while(|f| f.degree().unwrap() <= d / 2)
                .any(|f| cand.rem(f).is_zero());
            if !reducible {
                irreducibles.push(cand);
            }
        }
        // Keep the sieve sorted by degree: within this loop they already are.
    }
    let mut places: Vec<Place> = irreducibles.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinity);
    places
}

/// Poles of a rational function, each with its order, finite places in
/// canonical order and the place at infinity last.
///
/// The zero function has no poles. Finite poles are read off the denominator
/// by trial division (every divisor found with smaller factors exhausted is
/// irreducible); the pole at infinity is the degree excess of the numerator.
pub fn poles_of(f: &RatFunc) -> Vec<(Place, usize)> {
    let mut poles = Vec::new();
    if f.is_zero() {
        return poles;
    }
    let field = f.field();
    let q = field.order();
    let mut rest = f.den().clone();
    let mut d = 1;
    while rest.degree().unwrap() >= 1 {
        // Divisors of degree d beyond half the remainder force the cofactor
        // below degree d, which earlier passes already ruled out; the
        // remainder itself is then irreducible.
        if 2 * d > rest.degree().unwrap() {
            poles.push((Place::Finite(rest.make_monic()), 1));
            break;
        }
        for counter in 0..q.pow(d as u32) {
            let cand = monic_by_counter(field, d, counter);
            let mut order = 0;
            loop {
                let (quo, rem) = rest.divrem(&cand);
                if !rem.is_zero() {
                    break;
                }
                rest = quo;
                order += 1;
            }
            if order > 0 {
                poles.push((Place::Finite(cand), order));
            }
        }
        d += 1;
    }
    let num_deg = f.num().degree().expect("nonzero function") as i64;
    let den_deg = f.den().degree().expect("denominator is nonzero") as i64;
    if num_deg > den_deg {
        poles.push((Place::Infinity, (num_deg - den_deg) as usize));
    }
    poles
}

/// Deterministic realization of the residue field at a place.
///
/// For a finite place `v` of degree `d` over `GF(2^m)` the residue field
/// `GF(2^m)[t]/(v)` is identified with the pinned `GF(2^(m·d))`: constants
/// embed via the lexicographically least root of the `GF(2^m)` modulus, and
/// `t mod v` maps to the lexicographically least root of `v` (coefficients
/// embedded) in the target. At infinity the residue field is the constant
/// field itself and `1/t ↦ 0`.
#[derive(Clone, Debug)]
pub struct ResidueMap {
    base: BinaryField,
    place: Place,
    residue: BinaryField,
    const_embed: FieldEmbedding,
    t_image: Option<FieldElement>,
}

impl ResidueMap {
    pub fn new(base: BinaryField, place: &Place) -> Result<ResidueMap, AlgebraError> {
        match place {
            Place::Infinity => Ok(ResidueMap {
                base,
                place: place.clone(),
                residue: base,
                const_embed: FieldEmbedding::identity(base),
                t_image: None,
            }),
            Place::Finite(v) => {
                let d = v.degree().unwrap();
                let residue = BinaryField::new(base.degree() * d)?;
                let const_embed = if residue == base {
                    FieldEmbedding::identity(base)
                } else {
                    base.embed_into(residue).expect("degree divides by construction")
                };
                let t_image = residue
                    .elements()
                    .find(|z| {
                        let mut acc = residue.zero();
                        for c in v.coeffs().iter().rev() {
                            acc = acc * *z + const_embed.map(*c);
                        }
                        acc.is_zero()
                    })
                    .expect("irreducible of degree d has a root in GF(q^d)");
                Ok(ResidueMap {
                    base,
                    place: place.clone(),
                    residue,
                    const_embed,
                    t_image: Some(t_image),
                })
            }
        }
    }

    pub fn base(&self) -> BinaryField {
        self.base
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn residue_field(&self) -> BinaryField {
        self.residue
    }

    /// Embed a constant into the residue field.
    pub fn map_constant(&self, c: FieldElement) -> FieldElement {
        self.const_embed.map(c)
    }

    /// Reduce a polynomial modulo a finite place (evaluation at the chosen
    /// root). Panics at infinity, where polynomials may have poles.
    pub fn reduce_poly(&self, p: &Poly) -> FieldElement {
        let t = self.t_image.expect("polynomial reduction only at finite places");
        let mut acc = self.residue.zero();
        for c in p.coeffs().iter().rev() {
            acc = acc * t + self.const_embed.map(*c);
        }
        acc
    }

    /// Value of a rational function at the place, `None` on a pole.
    ///
    /// At a finite place: `num·den⁻¹` in the residue field when the
    /// denominator does not vanish (coprimality makes a vanishing denominator
    /// a genuine pole). At infinity: 0 when `deg num < deg den`, the leading
    /// coefficient ratio at equality, and a pole otherwise.
    pub fn eval(&self, f: &RatFunc) -> Option<FieldElement> {
        if f.is_zero() {
            return Some(self.residue.zero());
        }
        match &self.place {
            Place::Finite(_) => {
                let den = self.reduce_poly(f.den());
                let inv = den.inverse()?;
                Some(self.reduce_poly(f.num()) * inv)
            }
            Place::Infinity => {
                let dn = f.num().degree().unwrap();
                let dd = f.den().degree().unwrap();
                match dn.cmp(&dd) {
                    Ordering::Less => Some(self.residue.zero()),
                    Ordering::Equal => {
                        // Denominator is monic, so the ratio is the leading
                        // numerator coefficient.
                        Some(self.const_embed.map(f.num().leading().unwrap()))
                    }
                    Ordering::Greater => None,
                }
            }
        }
    }
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
    fn small_place_lists_over_f2() {
        let names: Vec<String> =
            places_up_to_degree(f2(), 2).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["(t)", "(t+1)", "(t^2+t+1)", "inf"]);
        let deg3: Vec<String> =
            places_up_to_degree(f2(), 3).iter().map(|p| p.to_string()).collect();
        assert!(deg3.contains(&"(t^3+t+1)".to_string()));
        assert!(deg3.contains(&"(t^3+t^2+1)".to_string()));
        assert_eq!(deg3.last().unwrap(), "inf");
        assert_eq!(deg3.len(), 2 + 1 + 2 + 1);
    }

    /// Counts of monic irreducibles satisfy Σ_{e|d} e·N_e = q^d.
    #[test]
    fn necklace_recurrence_holds_up_to_degree_six() {
        for m in [1usize, 2] {
            let field = BinaryField::new(m).unwrap();
            let q = field.order();
            let max = if m == 1 { 6 } else { 4 };
            let places = places_up_to_degree(field, max);
            let mut by_degree = vec![0u64; max + 1];
            for p in &places {
                if let Place::Finite(poly) = p {
                    by_degree[poly.degree().unwrap()] += 1;
                }
            }
            for d in 1..=max {
                let total: u64 = (1..=d)
                    .filter(|e| d % e == 0)
                    .map(|e| e as u64 * by_degree[e])
                    .sum();
                assert_eq!(total, q.pow(d as u32), "q = {q}, d = {d}");
            }
        }
    }

    #[test]
    fn place_order_is_degree_then_coefficients_with_infinity_last() {
        let mut places = places_up_to_degree(f2(), 3);
        let sorted = {
            let mut p = places.clone();
            p.sort();
            p
        };
        assert_eq!(places, sorted);
        places.reverse();
        assert_eq!(places.first(), Some(&Place::Infinity));
    }

    #[test]
    fn evaluation_at_small_places() {
        let t = RatFunc::t(f2());
        let at_t = ResidueMap::new(f2(), &Place::finite(poly_f2(&[0, 1]))).unwrap();
        let at_t1 = ResidueMap::new(f2(), &Place::finite(poly_f2(&[1, 1]))).unwrap();
        let at_inf = ResidueMap::new(f2(), &Place::Infinity).unwrap();
        assert!(at_t.eval(&t).unwrap().is_zero());
        assert!(at_t1.eval(&t).unwrap().is_one());
        let inv_t = t.inverse().unwrap();
        assert!(at_inf.eval(&inv_t).unwrap().is_zero());
        assert!(at_inf.eval(&t).is_none());
        // deg num = deg den at infinity: (t+1)/t → 1.
        let f = RatFunc::new(poly_f2(&[1, 1]), poly_f2(&[0, 1])).unwrap();
        assert!(at_inf.eval(&f).unwrap().is_one());
    }

    #[test]
    fn residue_field_of_quadratic_place_is_gf4() {
        // v = t²+t+1 over F₂: t ↦ least root w in GF(4); t+1 ↦ w+1 = w².
        let v = Place::finite(poly_f2(&[1, 1, 1]));
        let map = ResidueMap::new(f2(), &v).unwrap();
        assert_eq!(map.residue_field().degree(), 2);
        let gf4 = map.residue_field();
        let t_bar = map.reduce_poly(&Poly::t(f2()));
        assert_eq!(t_bar, gf4.generator());
        let t1_bar = map.reduce_poly(&poly_f2(&[1, 1]));
        assert_eq!(t1_bar, gf4.generator() + gf4.one());
        // And v itself reduces to zero.
        assert!(map.reduce_poly(&poly_f2(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn valuations_at_finite_and_infinite_places() {
        let f2 = f2();
        let t = RatFunc::t(f2);
        let b = RatFunc::one(f2).checked_div(&t.pow(8)).unwrap();
        let v_t = Place::finite(poly_f2(&[0, 1]));
        assert_eq!(v_t.valuation(&b), -8);
        assert_eq!(Place::Infinity.valuation(&b), 8);
        assert_eq!(Place::Infinity.valuation(&t.pow(3)), -3);
        let v_t1 = Place::finite(poly_f2(&[1, 1]));
        assert_eq!(v_t1.valuation(&b), 0);
    }
}
