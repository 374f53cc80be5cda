//! Truncated Laurent series over the residue field of a place, and the exact
//! expansion of rational functions into them.

use std::fmt;

use crate::algebra::{AlgebraError, BinaryField, FieldElement, Place, Poly, RatFunc, ResidueMap};

use super::LocalError;

/// Default absolute precision for local computations.
pub const DEFAULT_PRECISION: i64 = 64;

/// Escalation ceiling: drivers double precision up to this bound, then report
/// an indeterminate outcome rather than guessing.
pub const MAX_PRECISION: i64 = 1024;

/// Sentinel precision for exactly-known series (single monomials introduced
/// during Artin–Schreier reduction). Any arithmetic with a genuinely
/// truncated series collapses to the truncated precision via `min`.
const EXACT: i64 = i64::MAX / 4;

/// The completion of `F_q(t)` at a place: the residue field, the deterministic
/// identification of residue classes with the pinned `GF(2^(m·d))`, and the
/// expansion of rational functions into Laurent series.
#[derive(Clone, Debug)]
pub struct LocalField {
    map: ResidueMap,
    /// Rows of the inverted coefficient matrix for lifting residue-field
    /// elements back to polynomial representatives (finite places only).
    lift_rows: Vec<u64>,
}

impl LocalField {
    pub fn new(base: BinaryField, place: &Place) -> Result<LocalField, AlgebraError> {
        let map = ResidueMap::new(base, place)?;
        let lift_rows = match place {
            Place::Infinity => Vec::new(),
            Place::Finite(v) => build_lift_matrix(&map, v),
        };
        Ok(LocalField { map, lift_rows })
    }

    pub fn base(&self) -> BinaryField {
        self.map.base()
    }

    pub fn place(&self) -> &Place {
        self.map.place()
    }

    pub fn residue_field(&self) -> BinaryField {
        self.map.residue_field()
    }

    pub(crate) fn residue_map(&self) -> &ResidueMap {
        &self.map
    }

    /// Human-readable uniformizer (`t+1`, `1/t`, …) for report rendering.
    pub fn uniformizer_name(&self) -> String {
        match self.map.place() {
            Place::Finite(p) => p.to_string(),
            Place::Infinity => "1/t".to_string(),
        }
    }

    /// Zero within precision: no information below `π^prec`.
    pub fn zero(&self, prec: i64) -> LaurentSeries {
        LaurentSeries { field: self.residue_field(), val: prec, coeffs: Vec::new(), prec }
    }

    /// Lift a residue-field element to its polynomial representative of
    /// degree < deg v (finite places). This section is additive but not
    /// multiplicative; expansion must correct it (see [`Self::coeff_lifter`]).
    pub(crate) fn poly_lift(&self, c: FieldElement) -> Poly {
        let v_deg = self.map.place().degree();
        let m = self.base().degree();
        let md = m * v_deg;
        // Multiply the inverse matrix by the coefficient bit-vector: bit j of
        // the solution is the parity of (row j of F⁻¹)·bits.
        let mut x: u64 = 0;
        for j in 0..md {
            let parity = (self.lift_rows[j] & c.bits() as u64).count_ones() & 1;
            x |= (parity as u64) << j;
        }
        let mut coeffs = Vec::with_capacity(v_deg);
        for j in 0..v_deg {
            let bits = ((x >> (j * m)) & ((1 << m) - 1)) as u32;
            coeffs.push(self.base().element(bits));
        }
        Poly::from_coeffs(self.base(), coeffs)
    }

    /// The coefficient-field section `κ(v) → O_v / v^steps`, i.e. the unique
    /// *ring* homomorphism splitting reduction.
    ///
    /// Coefficient-wise Laurent-series arithmetic models the completion only
    /// when coefficients are lifted through a ring section. The polynomial
    /// representative of degree < deg v is additive but multiplies correctly
    /// only modulo `v`, which silently corrupts products at places of degree
    /// ≥ 2; the honest section sends `c` to its Teichmüller representative,
    /// the `v`-adic limit of `x ↦ x^(q^deg v)` on any lift. Degree-1 places
    /// keep the trivial section (constants are already fixed by Frobenius).
    fn coeff_lifter(&self, v: &Poly, steps: usize) -> CoeffLifter {
        if self.map.place().degree() == 1 {
            return CoeffLifter::Constant;
        }
        let md = self.base().degree() * self.map.place().degree();
        let modulus = v.pow(steps as u32);
        let frobenius = |x: &Poly| {
            let mut y = x.clone();
            for _ in 0..md {
                y = y.square().rem(&modulus);
            }
            y
        };
        let mut x = self.poly_lift(self.residue_field().generator());
        loop {
            let next = frobenius(&x);
            if next == x {
                break;
            }
            x = next;
        }
        // Powers of τ(w) span the whole section: τ is a ring map, so the
        // image of Σ bit_k·w^k is Σ bit_k·τ(w)^k.
        let mut powers = Vec::with_capacity(md);
        powers.push(Poly::constant(self.base().one()));
        for _ in 1..md {
            let prev = powers.last().unwrap();
            powers.push((prev * &x).rem(&modulus));
        }
        CoeffLifter::Teichmuller(powers)
    }

    fn lift_with(&self, lifter: &CoeffLifter, c: FieldElement) -> Poly {
        match lifter {
            CoeffLifter::Constant => self.poly_lift(c),
            CoeffLifter::Teichmuller(powers) => {
                let mut acc = Poly::zero(self.base());
                for (k, p) in powers.iter().enumerate() {
                    if c.bits() & (1 << k) != 0 {
                        acc = &acc + p;
                    }
                }
                acc
            }
        }
    }

    /// Exact expansion of a rational function to absolute precision `prec`:
    /// `result ≡ f (mod π^prec)` in `k_v`.
    ///
    /// Finite place: write `f = v^e·(n/d)` with `n`, `d` coprime to `v`, then
    /// peel residues by repeated division with remainder. Infinity:
    /// substitute `t = 1/π` (coefficient reversal) and expand at `π = 0`.
    pub fn expand(&self, f: &RatFunc, prec: i64) -> LaurentSeries {
        assert!(prec >= 1, "expansion precision must be positive");
        if f.is_zero() {
            return self.zero(prec);
        }
        match self.map.place().clone() {
            Place::Finite(v) => {
                let e = self.map.place().valuation(f);
                if e >= prec {
                    return self.zero(prec);
                }
                // Strip v-powers so both parts are v-units.
                let mut n = f.num().clone();
                let mut d = f.den().clone();
                for _ in 0..f.num().ord_at(&v) {
                    n = n.divrem(&v).0;
                }
                for _ in 0..f.den().ord_at(&v) {
                    d = d.divrem(&v).0;
                }
                let d_bar_inv = self
                    .map
                    .reduce_poly(&d)
                    .inverse()
                    .expect("denominator is a v-unit after stripping");
                let steps = (prec - e) as usize;
                let lifter = self.coeff_lifter(&v, steps);
                let mut coeffs = Vec::with_capacity(steps);
                for _ in 0..steps {
                    let c = self.map.reduce_poly(&n) * d_bar_inv;
                    coeffs.push(c);
                    // n ← (n + lift(c)·d) / v, exactly divisible by v.
                    let adjusted = &n + &(&self.lift_with(&lifter, c) * &d);
                    let (q, r) = adjusted.divrem(&v);
                    debug_assert!(r.is_zero(), "residue subtraction must clear the class");
                    n = q;
                }
                LaurentSeries::normalized(self.residue_field(), e, coeffs, prec)
            }
            Place::Infinity => {
                let e = Place::Infinity.valuation(f);
                if e >= prec {
                    return self.zero(prec);
                }
                // Reverse coefficients: n(t) = t^(deg n)·ñ(1/t).
                let reverse = |p: &Poly| {
                    let d = p.degree().unwrap();
                    let coeffs: Vec<FieldElement> = (0..=d).map(|i| p.coeff(d - i)).collect();
                    Poly::from_coeffs(p.field(), coeffs)
                };
                let mut n = reverse(f.num());
                let d = reverse(f.den());
                let d0_inv = d.coeff(0).inverse().expect("reversal has unit constant term");
                let mut coeffs = Vec::with_capacity((prec - e) as usize);
                for _ in 0..(prec - e) {
                    let c = n.coeff(0) * d0_inv;
                    coeffs.push(self.map.map_constant(c));
                    // n ← (n + c·d) / s: the constant term cancels, shift down.
                    let adjusted = &n + &d.scale(c);
                    debug_assert!(adjusted.coeff(0).is_zero());
                    let shifted: Vec<FieldElement> =
                        adjusted.coeffs().iter().skip(1).copied().collect();
                    n = Poly::from_coeffs(f.field(), shifted);
                }
                LaurentSeries::normalized(self.residue_field(), e, coeffs, prec)
            }
        }
    }
}

/// How residue coefficients are lifted back into `O_v` during expansion.
enum CoeffLifter {
    /// Degree-1 place: residue elements are constants of the base field and
    /// already Frobenius-fixed.
    Constant,
    /// Degree ≥ 2: powers `τ(w)^k mod v^steps` of the Teichmüller lift of
    /// the residue-field generator.
    Teichmuller(Vec<Poly>),
}

/// Forward map on basis monomials `e_k·t^j`, inverted once by Gauss–Jordan so
/// residue elements can be lifted back to polynomial representatives.
fn build_lift_matrix(map: &ResidueMap, v: &Poly) -> Vec<u64> {
    let m = map.base().degree();
    let d = v.degree().unwrap();
    let md = m * d;
    // Augmented rows: F (low md bits) | I (next md bits); row i is the i-th
    // output bit as a function of input bits.
    let mut rows = vec![0u64; md];
    for j in 0..d {
        for k in 0..m {
            let basis = Poly::monomial(map.base().element(1 << k), j);
            let img = map.reduce_poly(&basis).bits() as u64;
            let col = j * m + k;
            for (i, row) in rows.iter_mut().enumerate() {
                if img & (1 << i) != 0 {
                    *row |= 1 << col;
                }
            }
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        *row |= 1 << (md + i);
    }
    // Gauss–Jordan to [I | F⁻¹].
    for col in 0..md {
        let pivot = (col..md).find(|&r| rows[r] & (1 << col) != 0).expect("bijective residue map");
        rows.swap(col, pivot);
        for r in 0..md {
            if r != col && rows[r] & (1 << col) != 0 {
                rows[r] ^= rows[col];
            }
        }
    }
    rows.iter().map(|r| r >> md).collect()
}

/// A Laurent series over a residue field, known modulo `π^prec`.
///
/// Invariants: coefficients are indexed `val, val+1, …`; if any are stored,
/// the first is nonzero and all indices are below `prec`; a series that is
/// zero within precision stores nothing and has `val == prec`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    field: BinaryField,
    val: i64,
    coeffs: Vec<FieldElement>,
    prec: i64,
}

impl LaurentSeries {
    pub(crate) fn normalized(
        field: BinaryField,
        mut val: i64,
        mut coeffs: Vec<FieldElement>,
        prec: i64,
    ) -> LaurentSeries {
        // Truncate to precision, strip leading zeros, canonicalize zero.
        if val < prec {
            coeffs.truncate((prec - val).min(coeffs.len() as i64).max(0) as usize);
        } else {
            coeffs.clear();
        }
        while coeffs.first().is_some_and(|c| c.is_zero()) {
            coeffs.remove(0);
            val += 1;
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            val = prec;
        }
        LaurentSeries { field, val, coeffs, prec }
    }

    /// An exactly-known single term `c·π^idx` (or exact zero for `c = 0`).
    pub fn exact_monomial(field: BinaryField, c: FieldElement, idx: i64) -> LaurentSeries {
        if c.is_zero() {
            LaurentSeries { field, val: EXACT, coeffs: Vec::new(), prec: EXACT }
        } else {
            LaurentSeries { field, val: idx, coeffs: vec![c], prec: EXACT }
        }
    }

    /// An exactly-known constant.
    pub fn exact_constant(c: FieldElement) -> LaurentSeries {
        LaurentSeries::exact_monomial(c.field(), c, 0)
    }

    pub fn field(&self) -> BinaryField {
        self.field
    }

    /// Absolute precision: the series is known modulo `π^prec`.
    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Valuation, or `None` when zero within precision (`ν ≥ prec`).
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn is_zero_within_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `π^idx`; must be below the known precision.
    pub fn coeff_at(&self, idx: i64) -> FieldElement {
        assert!(idx < self.prec, "coefficient read beyond precision");
        if idx < self.val || idx - self.val >= self.coeffs.len() as i64 {
            self.field.zero()
        } else {
            self.coeffs[(idx - self.val) as usize]
        }
    }

    /// Restrict to a lower precision.
    pub fn truncated(&self, prec: i64) -> LaurentSeries {
        LaurentSeries::normalized(self.field, self.val, self.coeffs.clone(), prec.min(self.prec))
    }

    /// Index just past the last stored coefficient; everything from here up
    /// to the precision is a known zero (normalization strips trailing
    /// zeros). `i64::MIN` when nothing is stored.
    fn stored_end(&self) -> i64 {
        if self.coeffs.is_empty() {
            i64::MIN
        } else {
            self.val + self.coeffs.len() as i64
        }
    }

    /// Equality of all coefficients below the smaller of the two precisions.
    pub fn eq_within_precision(&self, other: &LaurentSeries) -> bool {
        assert_eq!(self.field, other.field, "residue field mismatch");
        let prec = self.prec.min(other.prec);
        // Beyond both stored ranges every coefficient below `prec` is a
        // known zero, so the scan is bounded by the data rather than by the
        // precision (which is astronomical for exact monomials).
        let lo = self.val.min(other.val).min(prec);
        let hi = self.stored_end().max(other.stored_end()).min(prec);
        (lo..hi).all(|i| self.coeff_at(i) == other.coeff_at(i))
    }

    pub fn add(&self, rhs: &LaurentSeries) -> LaurentSeries {
        assert_eq!(self.field, rhs.field, "residue field mismatch");
        let prec = self.prec.min(rhs.prec);
        if self.coeffs.is_empty() && rhs.coeffs.is_empty() {
            return LaurentSeries { field: self.field, val: prec, coeffs: Vec::new(), prec };
        }
        let lo = self.val.min(rhs.val).min(prec);
        let hi = self.stored_end().max(rhs.stored_end()).min(prec);
        let mut coeffs = Vec::with_capacity((hi - lo).max(0) as usize);
        for i in lo..hi {
            coeffs.push(self.coeff_at(i) + rhs.coeff_at(i));
        }
        LaurentSeries::normalized(self.field, lo, coeffs, prec)
    }

    /// Subtraction coincides with addition in characteristic 2.
    pub fn sub(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add(rhs)
    }

    pub fn mul(&self, rhs: &LaurentSeries) -> LaurentSeries {
        assert_eq!(self.field, rhs.field, "residue field mismatch");
        // Standard bookkeeping: x·y is known modulo π^min(p₁+v₂, p₂+v₁).
        let prec = (self.prec.saturating_add(rhs.val)).min(rhs.prec.saturating_add(self.val));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LaurentSeries { field: self.field, val: prec, coeffs: Vec::new(), prec };
        }
        let val = self.val + rhs.val;
        let len = ((prec - val).min((self.coeffs.len() + rhs.coeffs.len() - 1) as i64)).max(0);
        let mut coeffs = vec![self.field.zero(); len as usize];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if (k as i64) < len {
                    coeffs[k] += a * b;
                }
            }
        }
        LaurentSeries::normalized(self.field, val, coeffs, prec)
    }

    /// Frobenius square: exponents double, coefficients square, and the
    /// precision *doubles* (the cross term of the unknown tail vanishes in
    /// characteristic 2).
    pub fn square(&self) -> LaurentSeries {
        let prec = self.prec.saturating_mul(2).min(EXACT);
        if self.coeffs.is_empty() {
            return LaurentSeries { field: self.field, val: prec, coeffs: Vec::new(), prec };
        }
        let mut coeffs = vec![self.field.zero(); 2 * self.coeffs.len() - 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.square();
        }
        LaurentSeries::normalized(self.field, 2 * self.val, coeffs, prec)
    }

    /// Multiplicative inverse; `None` when zero within precision. Relative
    /// precision is preserved: the result is known modulo `π^(prec − 2·val)`.
    pub fn inverse(&self) -> Option<LaurentSeries> {
        if self.coeffs.is_empty() {
            return None;
        }
        let c0_inv = self.coeffs[0].inverse().expect("leading coefficient is nonzero");
        if self.coeffs.len() == 1 {
            // A lone monomial inverts to a monomial; this also keeps exact
            // monomials exact instead of materializing their precision.
            let prec = self.prec.saturating_sub(2 * self.val).min(EXACT);
            return Some(LaurentSeries::normalized(self.field, -self.val, vec![c0_inv], prec));
        }
        let rel = self.prec - self.val;
        assert!(rel < 1 << 20, "inverting an effectively exact series needs a finite precision");
        let mut inv = Vec::with_capacity(rel as usize);
        inv.push(c0_inv);
        for k in 1..rel as usize {
            // Σ_{i=0..k} c_i·d_{k-i} = 0 for k ≥ 1.
            let mut acc = self.field.zero();
            for i in 1..=k {
                let ci = self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero());
                acc += ci * inv[k - i];
            }
            inv.push(acc * c0_inv);
        }
        Some(LaurentSeries::normalized(self.field, -self.val, inv, self.prec - 2 * self.val))
    }

    pub fn div(&self, rhs: &LaurentSeries) -> Option<LaurentSeries> {
        Some(self.mul(&rhs.inverse()?))
    }

    /// Square root in characteristic 2: requires even valuation and vanishing
    /// odd-index coefficients, halves exponents and takes coefficient roots.
    ///
    /// A `NotASquare` failure is certain: the reported odd-index coefficient
    /// lies below the known precision, so no tail can repair it. The result
    /// is known modulo `π^⌈prec/2⌉` (the unknown tail has a square root of
    /// half its valuation).
    pub fn sqrt(&self) -> Result<LaurentSeries, LocalError> {
        if self.coeffs.is_empty() || self.prec - self.val < 2 {
            return Err(LocalError::InsufficientPrecision);
        }
        if self.val % 2 != 0 {
            return Err(LocalError::NotASquare { obstruction_index: self.val });
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if (self.val + i as i64) % 2 != 0 && !c.is_zero() {
                return Err(LocalError::NotASquare { obstruction_index: self.val + i as i64 });
            }
        }
        let half_prec = div_ceil(self.prec, 2);
        let coeffs: Vec<FieldElement> =
            self.coeffs.iter().step_by(2).map(|c| c.sqrt()).collect();
        Ok(LaurentSeries::normalized(self.field, self.val / 2, coeffs, half_prec))
    }

    /// Solve `w² + w = self` over the completion.
    ///
    /// Requires integral input (`NotIntegral` otherwise — reduce the
    /// Artin–Schreier class first). If the residue has absolute trace 1 the
    /// equation is certainly unsolvable (the extension is inert). Otherwise
    /// Newton iteration `w ← w + (w² + w + c)` squares the residual valuation
    /// each pass and converges in ≤ ⌈log₂ prec⌉ + 1 passes; the solution set
    /// is `{w, w+1}`.
    pub fn artin_schreier_solve(&self) -> Result<LaurentSeries, LocalError> {
        match self.valuation() {
            None => {
                if self.prec <= 0 {
                    return Err(LocalError::InsufficientPrecision);
                }
                return Ok(LaurentSeries {
                    field: self.field,
                    val: self.prec,
                    coeffs: Vec::new(),
                    prec: self.prec,
                });
            }
            Some(v) if v < 0 => return Err(LocalError::NotIntegral),
            Some(_) => {}
        }
        let residue = self.coeff_at(0);
        let Some(w0) = residue.artin_schreier_root() else {
            return Err(LocalError::Unsolvable);
        };
        let mut w = LaurentSeries::exact_constant(w0).truncated(self.prec);
        // Residual valuation at least 1 after the residue step, then squares.
        let mut passes = 0;
        loop {
            let r = w.square().add(&w).add(self);
            if r.is_zero_within_precision() {
                break;
            }
            w = w.add(&r);
            passes += 1;
            assert!(passes <= 64, "Newton iteration failed to converge");
        }
        debug_assert!(w.square().add(&w).add(self).is_zero_within_precision());
        Ok(w)
    }
}

impl fmt::Display for LaurentSeries {
    /// `pi^-1 + w*pi + O(pi^4)` style rendering for reports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = self.val + i as i64;
            if i > 0 {
                write!(f, " + ")?;
            }
            let coeff = if c.needs_parens() { format!("({c})") } else { c.to_string() };
            match idx {
                0 => write!(f, "{coeff}")?,
                1 if c.is_one() => write!(f, "pi")?,
                1 => write!(f, "{coeff}*pi")?,
                _ if c.is_one() => write!(f, "pi^{idx}")?,
                _ => write!(f, "{coeff}*pi^{idx}")?,
            }
        }
        if self.prec >= EXACT {
            // Exactly-known values have no precision tail to report.
            if self.coeffs.is_empty() {
                f.write_str("0")?;
            }
            Ok(())
        } else if self.coeffs.is_empty() {
            write!(f, "O(pi^{})", self.prec)
        } else {
            write!(f, " + O(pi^{})", self.prec)
        }
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> BinaryField {
        BinaryField::new(1).unwrap()
    }

    fn place(text: &str) -> Place {
        match text {
            "inf" => Place::Infinity,
            _ => {
                let p = parse_ratfunc(text, f2()).unwrap();
                Place::finite(p.as_poly().unwrap().clone())
            }
        }
    }

    fn expand(f_text: &str, place_text: &str, prec: i64) -> LaurentSeries {
        let lf = LocalField::new(f2(), &place(place_text)).unwrap();
        lf.expand(&parse_ratfunc(f_text, f2()).unwrap(), prec)
    }

    #[test]
    fn expansion_examples_at_small_places() {
        // 1/t at ∞ is π (t = 1/π).
        let s = expand("1/t", "inf", 4);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.to_string(), "pi + O(pi^4)");
        // (t²+1)/t at (t) is π⁻¹ + π.
        let s = expand("(t^2+1)/t", "t", 4);
        assert_eq!(s.valuation(), Some(-1));
        assert!(s.coeff_at(-1).is_one() && s.coeff_at(1).is_one() && s.coeff_at(0).is_zero());
        // t at (t+1) is 1 + π.
        let s = expand("t", "t+1", 2);
        assert_eq!(s.valuation(), Some(0));
        assert!(s.coeff_at(0).is_one() && s.coeff_at(1).is_one());
    }

    #[test]
    fn expansion_respects_ring_operations() {
        // Higher-degree places are the interesting case: they only work
        // because coefficients are lifted through a ring section.
        for place_text in ["t+1", "t^2+t+1", "t^3+t+1", "inf"] {
            let lf = LocalField::new(f2(), &place(place_text)).unwrap();
            let f = parse_ratfunc("(t^2+1)/(t^3+t+1)", f2()).unwrap();
            let g = parse_ratfunc("t^5/(t^2+t+1)", f2()).unwrap();
            let (sf, sg) = (lf.expand(&f, 30), lf.expand(&g, 30));
            assert!(lf.expand(&(&f + &g), 30).eq_within_precision(&sf.add(&sg)));
            assert!(lf.expand(&(&f * &g), 30).eq_within_precision(&sf.mul(&sg)));
            assert!(lf.expand(&f.square(), 30).eq_within_precision(&sf.square()));
            let inv = sf.inverse().unwrap();
            assert!(lf.expand(&f.inverse().unwrap(), 20).eq_within_precision(&inv));
            // Consistency under precision refinement.
            assert!(lf.expand(&f, 60).eq_within_precision(&sf));
        }
    }

    #[test]
    fn residue_coefficients_live_in_the_residue_field() {
        let lf = LocalField::new(f2(), &place("t^2+t+1")).unwrap();
        assert_eq!(lf.residue_field().degree(), 2);
        let s = lf.expand(&parse_ratfunc("t/(t^2+t+1)", f2()).unwrap(), 5);
        assert_eq!(s.valuation(), Some(-1));
        // Leading coefficient is t̄/1 = w.
        assert_eq!(s.coeff_at(-1), lf.residue_field().generator());
    }

    #[test]
    fn sqrt_halves_even_series_and_refutes_odd_ones() {
        let lf = LocalField::new(f2(), &place("t")).unwrap();
        // π² → π.
        let s = lf.expand(&parse_ratfunc("t^2", f2()).unwrap(), 8);
        let r = s.sqrt().unwrap();
        assert_eq!(r.valuation(), Some(1));
        assert!(r.square().eq_within_precision(&s));
        // π² + π⁴ → π + π² (char 2).
        let s = lf.expand(&parse_ratfunc("t^2+t^4", f2()).unwrap(), 8);
        let r = s.sqrt().unwrap();
        assert!(r.coeff_at(1).is_one() && r.coeff_at(2).is_one());
        assert!(r.square().eq_within_precision(&s));
        // π is certainly not a square (odd valuation).
        let s = lf.expand(&parse_ratfunc("t", f2()).unwrap(), 8);
        assert_eq!(s.sqrt(), Err(LocalError::NotASquare { obstruction_index: 1 }));
        // Odd-index obstruction above the valuation.
        let s = lf.expand(&parse_ratfunc("t^2+t^5", f2()).unwrap(), 8);
        assert_eq!(s.sqrt(), Err(LocalError::NotASquare { obstruction_index: 5 }));
        // One known coefficient is not enough to halve.
        let s = lf.expand(&parse_ratfunc("t^2", f2()).unwrap(), 3);
        assert_eq!(s.sqrt(), Err(LocalError::InsufficientPrecision));
    }

    #[test]
    fn sqrt_round_trips_on_random_even_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a5a);
        let fields = [BinaryField::new(1).unwrap(), BinaryField::new(3).unwrap()];
        for _ in 0..1000 {
            let field = fields[rng.gen_range(0..2)];
            let val = rng.gen_range(-4..4);
            let len = rng.gen_range(1..12);
            let coeffs: Vec<FieldElement> = (0..len)
                .map(|_| field.element(rng.gen_range(0..field.order()) as u32))
                .collect();
            let r = LaurentSeries::normalized(field, val, coeffs, val + len as i64);
            if r.is_zero_within_precision() {
                continue;
            }
            let s = r.square();
            let back = s.sqrt().expect("a square must pass the square test");
            assert!(back.eq_within_precision(&r));
        }
    }

    #[test]
    fn artin_schreier_solver_matches_telescoping_example() {
        let lf = LocalField::new(f2(), &place("t")).unwrap();
        // c = π with precision 9: w = π + π² + π⁴ + π⁸.
        let c = lf.expand(&parse_ratfunc("t", f2()).unwrap(), 9);
        let w = c.artin_schreier_solve().unwrap();
        for idx in [1, 2, 4, 8] {
            assert!(w.coeff_at(idx).is_one(), "missing π^{idx}");
        }
        assert_eq!(
            (1..9).filter(|&i| w.coeff_at(i).is_one()).count(),
            4,
            "no extra terms below precision"
        );
        // c = 0 → w = 0.
        let z = lf.zero(16);
        assert!(z.artin_schreier_solve().unwrap().is_zero_within_precision());
        // Residue trace 1 over F₂ → certainly unsolvable.
        let c = lf.expand(&parse_ratfunc("1", f2()).unwrap(), 8);
        assert_eq!(c.artin_schreier_solve(), Err(LocalError::Unsolvable));
        // Poles must be reduced first.
        let c = lf.expand(&parse_ratfunc("1/t", f2()).unwrap(), 8);
        assert_eq!(c.artin_schreier_solve(), Err(LocalError::NotIntegral));
    }

    #[test]
    fn artin_schreier_residual_clears_to_precision_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xa57a);
        let fields = [
            BinaryField::new(1).unwrap(),
            BinaryField::new(2).unwrap(),
            BinaryField::new(4).unwrap(),
        ];
        let mut solved = 0;
        for _ in 0..1000 {
            let field = fields[rng.gen_range(0..3)];
            let prec = rng.gen_range(4..40);
            let coeffs: Vec<FieldElement> = (0..prec)
                .map(|_| field.element(rng.gen_range(0..field.order()) as u32))
                .collect();
            let c = LaurentSeries::normalized(field, 0, coeffs, prec);
            match c.artin_schreier_solve() {
                Ok(w) => {
                    solved += 1;
                    let residual = w.square().add(&w).add(&c);
                    assert!(residual.is_zero_within_precision());
                    assert_eq!(w.precision(), c.precision());
                    // The companion root w+1 also solves.
                    let w1 = w.add(&LaurentSeries::exact_constant(field.one()));
                    assert!(w1.square().add(&w1).add(&c).is_zero_within_precision());
                }
                Err(LocalError::Unsolvable) => {
                    assert_eq!(c.coeff_at(0).trace(), 1);
                }
                Err(e) => panic!("unexpected failure: {e}"),
            }
        }
        assert!(solved > 300, "sampler should hit plenty of solvable cases");
    }

    #[test]
    fn exact_monomials_do_not_degrade_precision() {
        let lf = LocalField::new(f2(), &place("t")).unwrap();
        let s = lf.expand(&parse_ratfunc("1/t^4+t", f2()).unwrap(), 10);
        let h = LaurentSeries::exact_monomial(f2(), f2().one(), -2);
        let reduced = s.add(&h.square()).add(&h);
        assert_eq!(reduced.precision(), 10);
        assert_eq!(reduced.valuation(), Some(-2));
    }
}
