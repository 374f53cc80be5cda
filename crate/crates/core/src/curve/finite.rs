//! Point counting and point orders over finite fields `GF(2^m)`.

use crate::algebra::FieldElement;

use super::{Curve, Point};

/// Number of rational points (including infinity) and the Frobenius trace
/// `q + 1 − #E`.
///
/// Substituting `y = x·s` turns the affine fibre over `x ≠ 0` into
/// `s² + s = x + a + b/x²`, which has two solutions when the right side has
/// absolute trace 0 and none otherwise; the fibre over `x = 0` is the single
/// point `(0, √b)`.
pub fn count_points(e: &Curve<FieldElement>) -> (u64, i64) {
    let field = e.a().field();
    let q = field.order();
    let mut count = 2; // infinity and (0, √b)
    for bits in 1..q {
        let x = field.element(bits as u32);
        let c = x + *e.a() + *e.b() * x.square().inverse().expect("x is nonzero");
        if c.trace() == 0 {
            count += 2;
        }
    }
    (count, q as i64 + 1 - count as i64)
}

/// Exact order of a point, by iterated addition bounded by the group order.
pub fn point_order(e: &Curve<FieldElement>, p: &Point<FieldElement>) -> u64 {
    let (group_order, _) = count_points(e);
    let mut acc = p.clone();
    let mut order = 1;
    while !acc.is_infinity() {
        acc = e.add_points(&acc, p);
        order += 1;
        assert!(order <= group_order, "order exceeds the group order: point not on curve?");
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BinaryField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: count by brute force over all (x, y) pairs.
    fn count_by_enumeration(e: &Curve<FieldElement>) -> u64 {
        let field = e.a().field();
        let mut count = 1;
        for xb in 0..field.order() {
            for yb in 0..field.order() {
                let p = Point::affine(field.element(xb as u32), field.element(yb as u32));
                if e.contains(&p) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn pinned_small_counts() {
        let f2 = BinaryField::new(1).unwrap();
        let f4 = BinaryField::new(2).unwrap();
        let w = f4.generator();
        // s² + st = t³ + 1 read as (x, y) = (t, s): four points, trace −1.
        let e = Curve::new(f2.zero(), f2.one()).unwrap();
        assert_eq!(count_points(&e), (4, -1));
        // y² + xy = x³ + x² + 1 over GF(2): the group is {∞, (0,1)}.
        let e = Curve::new(f2.one(), f2.one()).unwrap();
        assert_eq!(count_points(&e), (2, 1));
        // y² + xy = x³ + ω over GF(4): four points, trace +1.
        let e = Curve::new(f4.zero(), w).unwrap();
        assert_eq!(count_points(&e), (4, 1));
        // Its quadratic twist (a = ω has absolute trace 1) has the
        // complementary count 2q + 2 − 4 = 6 and trace −1.
        let e = Curve::new(w, w).unwrap();
        assert_eq!(count_points(&e), (6, -1));
    }

    #[test]
    fn trace_formula_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
        for m in [1usize, 2, 3, 4] {
            let field = BinaryField::new(m).unwrap();
            for _ in 0..20 {
                let a = field.element(rng.gen_range(0..field.order()) as u32);
                let b = field.element(rng.gen_range(1..field.order()) as u32);
                let e = Curve::new(a, b).unwrap();
                assert_eq!(count_points(&e).0, count_by_enumeration(&e));
            }
        }
    }

    #[test]
    fn hasse_bound_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4a55e);
        for m in [2usize, 4, 6, 8] {
            let field = BinaryField::new(m).unwrap();
            let bound = 2.0 * (field.order() as f64).sqrt();
            for _ in 0..25 {
                let a = field.element(rng.gen_range(0..field.order()) as u32);
                let b = field.element(rng.gen_range(1..field.order()) as u32);
                let (_, trace) = count_points(&Curve::new(a, b).unwrap());
                assert!((trace.abs() as f64) <= bound);
            }
        }
    }

    #[test]
    fn orders_divide_the_group_order_and_pin_known_cases() {
        let f2 = BinaryField::new(1).unwrap();
        let e = Curve::new(f2.one(), f2.one()).unwrap();
        assert_eq!(point_order(&e, &Point::Infinity), 1);
        assert_eq!(point_order(&e, &e.two_torsion().unwrap()), 2);

        let mut rng = ChaCha8Rng::seed_from_u64(0x0bd);
        for m in [2usize, 3, 4] {
            let field = BinaryField::new(m).unwrap();
            for _ in 0..10 {
                let a = field.element(rng.gen_range(0..field.order()) as u32);
                let b = field.element(rng.gen_range(1..field.order()) as u32);
                let e = Curve::new(a, b).unwrap();
                let (n, _) = count_points(&e);
                for xb in 0..field.order() {
                    for yb in 0..field.order() {
                        let p = Point::affine(field.element(xb as u32), field.element(yb as u32));
                        if e.contains(&p) {
                            assert_eq!(n % point_order(&e, &p), 0, "Lagrange");
                        }
                    }
                }
            }
        }
    }
}
