//! Integer divisibility inside a finitely generated abelian group
//! `E(k) ≅ Z^r ⊕ ∏ Z/dᵢ`, presented by coordinates.
//!
//! An element written over fixed generators is divisible by `m` exactly when
//! each free coordinate is `≡ 0 (mod m)` and each torsion coordinate lies in
//! `m·(Z/dᵢ) = gcd(m, dᵢ)·(Z/dᵢ)`. The torsion-blind variant decides
//! membership in `m·E(k) + E(k)_tors`, which only constrains the free part.

use super::GaloisError;

/// Shape of a finitely generated Mordell–Weil group: free rank plus the
/// orders of the cyclic torsion factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MordellWeilGroup {
    free_rank: usize,
    torsion_orders: Vec<u64>,
}

/// Coordinates of a point over the presentation's generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MordellWeilElement {
    free: Vec<i64>,
    torsion: Vec<i64>,
}

impl MordellWeilElement {
    pub fn free_coordinates(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion_coordinates(&self) -> &[i64] {
        &self.torsion
    }
}

impl MordellWeilGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<u64>) -> MordellWeilGroup {
        assert!(
            torsion_orders.iter().all(|&d| d >= 1),
            "torsion factors must have positive order"
        );
        MordellWeilGroup { free_rank, torsion_orders }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion_orders
    }

    /// Package coordinates, checking they match the presentation's shape.
    pub fn element(
        &self,
        free: Vec<i64>,
        torsion: Vec<i64>,
    ) -> Result<MordellWeilElement, GaloisError> {
        if free.len() != self.free_rank || torsion.len() != self.torsion_orders.len() {
            return Err(GaloisError::MismatchedCoordinates);
        }
        Ok(MordellWeilElement { free, torsion })
    }

    /// Whether the element lies in `m·E(k)`.
    pub fn is_divisible(&self, element: &MordellWeilElement, m: u64) -> bool {
        assert!(m >= 1, "modulus must be positive");
        self.free_part_divisible(element, m)
            && element.torsion.iter().zip(&self.torsion_orders).all(|(&x, &d)| {
                let g = gcd(m, d);
                x.rem_euclid(d as i64) % g as i64 == 0
            })
    }

    /// Whether the element lies in `m·E(k) + E(k)_tors`.
    pub fn is_divisible_up_to_torsion(&self, element: &MordellWeilElement, m: u64) -> bool {
        assert!(m >= 1, "modulus must be positive");
        self.free_part_divisible(element, m)
    }

    fn free_part_divisible(&self, element: &MordellWeilElement, m: u64) -> bool {
        element.free.iter().all(|&x| x.rem_euclid(m as i64) == 0)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `Z ⊕ Z/2`: the shape of the rank-one examples.
    fn rank_one_with_two_torsion() -> MordellWeilGroup {
        MordellWeilGroup::new(1, vec![2])
    }

    #[test]
    fn pinned_divisibility_in_the_rank_one_shape() {
        let g = rank_one_with_two_torsion();
        let four_p = g.element(vec![4], vec![0]).unwrap();
        assert!(!g.is_divisible(&four_p, 8));
        assert!(!g.is_divisible_up_to_torsion(&four_p, 8));
        assert!(g.is_divisible(&four_p, 4));

        let eight_p = g.element(vec![8], vec![0]).unwrap();
        assert!(g.is_divisible(&eight_p, 8));

        // The torsion generator is not divisible by any even modulus, but odd
        // moduli invert on Z/2.
        let t = g.element(vec![0], vec![1]).unwrap();
        assert!(!g.is_divisible(&t, 8));
        assert!(g.is_divisible_up_to_torsion(&t, 8));
        assert!(g.is_divisible(&t, 3));

        let mixed = g.element(vec![8], vec![1]).unwrap();
        assert!(!g.is_divisible(&mixed, 8));
        assert!(g.is_divisible_up_to_torsion(&mixed, 8));
    }

    #[test]
    fn division_agrees_with_a_brute_force_witness_search() {
        // Exhaustively compare against "∃ y with m·y = x" on Z ⊕ Z/4 ⊕ Z/3.
        let g = MordellWeilGroup::new(1, vec![4, 3]);
        for m in 1..=9u64 {
            for x0 in -12..=12i64 {
                for x1 in 0..4i64 {
                    for x2 in 0..3i64 {
                        let x = g.element(vec![x0], vec![x1, x2]).unwrap();
                        let witness = (-12..=12).any(|y0: i64| {
                            (0..4).any(|y1: i64| {
                                (0..3).any(|y2: i64| {
                                    m as i64 * y0 == x0
                                        && (m as i64 * y1 - x1) % 4 == 0
                                        && (m as i64 * y2 - x2) % 3 == 0
                                })
                            })
                        });
                        assert_eq!(g.is_divisible(&x, m), witness, "x = {x:?}, m = {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn negative_coordinates_reduce_correctly() {
        let g = rank_one_with_two_torsion();
        let minus_eight = g.element(vec![-8], vec![-1]).unwrap();
        // -1 ≡ 1 (mod 2): the torsion part blocks division by 2.
        assert!(!g.is_divisible(&minus_eight, 8));
        assert!(g.is_divisible_up_to_torsion(&minus_eight, 8));
        let minus_eight_clean = g.element(vec![-8], vec![0]).unwrap();
        assert!(g.is_divisible(&minus_eight_clean, 8));
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let g = rank_one_with_two_torsion();
        assert_eq!(
            g.element(vec![1, 2], vec![0]).unwrap_err(),
            GaloisError::MismatchedCoordinates
        );
        assert_eq!(
            g.element(vec![1], vec![]).unwrap_err(),
            GaloisError::MismatchedCoordinates
        );
    }
}
