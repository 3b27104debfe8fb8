//! Arithmetic counting functions for level structures: cusp numbers, group
//! orders, and the section self-intersection, all exact.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra_core::rat::{rat, Rat};

/// Distinct prime factors by trial division (inputs are small levels).
fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Number of cusps of the level-`n` modular curve:
/// `t(n) = ½·n²·∏_{p|n}(1 − 1/p²)`. Half-integral at n = 1 and n = 2,
/// evaluated as written.
pub fn cusp_count(n: u64) -> Rat {
    assert!(n >= 1, "level must be positive");
    let mut t = rat(1, 2) * Rat::from_integer(BigInt::from(n * n));
    for p in prime_factors(n) {
        let p2 = BigInt::from(p * p);
        t *= Rat::one() - Rat::new(BigInt::one(), p2);
    }
    t
}

/// The group whose order is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// SL₂ over Z/n: order `2n·t(n)`.
    Sl2,
    /// Elliptic-fiber automorphisms over the level-n curve: `2n³·t(n)`.
    G,
    /// Automorphisms of the level-n cover of the product family: `2n⁵·t(n)`.
    H,
    /// Stabilizer relevant to the parametric surface model: `16n²·t(n)`.
    SpStab,
}

/// Exact group order; always an integer.
pub fn group_order(kind: GroupKind, n: u64) -> BigInt {
    let t = cusp_count(n);
    let nn = Rat::from_integer(BigInt::from(n));
    let value = match kind {
        GroupKind::Sl2 => rat(2, 1) * &nn * &t,
        GroupKind::G => rat(2, 1) * nn.pow(3) * &t,
        GroupKind::H => rat(2, 1) * nn.pow(5) * &t,
        GroupKind::SpStab => rat(16, 1) * nn.pow(2) * &t,
    };
    assert!(value.is_integer(), "group orders are integers");
    value.to_integer()
}

/// Self-intersection of a section of the level-n elliptic surface:
/// `−(n/12)·t(n)`.
pub fn section_self_intersection(n: u64) -> Rat {
    -rat(n as i64, 12) * cusp_count(n)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use crate::algebra_core::rat::rat_int;

    use super::*;

    /// Oracle: t(n) is half the number of primitive vectors in (Z/n)².
    fn primitive_vector_count(n: u64) -> u64 {
        let mut count = 0;
        for x in 0..n {
            for y in 0..n {
                let mut g = gcd(gcd(x, y), n);
                if n == 1 {
                    g = 1;
                }
                if g == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn cusp_count_matches_primitive_vector_enumeration() {
        for n in 1..=12 {
            let expected = rat(primitive_vector_count(n) as i64, 2);
            assert_eq!(cusp_count(n), expected, "n = {n}");
        }
    }

    #[test]
    fn small_values_are_the_known_ones() {
        assert_eq!(cusp_count(1), rat(1, 2));
        assert_eq!(cusp_count(2), rat(3, 2));
        assert_eq!(cusp_count(3), rat_int(4));
        assert_eq!(cusp_count(4), rat_int(6));
        assert_eq!(cusp_count(5), rat_int(12));
    }

    /// Oracle: exhaustive count of determinant-1 matrices over Z/n.
    fn sl2_order_by_enumeration(n: u64) -> u64 {
        if n == 1 {
            return 1;
        }
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if (a * d % n + n - b * c % n) % n == 1 {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn sl2_order_matches_enumeration() {
        for n in 1..=6 {
            assert_eq!(
                group_order(GroupKind::Sl2, n),
                BigInt::from(sl2_order_by_enumeration(n)),
                "n = {n}"
            );
        }
        assert_eq!(group_order(GroupKind::Sl2, 2), BigInt::from(6));
    }

    #[test]
    fn order_identities_hold_for_small_levels() {
        for n in 1..=50u64 {
            let t = cusp_count(n);
            let sl2 = group_order(GroupKind::Sl2, n);
            assert_eq!(
                Rat::from_integer(sl2.clone()),
                rat(2, 1) * rat_int(n as i64) * &t
            );
            assert_eq!(
                group_order(GroupKind::G, n),
                BigInt::from(n * n) * &sl2,
                "G = n²·SL2"
            );
            assert_eq!(
                group_order(GroupKind::H, n),
                BigInt::from(n * n * n * n) * &sl2,
                "H = n⁴·SL2"
            );
            assert_eq!(
                group_order(GroupKind::SpStab, n),
                BigInt::from(8 * n) * sl2,
                "SpStab = 8n·SL2"
            );
        }
    }

    #[test]
    fn cusp_count_is_multiplicative_up_to_the_half_factor() {
        // t(mn) = 2·t(m)·t(n) for coprime m, n.
        for (m, n) in [(2u64, 3u64), (3, 4), (4, 5), (5, 6), (3, 8), (7, 9)] {
            assert_eq!(cusp_count(m * n), rat_int(2) * cusp_count(m) * cusp_count(n));
        }
    }

    #[test]
    fn h_order_at_level_three() {
        assert_eq!(group_order(GroupKind::H, 3), BigInt::from(1944));
    }

    #[test]
    fn section_self_intersection_values() {
        assert_eq!(section_self_intersection(1), rat(-1, 24));
        assert!((section_self_intersection(1) + rat(1, 24)).is_zero());
        // −(n/12)·t(n) at n = 5: −(5/12)·12 = −5.
        assert_eq!(section_self_intersection(5), rat_int(-5));
    }
}
