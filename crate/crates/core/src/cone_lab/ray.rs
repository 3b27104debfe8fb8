//! Primitive integer rays: the canonical representatives of rational
//! half-line directions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra_core::rat::Rat;

use super::ConeError;

/// A primitive integer direction vector: nonzero, denominator-free, with
/// the gcd of its entries equal to one. Two rational vectors spanning the
/// same half-line canonicalize to the same `Ray`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    direction: Vec<BigInt>,
}

impl Ray {
    pub fn direction(&self) -> &[BigInt] {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.direction.len()
    }

    /// The direction as exact rationals, for arithmetic with coordinates.
    pub fn as_rationals(&self) -> Vec<Rat> {
        self.direction
            .iter()
            .map(|z| Rat::from_integer(z.clone()))
            .collect()
    }
}

impl std::fmt::Display for Ray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.direction.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, ")")
    }
}

/// Scales a nonzero rational vector by the unique positive factor that
/// clears denominators and reduces the entries to gcd one.
pub fn canonicalize_ray(v: &[Rat]) -> Result<Ray, ConeError> {
    if v.iter().all(Rat::is_zero) {
        return Err(ConeError::ZeroVector);
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for z in &ints {
        gcd = gcd.gcd(z);
    }
    debug_assert!(gcd.is_positive());
    Ok(Ray {
        direction: ints.into_iter().map(|z| z / &gcd).collect(),
    })
}

/// Canonicalizes an integer vector directly.
pub fn ray_from_ints(v: &[i64]) -> Result<Ray, ConeError> {
    let rats: Vec<Rat> = v.iter().map(|&z| Rat::from_integer(z.into())).collect();
    canonicalize_ray(&rats)
}

#[cfg(test)]
mod tests {
    use crate::algebra_core::rat::{rat, rat_int};

    use super::*;

    #[test]
    fn clears_denominators_and_divides_by_gcd() {
        let ray = canonicalize_ray(&[rat(1, 1152), rat_int(0), rat_int(0), rat(1, 16)]).unwrap();
        assert_eq!(ray, ray_from_ints(&[1, 0, 0, 72]).unwrap());

        let ray = canonicalize_ray(&[rat_int(2), rat_int(4), rat_int(6), rat_int(0)]).unwrap();
        assert_eq!(ray, ray_from_ints(&[1, 2, 3, 0]).unwrap());
    }

    #[test]
    fn preserves_direction_of_negative_vectors() {
        let ray = canonicalize_ray(&[rat(-1, 2), rat(1, 4)]).unwrap();
        assert_eq!(ray, ray_from_ints(&[-2, 1]).unwrap());
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert_eq!(
            canonicalize_ray(&[rat_int(0), rat_int(0)]).unwrap_err(),
            ConeError::ZeroVector
        );
    }
}
