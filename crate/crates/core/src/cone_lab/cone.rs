//! Cones in canonical V-representation: sorted, deduplicated primitive rays.

use crate::algebra_core::linalg::Mat;
use crate::algebra_core::rat::Rat;

use super::ray::{canonicalize_ray, Ray};
use super::ConeError;

/// A rational polyhedral cone given by generators. The stored form is
/// canonical — primitive rays, lexicographically sorted, deduplicated — so
/// two cones are equal as objects exactly when their canonical
/// V-representations coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<Ray>,
}

impl Cone {
    /// Builds a cone from rays, enforcing matching dimensions and putting
    /// the generator list into canonical form.
    pub fn new(ambient_dim: usize, rays: Vec<Ray>) -> Result<Cone, ConeError> {
        for r in &rays {
            if r.dim() != ambient_dim {
                return Err(ConeError::DimensionMismatch {
                    expected: ambient_dim,
                    got: r.dim(),
                });
            }
        }
        let mut rays = rays;
        rays.sort();
        rays.dedup();
        Ok(Cone { ambient_dim, rays })
    }

    /// Builds a cone from rational generator vectors (each canonicalized).
    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Result<Cone, ConeError> {
        let mut rays = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(ConeError::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.len(),
                });
            }
            rays.push(canonicalize_ray(v)?);
        }
        Cone::new(ambient_dim, rays)
    }

    /// The zero cone: no generators.
    pub fn zero(ambient_dim: usize) -> Cone {
        Cone {
            ambient_dim,
            rays: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    /// Matrix whose rows are the generator directions.
    pub fn ray_matrix(&self) -> Mat {
        Mat::from_rows(self.rays.iter().map(Ray::as_rationals).collect())
    }

    /// Dimension of the linear span of the generators.
    pub fn span_rank(&self) -> usize {
        if self.rays.is_empty() {
            0
        } else {
            self.ray_matrix().rank()
        }
    }

    /// The cone generated by all rays except the one at `index`.
    pub fn without_ray(&self, index: usize) -> Result<Cone, ConeError> {
        if index >= self.rays.len() {
            return Err(ConeError::IndexOutOfRange {
                index,
                len: self.rays.len(),
            });
        }
        let mut rays = self.rays.clone();
        rays.remove(index);
        Cone::new(self.ambient_dim, rays)
    }
}

impl std::fmt::Display for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cone{{")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra_core::rat::{rat, rat_int};
    use crate::cone_lab::ray::ray_from_ints;

    use super::*;

    #[test]
    fn canonical_form_sorts_and_dedups() {
        let a = Cone::from_vectors(
            2,
            &[
                vec![rat_int(2), rat_int(0)],
                vec![rat_int(0), rat_int(3)],
                vec![rat_int(1), rat_int(0)],
            ],
        )
        .unwrap();
        let b = Cone::new(
            2,
            vec![ray_from_ints(&[0, 1]).unwrap(), ray_from_ints(&[1, 0]).unwrap()],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scaled_generators_give_equal_cones() {
        let a = Cone::from_vectors(2, &[vec![rat(1, 3), rat(1, 6)]]).unwrap();
        let b = Cone::from_vectors(2, &[vec![rat_int(2), rat_int(1)]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = Cone::from_vectors(3, &[vec![rat_int(1), rat_int(0)]]).unwrap_err();
        assert_eq!(
            err,
            ConeError::DimensionMismatch {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn span_rank_counts_independent_directions() {
        let c = Cone::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(0)],
                vec![rat_int(1), rat_int(1), rat_int(0)],
            ],
        )
        .unwrap();
        assert_eq!(c.span_rank(), 2);
    }
}
