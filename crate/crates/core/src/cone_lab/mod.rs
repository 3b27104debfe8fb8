//! Exact rational polyhedral cones: canonical primitive rays, duals by
//! double description, LP membership with independently re-checked
//! certificates, extremality and simpliciality tests, and unique linear
//! relations between vectors.

pub mod cone;
pub mod dual;
pub mod lp;
pub mod ray;
pub mod relation;

pub use cone::Cone;
pub use dual::dual_cone;
pub use lp::{is_extremal_generator, is_simplicial, membership, ExtremalityReport, MembershipCertificate};
pub use ray::{canonicalize_ray, Ray};
pub use relation::unique_relation;

/// Errors raised by cone constructions and queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    /// The zero vector has no direction and cannot become a ray.
    #[error("cannot canonicalize the zero vector into a ray")]
    ZeroVector,
    /// A vector's length does not match the cone's ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A ray index outside `0..cone.rays().len()`.
    #[error("ray index {index} out of range for {len} rays")]
    IndexOutOfRange { index: usize, len: usize },
    /// The kernel of the vector family has dimension two or more, so no
    /// single relation is distinguished.
    #[error("relation is not unique: kernel dimension {0} exceeds 1")]
    AmbiguousRelation(usize),
}
