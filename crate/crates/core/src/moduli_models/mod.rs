//! Concrete space models: graded quotient rings, the trilinear
//! boundary-stratum model, the surface/H⁴ pairing space, the parametric
//! level-surface ring, and level-structure counting functions.

pub mod arith;
pub mod builtin;
pub mod levelring;
pub mod pairing;
pub mod trilinear;

pub use arith::{cusp_count, group_order, section_self_intersection, GroupKind};
pub use builtin::RingSpace;
pub use levelring::{LevelElem, LevelParamRing, ParamPoly};
pub use pairing::{pushforward_row, PairingSpace};
pub use trilinear::TrilinearSpace;

use crate::algebra_core::presentation::BuildError;
use crate::algebra_core::EvalError;

/// Errors raised while building or querying a space model.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    /// Not one of the built-in space names.
    #[error("unknown space `{0}`")]
    UnknownSpace(String),
    /// Catalog lookup failure.
    #[error("unknown class `{0}` in space `{1}`")]
    UnknownClass(String, String),
    /// A class that must be linear in the divisor generators is not.
    #[error("not a linear combination of divisor generators")]
    NonDivisorClass,
    /// A contraction received an expression of the wrong degree.
    #[error("expected a homogeneous expression of degree {expected}")]
    DegreeMismatch { expected: usize },
    /// A normalized value still depends on the formal parameters.
    #[error("formal parameters do not cancel in the normalized value")]
    ParameterNotCancelled,
    /// A pushforward needs a pullback class the catalog does not provide.
    #[error("catalog is missing pullback class `{0}`")]
    MissingPullback(String),
    /// Evaluation error from the underlying algebra.
    #[error(transparent)]
    Eval(#[from] EvalError),
    /// Construction error from the underlying algebra.
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// One dumpable catalog line: a named class with its degree, a printable
/// expression, and a short description of its role.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub expression: String,
    pub description: String,
}

/// A fully built model, addressable by name.
#[derive(Debug, Clone)]
pub enum SpaceModel {
    Ring(RingSpace),
    Trilinear(TrilinearSpace),
    Pairing(PairingSpace),
    LevelParam(LevelParamRing),
}

impl SpaceModel {
    pub fn name(&self) -> &str {
        match self {
            SpaceModel::Ring(s) => s.name(),
            SpaceModel::Trilinear(s) => s.name(),
            SpaceModel::Pairing(s) => s.name(),
            SpaceModel::LevelParam(s) => s.name(),
        }
    }

    pub fn catalog_entries(&self) -> Vec<CatalogEntry> {
        match self {
            SpaceModel::Ring(s) => s.catalog_entries(),
            SpaceModel::Trilinear(s) => s.catalog_entries(),
            SpaceModel::Pairing(s) => s.catalog_entries(),
            SpaceModel::LevelParam(s) => s.catalog_entries(),
        }
    }
}

/// Names accepted by [`build_space`].
pub fn space_names() -> &'static [&'static str] {
    &[
        "A1", "X1", "A2", "A1xA2", "Vcover", "Ytilde", "A3_H4", "SP_level",
    ]
}

/// Builds a model by name.
pub fn build_space(name: &str) -> Result<SpaceModel, ModelError> {
    match name {
        "A1" => Ok(SpaceModel::Ring(builtin::a1())),
        "X1" => Ok(SpaceModel::Ring(builtin::x1())),
        "A2" => Ok(SpaceModel::Ring(builtin::a2())),
        "A1xA2" => Ok(SpaceModel::Ring(builtin::a1xa2())),
        "Vcover" => Ok(SpaceModel::Ring(builtin::vcover())),
        "Ytilde" => Ok(SpaceModel::Trilinear(TrilinearSpace::build())),
        "A3_H4" => Ok(SpaceModel::Pairing(PairingSpace::build())),
        "SP_level" => Ok(SpaceModel::LevelParam(LevelParamRing::build())),
        other => Err(ModelError::UnknownSpace(other.to_owned())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_space_builds() {
        for name in space_names() {
            let model = build_space(name).expect("listed space builds");
            assert_eq!(model.name(), *name);
        }
    }

    #[test]
    fn unknown_space_is_an_error() {
        assert_eq!(
            build_space("A4").unwrap_err(),
            ModelError::UnknownSpace("A4".into())
        );
    }
}
