//! Exact arithmetic on finitely presented graded commutative algebras over
//! the rationals: normal forms, products, integration functionals, tensor
//! products, homomorphism application, and invariant subspaces under finite
//! group actions.

pub mod expr;
pub mod hom;
pub mod linalg;
pub mod monomial;
pub mod presentation;
pub mod quotient;
pub mod rat;
pub mod tensor;

pub use expr::ClassExpr;
pub use hom::{invariant_subspace, AlgebraHom, GroupAction};
pub use monomial::Monomial;
pub use presentation::{BuildError, GeneratorSpec, Presentation};
pub use quotient::GradedAlgebra;
pub use rat::Rat;
pub use tensor::tensor_product;

/// Errors raised while evaluating expressions against a built algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    /// An expression mentions a generator the algebra does not declare.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    /// A homomorphism was applied to an expression containing a generator
    /// outside its domain.
    #[error("no image defined for generator `{0}`")]
    UnmappedGenerator(String),
    /// A group action map fails to preserve the grading.
    #[error("action map does not preserve degree on generator `{0}`")]
    ActionNotDegreePreserving(String),
}
