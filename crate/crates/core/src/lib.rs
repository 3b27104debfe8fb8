//! Exact-rational toolkit for intersection-number bookkeeping on moduli
//! compactifications: finitely presented graded rings with integration
//! functionals, polyhedral cone computations with certificates, concrete
//! boundary-stratum models, and a small scenario language that turns
//! verification suites into data.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. All public values are immutable
//! after construction and safe to share across threads.

pub mod algebra_core;
pub mod cli_app;
pub mod cone_lab;
pub mod moduli_models;
pub mod scenario_dsl;

pub use algebra_core::rat::Rat;
