//! A small declarative language for intersection-theory checks.
//!
//! A scenario is a sequence of statements: ring definitions (presented
//! graded rings with an integration rule), named class definitions inside a
//! space, cone definitions over a pairing space, and assertions. Evaluating
//! a scenario produces a deterministic report with one record per
//! assertion; failed assertions never stop evaluation, while genuine errors
//! (unknown names, type mismatches) abort with a line/column diagnostic.

pub mod ast;
pub mod eval;
pub mod lex;
pub mod parse;
pub mod print;
pub mod report;

pub use ast::ScenarioAst;
pub use eval::{evaluate, Evaluator, TaggedCone};
pub use parse::{parse, parse_cone_text, parse_expr_text};
pub use print::print_scenario;
pub use report::{AssertionRecord, ScenarioReport, Summary};

/// A syntax error with its exact source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line} column {col}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub expected: String,
    pub found: String,
}

/// An evaluation error (unknown name, type mismatch, unbuildable ring) with
/// the source position it was triggered from.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line} column {col}: {message}")]
pub struct EvalError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}
