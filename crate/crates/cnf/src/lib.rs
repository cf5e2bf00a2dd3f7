//! CNF formulas over 1-based integer variables, partial assignments and the
//! primal graph used to compute tree decompositions.

mod assignment;
mod dimacs;
mod formula;
mod graph;

pub use assignment::Assignment;
pub use dimacs::parse_dimacs;
pub use formula::{enumerate_models, eval, primal_graph, CnfFormula, MAX_ENUM_VARS};
pub use graph::UndirectedGraph;

use thiserror::Error;

/// A variable index, always at least 1.
pub type Var = u32;

/// A literal in DIMACS convention: `v` is positive, `-v` negative.
pub type Lit = i32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: clause data before the `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: invalid literal `{token}`")]
    BadLiteral { line: usize, token: String },
    #[error("literal {lit} out of range 1..={num_vars}")]
    LiteralOutOfRange { lit: Lit, num_vars: u32 },
    #[error("clause {index} is not terminated by 0")]
    MissingTerminator { index: usize },
    #[error("clause {index} is tautological (contains {var} and -{var})")]
    Tautology { index: usize, var: Var },
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCount { declared: usize, found: usize },
    #[error("variable {0} is not in the assignment's domain")]
    Unassigned(Var),
    #[error("{num_vars} variables exceed the brute-force limit of {limit}")]
    TooLarge { num_vars: u32, limit: u32 },
}
