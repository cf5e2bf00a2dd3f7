//! Rooted tree decompositions: PACE `.td` I/O, elimination-ordering
//! heuristics, validation of the three TD conditions, and a nice normal form.

mod heuristic;
mod nice;
mod pace;
mod td;
mod validate;

pub use heuristic::{heuristic_td, Heuristic};
pub use nice::{make_nice, NiceTreeDecomposition, NodeKind};
pub use pace::{emit_td, parse_td};
pub use td::{bag_clauses, NodeId, TreeDecomposition};
pub use validate::{validate_td, TdViolation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("header mismatch: {0}")]
    Header(String),
    #[error("bag id {id} out of range 1..={count}")]
    BagOutOfRange { id: usize, count: usize },
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: u32, count: u32 },
    #[error("tree structure invalid: {0}")]
    NotATree(String),
}
