//! Ground truth for the encoders: brute-force and structure-guided
//! answer-set enumeration, the model-to-answer-set witness, decoding back to
//! assignments, runtime lemma checks, and an optional external solver bridge.

mod decode;
mod external;
mod naive;
mod structured;
mod witness;

pub use decode::{check_compatibility, check_decidability, decode, full_query_nodes};
pub use external::{external_count, parse_model_count};
pub use naive::{enumerate_naive, NAIVE_ATOM_LIMIT};
pub use structured::{enumerate_structured, group_candidates};
pub use witness::witness;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{atoms} candidate atoms exceed the brute-force limit of {limit}")]
    TooManyAtoms { atoms: usize, limit: usize },
    #[error("program does not belong to this decomposition: {0}")]
    Mismatch(String),
    #[error("assignment does not satisfy the formula")]
    NotAModel,
    #[error("assignment lacks variable {0}")]
    MissingVariable(u32),
    #[error("no fully queried node decides variable {0}")]
    Undecided(u32),
    #[error("fully queried nodes disagree on variable {0}")]
    Incompatible(u32),
    #[error("group {0} has no fully queried node")]
    NoFullQuery(usize),
    #[error("solver failed: {0}")]
    Solver(String),
}
