//! Structural certificates for the encodings: the decomposition built in the
//! width proof, strongly connected component accounting, tightness width,
//! and a serializable report tying them together.

pub mod constants;
mod constructed;
mod graph;
mod report;
mod scc;
mod tightness;

pub use constructed::{constructed_bag, constructed_td};
pub use graph::{atom_of_vertex, program_graph, vertex_of_atom};
pub use report::{metrics, AnalysisReport, CsvRow};
pub use scc::{scc_bound, scc_report, SccInfo};
pub use tightness::tightness_width;

use thiserror::Error;
use treedec::{TdError, TdViolation};

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("constructed decomposition is not a tree: {0}")]
    Tree(#[from] TdError),
    #[error("constructed decomposition is invalid: {0}")]
    Invalid(#[from] TdViolation),
    #[error("program and decomposition disagree: {0}")]
    Mismatch(String),
    #[error("strongly connected component of size {size} spans groups {groups:?}")]
    CrossGroupScc { size: usize, groups: Vec<usize> },
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}
