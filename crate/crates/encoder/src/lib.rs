//! Encoders from CNF to ground normal programs: the ordering-based
//! reduction over an ordering-augmented tree decomposition, its blocked
//! variant, and the classical guess-and-check baseline.

mod atom;
mod clark;
mod ground;
mod pipeline;
mod reduction;

pub use atom::Atom;
pub use clark::encode_clark;
pub use ground::{emit_text, Formula, GroundProgram, Tag};
pub use pipeline::{augmented_td, solver_graph};
pub use reduction::{encode, encode_node, encode_r, encode_r_prime};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncodeError {
    #[error("decomposition was built for {found}, expected {expected}")]
    ModeMismatch { expected: String, found: String },
    #[error("block size must be at least 2, got {0}")]
    IotaTooSmall(usize),
    #[error(transparent)]
    Ordering(#[from] ordaug::OrdError),
}
