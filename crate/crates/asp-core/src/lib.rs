//! Ground normal logic programs and their stable-model semantics: models,
//! Gelfond-Lifschitz reducts, least fixpoints, stability checks and the
//! positive dependency graph with its strongly connected components.

mod deps;
mod program;
mod semantics;

pub use deps::{dependency_graph, stratified_closure, DependencyGraph};
pub use program::{Atom, Interpretation, Program, Rule};
pub use semantics::{is_answer_set, is_model, lfp, reduct, supported_by_facts, DefiniteProgram};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AspError {
    #[error("atom {atom} is not in the table of {count} atoms")]
    UnknownAtom { atom: Atom, count: usize },
}
