use cnf::{primal_graph, CnfFormula, UndirectedGraph};
use ordaug::{assign_edges, augment, Mode, OrderingAugmentedTd};
use treedec::{heuristic_td, make_nice, Heuristic};

use crate::EncodeError;

/// Primal graph plus isolated vertices for declared but unused variables,
/// so every variable lands in some bag.
pub fn solver_graph(f: &CnfFormula) -> UndirectedGraph {
    let mut g = primal_graph(f);
    for v in f.declared_vars() {
        g.add_vertex(v);
    }
    g
}

/// Heuristic decomposition, nice form, augmentation and edge distribution.
pub fn augmented_td(
    f: &CnfFormula,
    heuristic: Heuristic,
    mode: Mode,
    cap: u128,
) -> Result<OrderingAugmentedTd, EncodeError> {
    let ntd = make_nice(&heuristic_td(&solver_graph(f), heuristic));
    Ok(assign_edges(augment(&ntd, mode, cap)?))
}
