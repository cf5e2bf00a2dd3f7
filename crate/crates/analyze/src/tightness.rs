use asp_core::{dependency_graph, Program};
use treedec::TreeDecomposition;

use crate::atom_of_vertex;

/// Largest number of atoms a bag shares with the component of one of its
/// own atoms. Vertices that are not atoms of `p` are ignored.
pub fn tightness_width(td: &TreeDecomposition, p: &Program) -> usize {
    let mut component = vec![usize::MAX; p.num_atoms()];
    for (i, scc) in dependency_graph(p).sccs().iter().enumerate() {
        for &a in scc {
            component[a] = i;
        }
    }
    let mut best = 0;
    let mut counts: std::collections::HashMap<usize, usize> = Default::default();
    for bag in td.bags() {
        counts.clear();
        for &v in bag {
            if let Some(&c) = component.get(atom_of_vertex(v)) {
                *counts.entry(c).or_default() += 1;
            }
        }
        best = best.max(counts.values().copied().max().unwrap_or(0));
    }
    best
}
