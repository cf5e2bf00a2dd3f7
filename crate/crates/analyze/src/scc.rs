use std::collections::BTreeSet;

use asp_core::dependency_graph;
use encoder::GroundProgram;
use ordaug::OrderingAugmentedTd;
use serde::Serialize;

use crate::AnalyzeError;

/// One non-singleton component of the positive dependency graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SccInfo {
    pub size: usize,
    /// 0-based group holding every atom of the component.
    pub group: usize,
    pub bound: usize,
}

/// Nodes testing vertices of group `g`: those in the group itself and those
/// whose child-side ordering ranges over it.
fn chain_nodes(atd: &OrderingAugmentedTd, g: usize) -> usize {
    atd.nodes()
        .iter()
        .filter(|n| n.group == Some(g) || n.psi.as_ref().is_some_and(|s| s.group == g))
        .count()
}

/// `3k' + (k' + 1) + 2Ck'` for group `g`, with `C` its chain nodes.
pub fn scc_bound(atd: &OrderingAugmentedTd, g: usize) -> usize {
    let k = atd.group(g).len();
    3 * k + (k + 1) + 2 * chain_nodes(atd, g) * k
}

/// Non-singleton components with the group each lies in. A component whose
/// atoms span several groups, or include atoms outside every group, is an
/// error.
pub fn scc_report(gp: &GroundProgram, atd: &OrderingAugmentedTd) -> Result<Vec<SccInfo>, AnalyzeError> {
    let mut out = Vec::new();
    for scc in dependency_graph(gp.program()).sccs() {
        if scc.len() < 2 {
            continue;
        }
        let groups: BTreeSet<Option<usize>> =
            scc.iter().map(|&a| gp.atom(a).group(|v| atd.group_of_vertex(v))).collect();
        match groups.iter().collect::<Vec<_>>()[..] {
            [Some(g)] => out.push(SccInfo { size: scc.len(), group: *g, bound: scc_bound(atd, *g) }),
            _ => {
                return Err(AnalyzeError::CrossGroupScc {
                    size: scc.len(),
                    groups: groups.into_iter().map(|g| g.map_or(0, |g| g + 1)).collect(),
                })
            }
        }
    }
    Ok(out)
}
