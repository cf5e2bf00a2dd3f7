use cnf::UndirectedGraph;
use thiserror::Error;

use crate::{NodeId, TreeDecomposition};

/// The first violated decomposition condition, with a witness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdViolation {
    #[error("condition (i): vertex {0} is in no bag")]
    VertexNotCovered(u32),
    #[error("condition (ii): edge {{{0},{1}}} is in no bag")]
    EdgeNotCovered(u32, u32),
    #[error("condition (iii): nodes holding vertex {vertex} are split (e.g. {first} and {second})")]
    Disconnected { vertex: u32, first: NodeId, second: NodeId },
}

/// Checks conditions (i) to (iii) in that order.
pub fn validate_td(g: &UndirectedGraph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let mut holders: std::collections::HashMap<u32, Vec<NodeId>> = Default::default();
    for (t, bag) in td.bags().iter().enumerate() {
        for &v in bag {
            holders.entry(v).or_default().push(t);
        }
    }
    for v in g.vertices() {
        if !holders.contains_key(&v) {
            return Err(TdViolation::VertexNotCovered(v));
        }
    }
    for (a, b) in g.edges() {
        let (short, other) =
            if holders[&a].len() <= holders[&b].len() { (a, b) } else { (b, a) };
        if !holders[&short].iter().any(|&t| td.bag(t).contains(&other)) {
            return Err(TdViolation::EdgeNotCovered(a, b));
        }
    }
    let mut vertices: Vec<u32> = holders.keys().copied().collect();
    vertices.sort_unstable();
    for v in vertices {
        // Connected iff exactly one holder has no parent holding v.
        let tops: Vec<NodeId> = holders[&v]
            .iter()
            .copied()
            .filter(|&t| td.parent(t).is_none_or(|p| !td.bag(p).contains(&v)))
            .collect();
        if tops.len() > 1 {
            return Err(TdViolation::Disconnected { vertex: v, first: tops[0], second: tops[1] });
        }
    }
    Ok(())
}
