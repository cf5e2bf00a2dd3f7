use std::collections::HashMap;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::{Atom, Interpretation, Program};

/// Positive dependency graph: an edge from every positive body atom to the
/// head of its rule.
#[derive(Debug, Clone)]
pub struct DependencyGraph {
    graph: DiGraph<Atom, ()>,
    node: HashMap<Atom, NodeIndex>,
}

impl DependencyGraph {
    pub fn num_atoms(&self) -> usize {
        self.graph.node_count()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn has_edge(&self, from: Atom, to: Atom) -> bool {
        match (self.node.get(&from), self.node.get(&to)) {
            (Some(&a), Some(&b)) => self.graph.contains_edge(a, b),
            _ => false,
        }
    }

    /// Components with sorted members, ordered by smallest member.
    pub fn sccs(&self) -> Vec<Vec<Atom>> {
        let mut out: Vec<Vec<Atom>> = tarjan_scc(&self.graph)
            .into_iter()
            .map(|c| {
                let mut atoms: Vec<Atom> = c.into_iter().map(|n| self.graph[n]).collect();
                atoms.sort_unstable();
                atoms
            })
            .collect();
        out.sort_unstable_by_key(|c| c[0]);
        out
    }

    pub fn largest_scc(&self) -> usize {
        self.sccs().iter().map(Vec::len).max().unwrap_or(0)
    }
}

pub fn dependency_graph(p: &Program) -> DependencyGraph {
    let mut graph = DiGraph::new();
    let mut node = HashMap::new();
    let mut idx = |g: &mut DiGraph<Atom, ()>, a: Atom| *node.entry(a).or_insert_with(|| g.add_node(a));
    for r in p.rules() {
        let Some(h) = r.head else { continue };
        let hn = idx(&mut graph, h);
        for &b in &r.pos {
            let bn = idx(&mut graph, b);
            graph.update_edge(bn, hn, ());
        }
    }
    DependencyGraph { graph, node }
}

/// Evaluates `p` bottom-up with the atoms in `fixed` taken as given: atoms
/// listed there keep their value and their defining rules are ignored.
/// Every other atom is computed stratum by stratum over the components of
/// the full (positive and negative) dependency graph. Returns `None` when a
/// component depends negatively on itself. Constraints are not checked.
pub fn stratified_closure(p: &Program, fixed: &HashMap<Atom, bool>) -> Option<Interpretation> {
    let n = p.num_atoms();
    let mut graph: DiGraph<Atom, bool> = DiGraph::with_capacity(n, p.len());
    let nodes: Vec<NodeIndex> = (0..n).map(|a| graph.add_node(a)).collect();
    let mut defs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, r) in p.rules().iter().enumerate() {
        let Some(h) = r.head else { continue };
        if fixed.contains_key(&h) {
            continue;
        }
        defs[h].push(i);
        for &b in r.pos.iter().filter(|b| !fixed.contains_key(b)) {
            graph.add_edge(nodes[b], nodes[h], false);
        }
        for &b in r.neg.iter().filter(|b| !fixed.contains_key(b)) {
            graph.add_edge(nodes[b], nodes[h], true);
        }
    }

    let mut value = Interpretation::empty(n);
    for (&a, &v) in fixed {
        if v {
            value.insert(a);
        }
    }
    let comps = tarjan_scc(&graph);
    let mut comp_of = vec![usize::MAX; n];
    for (ci, c) in comps.iter().enumerate() {
        for &x in c {
            comp_of[graph[x]] = ci;
        }
    }
    for e in graph.edge_indices() {
        let (a, b) = graph.edge_endpoints(e).expect("edge exists");
        if graph[e] && comp_of[graph[a]] == comp_of[graph[b]] {
            return None;
        }
    }
    // Tarjan yields components sinks-first; evaluate sources first.
    for comp in comps.iter().rev() {
        let atoms: Vec<Atom> = comp.iter().map(|&x| graph[x]).filter(|a| !fixed.contains_key(a)).collect();
        loop {
            let mut changed = false;
            for &a in &atoms {
                if value.contains(a) {
                    continue;
                }
                let fires = defs[a].iter().any(|&i| {
                    let r = &p.rules()[i];
                    r.pos.iter().all(|&b| value.contains(b)) && !r.neg.iter().any(|&b| value.contains(b))
                });
                if fires {
                    value.insert(a);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    Some(value)
}
