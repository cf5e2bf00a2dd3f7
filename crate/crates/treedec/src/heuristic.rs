use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use cnf::UndirectedGraph;

use crate::{NodeId, TreeDecomposition};

/// Greedy elimination strategy. Ties always go to the smallest vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Heuristic {
    #[default]
    MinDegree,
    MinFill,
}

impl FromStr for Heuristic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-degree" => Ok(Self::MinDegree),
            "min-fill" => Ok(Self::MinFill),
            other => Err(format!("unknown heuristic `{other}` (min-degree | min-fill)")),
        }
    }
}

/// Builds a decomposition from a greedy elimination ordering, merges bags
/// contained in a neighbouring bag, and roots the result at the largest bag
/// (ties by node id).
pub fn heuristic_td(g: &UndirectedGraph, heuristic: Heuristic) -> TreeDecomposition {
    if g.num_vertices() == 0 {
        return TreeDecomposition::single(BTreeSet::new());
    }
    let mut adj: BTreeMap<u32, BTreeSet<u32>> =
        g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
    let mut order = Vec::new();
    let mut bags = Vec::new();
    while !adj.is_empty() {
        let v = *adj
            .keys()
            .min_by_key(|&&v| (score(&adj, v, heuristic), v))
            .expect("nonempty");
        let nbrs = adj.remove(&v).expect("present");
        for &a in &nbrs {
            let set = adj.get_mut(&a).expect("symmetric");
            set.remove(&v);
            set.extend(nbrs.iter().filter(|&&b| b != a));
        }
        let mut bag = nbrs.clone();
        bag.insert(v);
        order.push(v);
        bags.push(bag);
    }
    let pos: BTreeMap<u32, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = bags.len();
    let parent: Vec<Option<NodeId>> = (0..n)
        .map(|i| {
            let later = bags[i].iter().filter(|&&u| u != order[i]).map(|u| pos[u]).min();
            later.or(if i + 1 < n { Some(i + 1) } else { None })
        })
        .collect();
    let (bags, parent) = merge_contained(bags, parent);
    let td = TreeDecomposition::from_parents(bags, parent).expect("elimination tree");
    let root = (0..td.len())
        .min_by_key(|&t| (std::cmp::Reverse(td.bag(t).len()), t))
        .expect("nonempty");
    td.reroot(root).expect("same tree")
}

fn score(adj: &BTreeMap<u32, BTreeSet<u32>>, v: u32, h: Heuristic) -> usize {
    let nbrs = &adj[&v];
    match h {
        Heuristic::MinDegree => nbrs.len(),
        Heuristic::MinFill => {
            let list: Vec<u32> = nbrs.iter().copied().collect();
            let mut missing = 0;
            for (i, a) in list.iter().enumerate() {
                for b in &list[i + 1..] {
                    if !adj[a].contains(b) {
                        missing += 1;
                    }
                }
            }
            missing
        }
    }
}

/// Contracts tree edges whose one endpoint's bag contains the other's.
fn merge_contained(
    mut bags: Vec<BTreeSet<u32>>,
    mut parent: Vec<Option<NodeId>>,
) -> (Vec<BTreeSet<u32>>, Vec<Option<NodeId>>) {
    let n = bags.len();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for c in 0..n {
            let Some(p) = parent[c] else { continue };
            if !alive[c] {
                continue;
            }
            if bags[p].is_subset(&bags[c]) {
                bags[p] = std::mem::take(&mut bags[c]);
            } else if !bags[c].is_subset(&bags[p]) {
                continue;
            }
            alive[c] = false;
            for q in parent.iter_mut() {
                if *q == Some(c) {
                    *q = Some(p);
                }
            }
            parent[c] = None;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    for t in 0..n {
        if alive[t] {
            new_id[t] = next;
            next += 1;
        }
    }
    let out_bags = (0..n).filter(|&t| alive[t]).map(|t| std::mem::take(&mut bags[t])).collect();
    let out_parent = (0..n).filter(|&t| alive[t]).map(|t| parent[t].map(|p| new_id[p])).collect();
    (out_bags, out_parent)
}
