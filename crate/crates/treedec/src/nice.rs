use std::collections::BTreeSet;

use crate::{NodeId, TreeDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Inner,
    Join,
}

/// A decomposition where every node has at most two children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    td: TreeDecomposition,
    kinds: Vec<NodeKind>,
}

impl NiceTreeDecomposition {
    pub fn td(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn kind(&self, t: NodeId) -> NodeKind {
        self.kinds[t]
    }

    pub fn kinds(&self) -> &[NodeKind] {
        &self.kinds
    }
}

/// Collapses parent/child pairs with identical bags, then splits nodes with
/// more than two children into cascades of binary joins over copies of the
/// bag. The root is kept. Surviving nodes keep their relative order; copies
/// are numbered after them.
pub fn make_nice(td: &TreeDecomposition) -> NiceTreeDecomposition {
    let n = td.len();
    let mut bags: Vec<BTreeSet<u32>> = td.bags().to_vec();
    let mut children: Vec<Vec<NodeId>> = (0..n).map(|t| td.children(t).to_vec()).collect();
    let mut alive = vec![true; n];

    for t in td.pre_order() {
        if !alive[t] {
            continue;
        }
        loop {
            let same: Vec<NodeId> =
                children[t].iter().copied().filter(|&c| bags[c] == bags[t]).collect();
            if same.is_empty() {
                break;
            }
            let mut merged = Vec::new();
            for c in children[t].clone() {
                if same.contains(&c) {
                    alive[c] = false;
                    merged.extend(std::mem::take(&mut children[c]));
                } else {
                    merged.push(c);
                }
            }
            children[t] = merged;
        }
    }

    // Binarize: a node keeps its first child and hands the rest to a copy.
    let mut order: Vec<NodeId> = (0..n).filter(|&t| alive[t]).collect();
    let mut stack = vec![td.root()];
    while let Some(t) = stack.pop() {
        if children[t].len() > 2 {
            let rest = children[t].split_off(1);
            let copy = bags.len();
            bags.push(bags[t].clone());
            children.push(rest);
            alive.push(true);
            order.push(copy);
            children[t].push(copy);
        }
        stack.extend(children[t].iter().copied());
    }

    let mut new_id = vec![usize::MAX; bags.len()];
    for (i, &t) in order.iter().enumerate() {
        new_id[t] = i;
    }
    let mut parent = vec![None; order.len()];
    for &t in &order {
        for &c in &children[t] {
            parent[new_id[c]] = Some(new_id[t]);
        }
    }
    let out_bags: Vec<BTreeSet<u32>> = order.iter().map(|&t| bags[t].clone()).collect();
    let td = TreeDecomposition::from_parents(out_bags, parent).expect("restructured tree");
    let kinds = (0..td.len())
        .map(|t| match td.children(t).len() {
            0 => NodeKind::Leaf,
            1 => NodeKind::Inner,
            _ => NodeKind::Join,
        })
        .collect();
    NiceTreeDecomposition { td, kinds }
}
