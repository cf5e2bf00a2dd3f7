use std::collections::{BTreeSet, VecDeque};

use cnf::CnfFormula;

use crate::TdError;

pub type NodeId = usize;

/// A rooted tree decomposition. Nodes are `0..len()`; children are kept in
/// ascending id order unless a construction step says otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<BTreeSet<u32>>,
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    root: NodeId,
}

impl TreeDecomposition {
    /// Builds a decomposition from a parent array; exactly one node must lack a
    /// parent and every node must reach it.
    pub fn from_parents(
        bags: Vec<BTreeSet<u32>>,
        parent: Vec<Option<NodeId>>,
    ) -> Result<Self, TdError> {
        let n = bags.len();
        if n == 0 || parent.len() != n {
            return Err(TdError::NotATree("need one parent entry per bag, at least one bag".into()));
        }
        let roots: Vec<_> = (0..n).filter(|&t| parent[t].is_none()).collect();
        if roots.len() != 1 {
            return Err(TdError::NotATree(format!("{} roots", roots.len())));
        }
        let mut children = vec![Vec::new(); n];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n || p == t {
                    return Err(TdError::NotATree(format!("bad parent {p} for node {t}")));
                }
                children[p].push(t);
            }
        }
        let td = Self { bags, parent, children, root: roots[0] };
        if td.pre_order().len() != n {
            return Err(TdError::NotATree("not connected (cycle in parent links)".into()));
        }
        Ok(td)
    }

    /// Orients an undirected tree given as an edge list away from `root`.
    pub fn from_edges(
        bags: Vec<BTreeSet<u32>>,
        edges: &[(NodeId, NodeId)],
        root: NodeId,
    ) -> Result<Self, TdError> {
        let n = bags.len();
        if n == 0 || root >= n {
            return Err(TdError::NotATree("root out of range".into()));
        }
        if edges.len() + 1 != n {
            return Err(TdError::NotATree(format!("{} edges for {} nodes", edges.len(), n)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(TdError::NotATree(format!("bad edge ({a},{b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(t);
                    queue.push_back(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(TdError::NotATree("tree is disconnected".into()));
        }
        Self::from_parents(bags, parent)
    }

    pub fn single(bag: BTreeSet<u32>) -> Self {
        Self { bags: vec![bag], parent: vec![None], children: vec![Vec::new()], root: 0 }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn bag(&self, t: NodeId) -> &BTreeSet<u32> {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[BTreeSet<u32>] {
        &self.bags
    }

    pub fn parent(&self, t: NodeId) -> Option<NodeId> {
        self.parent[t]
    }

    pub fn children(&self, t: NodeId) -> &[NodeId] {
        &self.children[t]
    }

    /// Undirected tree edges `(parent, child)`.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        (0..self.len()).filter_map(|t| self.parent[t].map(|p| (p, t))).collect()
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one (0 for decompositions of edgeless graphs).
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// Root first; children in stored order.
    pub fn pre_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(t) = stack.pop() {
            out.push(t);
            stack.extend(self.children[t].iter().rev());
        }
        out
    }

    /// Children before parents.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                out.push(t);
            } else {
                stack.push((t, true));
                stack.extend(self.children[t].iter().rev().map(|&c| (c, false)));
            }
        }
        out
    }

    /// Same bags and tree, different root.
    pub fn reroot(&self, root: NodeId) -> Result<Self, TdError> {
        Self::from_edges(self.bags.clone(), &self.edges(), root)
    }
}

/// Indices of the clauses whose variables all lie in the bag of `node`.
pub fn bag_clauses(f: &CnfFormula, td: &TreeDecomposition, node: NodeId) -> Vec<usize> {
    let bag = td.bag(node);
    (0..f.clauses().len()).filter(|&i| f.clause_vars(i).is_subset(bag)).collect()
}
