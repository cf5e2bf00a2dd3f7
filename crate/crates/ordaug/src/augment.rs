use std::collections::{BTreeSet, HashSet};

use serde::Serialize;
use treedec::{NiceTreeDecomposition, NodeId, TreeDecomposition};

use crate::{Endpoint, GroupId, Mode, OrdError, Ordering, OrderingGroup, VertexId};

pub type AugNodeId = usize;

/// Refuse to build more augmented nodes than this unless told otherwise.
pub const DEFAULT_NODE_CAP: u128 = 1_000_000;

/// Where an augmented node came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    Original { node: NodeId },
    /// Between `parent` and `child`; index 0 sits right above the child.
    Pair { parent: NodeId, child: NodeId, index: usize },
    /// Below a leaf; index 0 sits right below the leaf.
    LeafChain { leaf: NodeId, index: usize },
}

/// An ordering together with its group and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdRef {
    pub group: GroupId,
    pub rank: u64,
    pub ordering: Ordering,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugNode {
    pub origin: Origin,
    /// The group of the node's own bag, absent for empty bags.
    pub group: Option<GroupId>,
    pub phi: Option<OrdRef>,
    pub psi: Option<OrdRef>,
    /// Ordering edges this node is responsible for guessing.
    pub edges: Vec<(Endpoint, Endpoint)>,
}

/// Predecessor testing points of a vertex at a node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pred {
    Eps,
    Nodes(Vec<AugNodeId>),
}

#[derive(Debug, Clone)]
pub struct OrderingAugmentedTd {
    mode: Mode,
    td: TreeDecomposition,
    nodes: Vec<AugNode>,
    groups: Vec<OrderingGroup>,
    vertex_group: Vec<GroupId>,
}

impl OrderingAugmentedTd {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn td(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> AugNodeId {
        self.td.root()
    }

    pub fn node(&self, t: AugNodeId) -> &AugNode {
        &self.nodes[t]
    }

    pub fn nodes(&self) -> &[AugNode] {
        &self.nodes
    }

    pub fn groups(&self) -> &[OrderingGroup] {
        &self.groups
    }

    pub fn group(&self, g: GroupId) -> &OrderingGroup {
        &self.groups[g]
    }

    pub fn group_of_vertex(&self, v: VertexId) -> Option<GroupId> {
        self.vertex_group.get((v as usize).checked_sub(1)?).copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_group.len()
    }

    /// The ordering vertices of the node's own group.
    pub fn own_vertices(&self, t: AugNodeId) -> Vec<VertexId> {
        self.nodes[t].group.map(|g| self.groups[g].vertices().collect()).unwrap_or_default()
    }

    /// Vertices mentioned by the node's own group or by its child-side ordering.
    fn carries(&self, t: AugNodeId, x: VertexId) -> bool {
        let node = &self.nodes[t];
        node.group.is_some_and(|g| self.groups[g].contains(x))
            || node.psi.as_ref().is_some_and(|p| p.ordering.contains(x))
    }

    /// Children that carry `x`, or the ε marker when none do.
    pub fn pred(&self, x: VertexId, t: AugNodeId) -> Pred {
        let carriers: Vec<AugNodeId> =
            self.td.children(t).iter().copied().filter(|&c| self.carries(c, x)).collect();
        if carriers.is_empty() {
            Pred::Eps
        } else {
            Pred::Nodes(carriers)
        }
    }

    /// Plain-data dump for inspection and golden tests.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Side {
            group: usize,
            rank: u64,
            ordering: String,
        }
        #[derive(Serialize)]
        struct NodeDump {
            id: usize,
            parent: Option<usize>,
            origin: Origin,
            group: Option<usize>,
            phi: Option<Side>,
            psi: Option<Side>,
            edges: Vec<String>,
        }
        #[derive(Serialize)]
        struct GroupDump {
            id: usize,
            bag: Vec<u32>,
            blocks: Vec<Vec<u32>>,
        }
        let side = |r: &Option<OrdRef>| {
            r.as_ref().map(|r| Side { group: r.group + 1, rank: r.rank, ordering: r.ordering.to_string() })
        };
        let nodes: Vec<NodeDump> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| NodeDump {
                id: i + 1,
                parent: self.td.parent(i).map(|p| p + 1),
                origin: n.origin,
                group: n.group.map(|g| g + 1),
                phi: side(&n.phi),
                psi: side(&n.psi),
                edges: n
                    .edges
                    .iter()
                    .map(|(a, b)| format!("{}->{}", a.label(self.mode), b.label(self.mode)))
                    .collect(),
            })
            .collect();
        let groups: Vec<GroupDump> = self
            .groups
            .iter()
            .map(|g| GroupDump { id: g.id() + 1, bag: g.bag().to_vec(), blocks: g.blocks().to_vec() })
            .collect();
        let iota = match self.mode {
            Mode::R => None,
            Mode::RPrime { iota } => Some(iota),
        };
        serde_json::json!({ "iota": iota, "groups": groups, "nodes": nodes })
    }
}

/// Assigns one group to every maximal connected region of equal non-empty
/// bags. Groups are numbered by the smallest node id in their region.
fn region_groups(ntd: &NiceTreeDecomposition) -> Vec<Option<GroupId>> {
    let td = ntd.td();
    let mut group = vec![None; td.len()];
    let mut next = 0;
    for t in 0..td.len() {
        if td.bag(t).is_empty() || group[t].is_some() {
            continue;
        }
        let mut stack = vec![t];
        group[t] = Some(next);
        while let Some(u) = stack.pop() {
            let around = td.children(u).iter().copied().chain(td.parent(u));
            for w in around {
                if group[w].is_none() && td.bag(w) == td.bag(u) {
                    group[w] = Some(next);
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    group
}

/// Builds the augmented decomposition without distributing edges.
pub fn augment(
    ntd: &NiceTreeDecomposition,
    mode: Mode,
    cap: u128,
) -> Result<OrderingAugmentedTd, OrdError> {
    let td = ntd.td();
    let node_group = region_groups(ntd);
    let group_count = node_group.iter().flatten().max().map_or(0, |g| g + 1);

    let mut groups = Vec::with_capacity(group_count);
    let mut vertex_group = Vec::new();
    for g in 0..group_count {
        let t = node_group.iter().position(|&x| x == Some(g)).expect("group has a node");
        let bag: Vec<u32> = td.bag(t).iter().copied().collect();
        let group = OrderingGroup::new(g, bag, vertex_group.len() as VertexId + 1, mode)?;
        vertex_group.extend(std::iter::repeat_n(g, group.len()));
        groups.push(group);
    }

    let count = |t: NodeId| -> u128 { node_group[t].map_or(1, |g| groups[g].num_orderings() as u128) };
    let mut estimated: u128 = 0;
    for (t, group) in node_group.iter().enumerate() {
        estimated = estimated.saturating_add(1);
        for &c in td.children(t) {
            estimated = estimated.saturating_add(count(t).saturating_mul(count(c)));
        }
        if td.children(t).is_empty() && group.is_some() {
            estimated = estimated.saturating_add(count(t));
        }
    }
    if estimated > cap {
        return Err(OrdError::TooLarge { estimated, cap });
    }

    let ord_list = |t: NodeId| -> Vec<Option<OrdRef>> {
        match node_group[t] {
            None => vec![None],
            Some(g) => (0..groups[g].num_orderings())
                .map(|rank| {
                    Some(OrdRef { group: g, rank, ordering: groups[g].ordering(rank).expect("in range") })
                })
                .collect(),
        }
    };

    let mut nodes: Vec<AugNode> = (0..td.len())
        .map(|t| AugNode {
            origin: Origin::Original { node: t },
            group: node_group[t],
            phi: None,
            psi: None,
            edges: Vec::new(),
        })
        .collect();
    let mut bags: Vec<BTreeSet<u32>> = td.bags().to_vec();
    let mut parent: Vec<Option<usize>> = (0..td.len()).map(|t| td.parent(t)).collect();

    for t in td.pre_order() {
        for &c in td.children(t) {
            let pairs: Vec<(Option<OrdRef>, Option<OrdRef>)> = ord_list(t)
                .into_iter()
                .flat_map(|a| ord_list(c).into_iter().map(move |b| (a.clone(), b)))
                .collect();
            let mut below = c;
            for (index, (phi, psi)) in pairs.into_iter().enumerate() {
                let id = nodes.len();
                nodes.push(AugNode {
                    origin: Origin::Pair { parent: t, child: c, index },
                    group: node_group[t],
                    phi,
                    psi,
                    edges: Vec::new(),
                });
                bags.push(td.bag(t).clone());
                parent.push(None);
                parent[below] = Some(id);
                below = id;
            }
            parent[below] = Some(t);
        }
        if td.children(t).is_empty() && node_group[t].is_some() {
            let mut above = t;
            for (index, phi) in ord_list(t).into_iter().enumerate() {
                let id = nodes.len();
                nodes.push(AugNode {
                    origin: Origin::LeafChain { leaf: t, index },
                    group: node_group[t],
                    phi,
                    psi: None,
                    edges: Vec::new(),
                });
                bags.push(td.bag(t).clone());
                parent.push(Some(above));
                above = id;
            }
        }
    }

    let td = TreeDecomposition::from_parents(bags, parent).expect("chains keep a tree");
    Ok(OrderingAugmentedTd { mode, td, nodes, groups, vertex_group })
}

/// Hands every node the edges of its own ordering not yet claimed by a node
/// visited earlier in pre-order.
pub fn assign_edges(mut atd: OrderingAugmentedTd) -> OrderingAugmentedTd {
    let mut claimed: HashSet<(Endpoint, Endpoint)> = HashSet::new();
    for t in atd.td.pre_order() {
        let node = &mut atd.nodes[t];
        node.edges.clear();
        if let Some(phi) = &node.phi {
            for e in phi.ordering.successor_edges(phi.group) {
                if claimed.insert(e) {
                    node.edges.push(e);
                }
            }
        }
    }
    atd
}

/// Augments with the default cap and distributes edges.
pub fn build(ntd: &NiceTreeDecomposition, mode: Mode) -> Result<OrderingAugmentedTd, OrdError> {
    Ok(assign_edges(augment(ntd, mode, DEFAULT_NODE_CAP)?))
}
