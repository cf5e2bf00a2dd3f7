use std::collections::BTreeSet;

use encoder::{Atom, GroundProgram};
use ordaug::{AugNodeId, Endpoint, OrderingAugmentedTd, Pred, VertexId};
use treedec::{validate_td, TreeDecomposition};

use crate::{program_graph, vertex_of_atom, AnalyzeError};

struct Bag<'a> {
    gp: &'a GroundProgram,
    atoms: BTreeSet<u32>,
}

impl Bag<'_> {
    /// Atoms the program never mentions are not graph vertices and are skipped.
    fn add(&mut self, a: Atom) {
        if let Some(id) = self.gp.id(&a) {
            self.atoms.insert(vertex_of_atom(id));
        }
    }

    fn add_group(&mut self, atd: &OrderingAugmentedTd, g: usize) {
        let group = atd.group(g);
        for j in 0..group.blocks().len() {
            self.add(Atom::Reach(group.source(j)));
            self.add(Atom::Reach(group.dest(j)));
        }
        for v in group.vertices() {
            self.add_vertex(v);
        }
    }

    fn add_vertex(&mut self, v: VertexId) {
        self.add(Atom::Reach(Endpoint::Vertex(v)));
        self.add(Atom::TestEps(v));
    }

    fn add_out(&mut self, atd: &OrderingAugmentedTd, t: AugNodeId, g: usize) {
        let group = atd.group(g);
        for v in group.vertices() {
            self.add(Atom::Out(t, Endpoint::Vertex(v)));
        }
        for j in 0..group.blocks().len() {
            self.add(Atom::Out(t, group.source(j)));
        }
    }
}

/// The bag of node `t`: reachability (with `p_eps`), edge, testing and
/// outgoing-mark atoms, as graph vertices.
pub fn constructed_bag(gp: &GroundProgram, atd: &OrderingAugmentedTd, t: AugNodeId) -> BTreeSet<u32> {
    let node = atd.node(t);
    let children = atd.td().children(t);
    let mut bag = Bag { gp, atoms: BTreeSet::new() };

    // Reachability of the node, its children and every child-side ordering.
    if let Some(g) = node.group {
        bag.add_group(atd, g);
    }
    for &c in children {
        let child = atd.node(c);
        if let Some(g) = child.group {
            bag.add_group(atd, g);
        }
        if let Some(psi) = &child.psi {
            psi.ordering.vertices().for_each(|x| bag.add_vertex(x));
        }
    }
    if let Some(psi) = &node.psi {
        psi.ordering.vertices().for_each(|x| bag.add_vertex(x));
    }

    // Both polarities of the claimed edges.
    for &(y, x) in &node.edges {
        bag.add(Atom::Edge(y, x));
        bag.add(Atom::EdgeHat(y, x));
    }

    // Testing points of both orderings, or of the own vertices at nodes
    // without a node-side ordering, with their predecessors.
    let mut tested: BTreeSet<VertexId> = BTreeSet::new();
    tested.extend(node.phi.iter().chain(node.psi.iter()).flat_map(|s| s.ordering.vertices()));
    if node.phi.is_none() {
        tested.extend(atd.own_vertices(t));
    }
    for &x in &tested {
        bag.add(Atom::Test(t, x));
        bag.add(Atom::Query(t, x));
        match atd.pred(x, t) {
            Pred::Eps => bag.add(Atom::TestEps(x)),
            Pred::Nodes(cs) => cs.into_iter().for_each(|c| bag.add(Atom::Test(c, x))),
        }
    }
    // Child-side orderings closed off here.
    if node.phi.is_none() {
        for &c in children {
            if let Some(psi) = &atd.node(c).psi {
                psi.ordering.vertices().for_each(|x| bag.add(Atom::Test(c, x)));
            }
        }
    }

    // Outgoing marks of the node and its children.
    if let Some(g) = node.group {
        bag.add_out(atd, t, g);
        for &c in children {
            bag.add_out(atd, c, g);
        }
    }
    bag.atoms
}

/// The decomposition of the program's primal graph laid over the augmented
/// tree. It is validated before being returned, so an error here means the
/// encoder and the construction disagree.
pub fn constructed_td(gp: &GroundProgram, atd: &OrderingAugmentedTd) -> Result<TreeDecomposition, AnalyzeError> {
    if gp.mode() != atd.mode() {
        return Err(AnalyzeError::Mismatch("encoding mode differs".into()));
    }
    let bags: Vec<BTreeSet<u32>> = (0..atd.len()).map(|t| constructed_bag(gp, atd, t)).collect();
    let parents = (0..atd.len()).map(|t| atd.td().parent(t)).collect();
    let td = TreeDecomposition::from_parents(bags, parents)?;
    validate_td(&program_graph(gp.program()), &td)?;
    Ok(td)
}
