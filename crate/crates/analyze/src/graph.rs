use asp_core::{Atom, Program};
use cnf::UndirectedGraph;

/// Graph vertices are atom ids shifted by one, keeping vertex 0 unused as in
/// the decomposition file format.
pub fn vertex_of_atom(a: Atom) -> u32 {
    u32::try_from(a + 1).expect("atom count fits u32")
}

pub fn atom_of_vertex(v: u32) -> Atom {
    v as usize - 1
}

/// Primal graph of a program: one vertex per atom, a clique per rule.
pub fn program_graph(p: &Program) -> UndirectedGraph {
    let mut g = UndirectedGraph::new();
    for a in 0..p.num_atoms() {
        g.add_vertex(vertex_of_atom(a));
    }
    for r in p.rules() {
        let atoms: Vec<u32> = r.head.iter().chain(&r.pos).chain(&r.neg).map(|&a| vertex_of_atom(a)).collect();
        for (i, &a) in atoms.iter().enumerate() {
            for &b in &atoms[i + 1..] {
                if a != b {
                    g.add_edge(a, b);
                }
            }
        }
    }
    g
}
