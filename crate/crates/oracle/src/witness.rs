use std::collections::HashSet;

use asp_core::Interpretation;
use cnf::{eval, Assignment, CnfFormula};
use encoder::{Atom, GroundProgram};
use ordaug::{Endpoint, Ordering, OrderingAugmentedTd};

use crate::OracleError;

/// Length of the common prefix of two vertex sequences.
fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The interpretation a satisfying assignment is meant to induce: every
/// group follows the ordering of its restricted assignment, edges trace that
/// ordering, and each node queries the prefix its orderings share with it.
/// Atoms the program never mentions are left out.
pub fn witness(
    model: &Assignment,
    f: &CnfFormula,
    atd: &OrderingAugmentedTd,
    gp: &GroundProgram,
) -> Result<Interpretation, OracleError> {
    if let Some(v) = f.declared_vars().find(|&v| model.get(v).is_err()) {
        return Err(OracleError::MissingVariable(v));
    }
    if !eval(f, model).map_err(|_| OracleError::NotAModel)? {
        return Err(OracleError::NotAModel);
    }

    let chosen: Vec<Ordering> = atd
        .groups()
        .iter()
        .map(|g| {
            let alpha = model.restrict(g.bag());
            g.ordering_of(&alpha).map_err(|_| OracleError::MissingVariable(g.bag()[0]))
        })
        .collect::<Result<_, _>>()?;
    let paths: Vec<HashSet<(Endpoint, Endpoint)>> =
        chosen.iter().enumerate().map(|(g, o)| o.successor_edges(g).into_iter().collect()).collect();

    let mut atoms: Vec<Atom> = Vec::new();
    for (v, value) in model.iter() {
        atoms.push(if value { Atom::Var(v) } else { Atom::VarHat(v) });
    }
    for g in atd.groups() {
        for j in 0..g.blocks().len() {
            atoms.push(Atom::Reach(g.source(j)));
            atoms.push(Atom::Reach(g.dest(j)));
        }
        for v in g.vertices() {
            atoms.push(Atom::Reach(Endpoint::Vertex(v)));
            atoms.push(Atom::TestEps(v));
        }
    }

    let td = atd.td();
    for (t, node) in atd.nodes().iter().enumerate() {
        for &(y, x) in &node.edges {
            let Some(g) = node.group else { continue };
            if !paths[g].contains(&(y, x)) {
                atoms.push(Atom::EdgeHat(y, x));
                continue;
            }
            atoms.push(Atom::Edge(y, x));
            // The outgoing mark climbs as long as the parent shares the group.
            let mut at = t;
            atoms.push(Atom::Out(at, y));
            while let Some(p) = td.parent(at).filter(|&p| atd.node(p).group == Some(g)) {
                atoms.push(Atom::Out(p, y));
                at = p;
            }
        }

        if node.phi.is_none() {
            atoms.extend(atd.own_vertices(t).into_iter().map(|x| Atom::Test(t, x)));
        }
        for side in node.phi.iter().chain(node.psi.iter()) {
            let mine = &chosen[side.group];
            for (block, target) in side.ordering.blocks().iter().zip(mine.blocks()) {
                atoms.extend(block.iter().map(|&x| Atom::Test(t, x)));
                let k = common_prefix(block, target);
                atoms.extend(block[..k].iter().map(|&x| Atom::Query(t, x)));
            }
        }
    }

    let ids: Vec<usize> = atoms.iter().filter_map(|a| gp.id(a)).collect();
    Ok(Interpretation::from_atoms(gp.atoms().len(), ids))
}
