use std::collections::BTreeMap;

use asp_core::Interpretation;
use cnf::Assignment;
use encoder::{Atom, GroundProgram};
use ordaug::{AugNodeId, OrderingAugmentedTd};

use crate::OracleError;

fn holds(m: &Interpretation, gp: &GroundProgram, a: Atom) -> bool {
    gp.id(&a).is_some_and(|id| m.contains(id))
}

/// Nodes whose own ordering is queried in full by `m`.
pub fn full_query_nodes(m: &Interpretation, gp: &GroundProgram, atd: &OrderingAugmentedTd) -> Vec<AugNodeId> {
    atd.nodes()
        .iter()
        .enumerate()
        .filter(|(t, node)| {
            node.phi
                .as_ref()
                .is_some_and(|phi| phi.ordering.vertices().all(|x| holds(m, gp, Atom::Query(*t, x))))
        })
        .map(|(t, _)| t)
        .collect()
}

/// Assignments selected by the fully queried nodes; undefined ranks select nothing.
fn selections(m: &Interpretation, gp: &GroundProgram, atd: &OrderingAugmentedTd) -> Vec<(AugNodeId, Assignment)> {
    full_query_nodes(m, gp, atd)
        .into_iter()
        .filter_map(|t| {
            let phi = atd.node(t).phi.as_ref()?;
            Some((t, atd.group(phi.group).assignment_of_rank(phi.rank)?))
        })
        .collect()
}

/// Every non-empty group needs at least one fully queried node.
pub fn check_decidability(
    m: &Interpretation,
    gp: &GroundProgram,
    atd: &OrderingAugmentedTd,
) -> Result<(), OracleError> {
    let mut seen = vec![false; atd.groups().len()];
    for t in full_query_nodes(m, gp, atd) {
        if let Some(phi) = &atd.node(t).phi {
            seen[phi.group] = true;
        }
    }
    match atd.groups().iter().position(|g| !g.is_empty() && !seen[g.id()]) {
        Some(g) => Err(OracleError::NoFullQuery(g + 1)),
        None => Ok(()),
    }
}

/// All fully queried nodes must agree wherever their assignments overlap.
pub fn check_compatibility(
    m: &Interpretation,
    gp: &GroundProgram,
    atd: &OrderingAugmentedTd,
) -> Result<(), OracleError> {
    merge(&selections(m, gp, atd)).map(|_| ())
}

fn merge(sel: &[(AugNodeId, Assignment)]) -> Result<BTreeMap<u32, bool>, OracleError> {
    let mut values = BTreeMap::new();
    for (_, a) in sel {
        for (v, b) in a.iter() {
            if *values.entry(v).or_insert(b) != b {
                return Err(OracleError::Incompatible(v));
            }
        }
    }
    Ok(values)
}

/// Reads the satisfying assignment off an answer set of the reduction.
pub fn decode(m: &Interpretation, gp: &GroundProgram, atd: &OrderingAugmentedTd) -> Result<Assignment, OracleError> {
    let values = merge(&selections(m, gp, atd))?;
    for g in atd.groups() {
        if let Some(&v) = g.bag().iter().find(|v| !values.contains_key(v)) {
            return Err(OracleError::Undecided(v));
        }
    }
    Ok(Assignment::from_map(values))
}
