use std::collections::{HashMap, HashSet};

use asp_core::{is_answer_set, stratified_closure, Atom as AtomId, Interpretation, Program, Rule};
use encoder::{Atom, GroundProgram};
use ordaug::{Endpoint, OrderingAugmentedTd};

use crate::OracleError;

fn group_of_atoms(gp: &GroundProgram, atd: &OrderingAugmentedTd) -> Result<Vec<usize>, OracleError> {
    if gp.mode() != atd.mode() {
        return Err(OracleError::Mismatch("encoding mode differs".into()));
    }
    let groups = atd.groups().len();
    gp.atoms()
        .iter()
        .map(|a| {
            let node_ok = match *a {
                Atom::Out(t, _) | Atom::Test(t, _) | Atom::Query(t, _) => t < atd.len(),
                _ => true,
            };
            match a.group(|v| atd.group_of_vertex(v)) {
                Some(g) if g < groups && node_ok => Ok(g),
                _ => Err(OracleError::Mismatch(format!("atom {} has no group", a.render(gp.mode())))),
            }
        })
        .collect()
}

struct Split {
    local: Vec<Program>,
    /// Constraints spanning several groups, keyed by the highest group they touch.
    cross: Vec<Vec<Rule>>,
}

fn split(gp: &GroundProgram, group_of: &[usize], groups: usize) -> Result<Split, OracleError> {
    let blank = {
        let mut p = Program::new();
        for id in 0..gp.atoms().len() {
            p.atom(gp.program().name(id));
        }
        p
    };
    let mut local = vec![blank; groups];
    let mut cross = vec![Vec::new(); groups];
    for r in gp.rules() {
        let touched: HashSet<usize> =
            r.head.iter().chain(&r.pos).chain(&r.neg).map(|&a| group_of[a]).collect();
        if touched.len() == 1 {
            let g = *touched.iter().next().expect("one group");
            local[g].add_rule(r.clone()).expect("same atom table");
        } else if r.head.is_none() {
            cross[*touched.iter().max().expect("non-empty")].push(r.clone());
        } else {
            return Err(OracleError::Mismatch("a rule with a head spans several groups".into()));
        }
    }
    Ok(Split { local, cross })
}

/// For every group, the answer sets of its own sub-program, one per
/// ordering at most. Edge atoms are fixed to the ordering's path and the
/// reachability atoms to true; everything else follows by stratified
/// evaluation and is then checked for stability.
pub fn group_candidates(
    gp: &GroundProgram,
    atd: &OrderingAugmentedTd,
) -> Result<Vec<Vec<Interpretation>>, OracleError> {
    let group_of = group_of_atoms(gp, atd)?;
    let groups = atd.groups().len();
    let Split { local, .. } = split(gp, &group_of, groups)?;
    candidates(gp, atd, &group_of, &local)
}

fn candidates(
    gp: &GroundProgram,
    atd: &OrderingAugmentedTd,
    group_of: &[usize],
    local: &[Program],
) -> Result<Vec<Vec<Interpretation>>, OracleError> {
    let mut out = Vec::with_capacity(local.len());
    for (g, sub) in local.iter().enumerate() {
        let mine: Vec<AtomId> = (0..group_of.len()).filter(|&a| group_of[a] == g).collect();
        let mut found = Vec::new();
        for ordering in atd.group(g).orderings() {
            let path: HashSet<(Endpoint, Endpoint)> = ordering.successor_edges(g).into_iter().collect();
            let fixed: HashMap<AtomId, bool> = mine
                .iter()
                .filter_map(|&a| match gp.atom(a) {
                    Atom::Edge(x, y) => Some((a, path.contains(&(x, y)))),
                    Atom::EdgeHat(x, y) => Some((a, !path.contains(&(x, y)))),
                    Atom::Reach(_) => Some((a, true)),
                    _ => None,
                })
                .collect();
            let cand = stratified_closure(sub, &fixed)
                .ok_or_else(|| OracleError::Mismatch(format!("group {} is not stratified once edges are fixed", g + 1)))?;
            if is_answer_set(sub, &cand) {
                found.push(cand);
            }
        }
        out.push(found);
    }
    Ok(out)
}

fn violated(r: &Rule, m: &Interpretation) -> bool {
    r.pos.iter().all(|&a| m.contains(a)) && !r.neg.iter().any(|&a| m.contains(a))
}

/// All answer sets of a program produced by the ordering reduction for
/// `atd`, combining per-group candidates under the cross-group constraints.
/// Every result is re-checked against the whole program.
pub fn enumerate_structured(
    gp: &GroundProgram,
    atd: &OrderingAugmentedTd,
) -> Result<Vec<Interpretation>, OracleError> {
    let group_of = group_of_atoms(gp, atd)?;
    let groups = atd.groups().len();
    let Split { local, cross } = split(gp, &group_of, groups)?;
    let per_group = candidates(gp, atd, &group_of, &local)?;
    let lists: Vec<Vec<Vec<AtomId>>> =
        per_group.iter().map(|cs| cs.iter().map(|c| c.iter().collect()).collect()).collect();

    let n = gp.atoms().len();
    let mut out = Vec::new();
    let mut current = Interpretation::empty(n);
    let mut choice = vec![0usize; groups];
    let mut depth = 0usize;
    // Iterative depth-first search over one candidate per group.
    loop {
        if depth == groups {
            if is_answer_set(gp.program(), &current) {
                out.push(current.clone());
            }
            if depth == 0 {
                break;
            }
            depth -= 1;
            for &a in &lists[depth][choice[depth]] {
                current.remove(a);
            }
            choice[depth] += 1;
            continue;
        }
        if choice[depth] >= lists[depth].len() {
            choice[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            for &a in &lists[depth][choice[depth]] {
                current.remove(a);
            }
            choice[depth] += 1;
            continue;
        }
        for &a in &lists[depth][choice[depth]] {
            current.insert(a);
        }
        if cross[depth].iter().any(|r| violated(r, &current)) {
            for &a in &lists[depth][choice[depth]] {
                current.remove(a);
            }
            choice[depth] += 1;
        } else {
            depth += 1;
        }
    }
    Ok(out)
}
