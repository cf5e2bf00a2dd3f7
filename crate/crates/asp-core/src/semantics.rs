use std::collections::VecDeque;

use crate::{Atom, Interpretation, Program, Rule};

/// A program without negation; constraints keep a `None` head.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DefiniteProgram {
    pub num_atoms: usize,
    pub rules: Vec<(Option<Atom>, Vec<Atom>)>,
}

fn satisfied(rule: &Rule, m: &Interpretation) -> bool {
    rule.head.is_some_and(|h| m.contains(h))
        || rule.neg.iter().any(|&a| m.contains(a))
        || rule.pos.iter().any(|&a| !m.contains(a))
}

pub fn is_model(p: &Program, m: &Interpretation) -> bool {
    p.rules().iter().all(|r| satisfied(r, m))
}

pub fn reduct(p: &Program, m: &Interpretation) -> DefiniteProgram {
    let rules = p
        .rules()
        .iter()
        .filter(|r| !r.neg.iter().any(|&a| m.contains(a)))
        .map(|r| (r.head, r.pos.clone()))
        .collect();
    DefiniteProgram { num_atoms: p.num_atoms(), rules }
}

/// Least model by counting propagation: each rule waits for its missing
/// body atoms and fires when the count reaches zero.
pub fn lfp(p: &DefiniteProgram) -> Interpretation {
    let mut watch: Vec<Vec<usize>> = vec![Vec::new(); p.num_atoms];
    let mut missing: Vec<usize> = Vec::with_capacity(p.rules.len());
    let mut out = Interpretation::empty(p.num_atoms);
    let mut queue = VecDeque::new();
    for (i, (head, body)) in p.rules.iter().enumerate() {
        let mut body = body.clone();
        body.sort_unstable();
        body.dedup();
        for &a in &body {
            watch[a].push(i);
        }
        missing.push(body.len());
        if let (Some(h), true) = (head, body.is_empty()) {
            if out.insert(*h) {
                queue.push_back(*h);
            }
        }
    }
    while let Some(a) = queue.pop_front() {
        for &i in &watch[a] {
            missing[i] -= 1;
            if missing[i] == 0 {
                if let Some(h) = p.rules[i].0 {
                    if out.insert(h) {
                        queue.push_back(h);
                    }
                }
            }
        }
    }
    out
}

pub fn is_answer_set(p: &Program, m: &Interpretation) -> bool {
    is_model(p, m) && lfp(&reduct(p, m)).same_atoms(m)
}

/// Every atom of `m` is derivable from rules with empty positive bodies
/// whose negative bodies avoid `m`, using only atoms of `m`.
pub fn supported_by_facts(p: &Program, m: &Interpretation) -> bool {
    let mut restricted = reduct(p, m);
    restricted.rules.retain(|(h, body)| {
        h.is_some_and(|h| m.contains(h)) && body.iter().all(|&a| m.contains(a))
    });
    lfp(&restricted).same_atoms(m)
}
