use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use asp_core::{Program, Rule};
use ordaug::{AugNodeId, Mode};

use crate::Atom;

/// Which rule schema produced a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Plain(u8),
    /// The blocked replacement of a schema.
    Prime(u8),
    Baseline,
}

impl Formula {
    /// The schema number, ignoring the blocked marker.
    pub fn number(self) -> Option<u8> {
        match self {
            Formula::Plain(n) | Formula::Prime(n) => Some(n),
            Formula::Baseline => None,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Plain(n) => write!(f, "({n})"),
            Formula::Prime(n) => write!(f, "({n}')"),
            Formula::Baseline => write!(f, "(baseline)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tag {
    pub formula: Formula,
    pub node: Option<AugNodeId>,
}

/// A ground program over structured atoms, with a provenance tag per rule.
/// Identical rules are stored once, tagged by their first producer.
#[derive(Debug, Clone)]
pub struct GroundProgram {
    mode: Mode,
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
    program: Program,
    tags: Vec<Tag>,
    seen: HashSet<Rule>,
}

impl GroundProgram {
    pub fn new(mode: Mode) -> Self {
        GroundProgram {
            mode,
            atoms: Vec::new(),
            index: HashMap::new(),
            program: Program::new(),
            tags: Vec::new(),
            seen: HashSet::new(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn intern(&mut self, atom: Atom) -> usize {
        if let Some(&id) = self.index.get(&atom) {
            return id;
        }
        let id = self.program.atom(&atom.render(self.mode));
        debug_assert_eq!(id, self.atoms.len());
        self.atoms.push(atom);
        self.index.insert(atom, id);
        id
    }

    /// Adds a rule unless an identical one exists; returns whether it was new.
    pub fn push(&mut self, head: Option<Atom>, pos: &[Atom], neg: &[Atom], tag: Tag) -> bool {
        let head = head.map(|h| self.intern(h));
        let mut p: Vec<usize> = Vec::with_capacity(pos.len());
        for &a in pos {
            let id = self.intern(a);
            if !p.contains(&id) {
                p.push(id);
            }
        }
        let mut n: Vec<usize> = Vec::with_capacity(neg.len());
        for &a in neg {
            let id = self.intern(a);
            if !n.contains(&id) {
                n.push(id);
            }
        }
        let rule = Rule { head, pos: p, neg: n };
        if !self.seen.insert(rule.clone()) {
            return false;
        }
        self.program.add_rule(rule).expect("atoms interned above");
        self.tags.push(tag);
        true
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, id: usize) -> Atom {
        self.atoms[id]
    }

    pub fn id(&self, atom: &Atom) -> Option<usize> {
        self.index.get(atom).copied()
    }

    pub fn rules(&self) -> &[Rule] {
        self.program.rules()
    }

    pub fn tags(&self) -> &[Tag] {
        &self.tags
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn formula_counts(&self) -> BTreeMap<Formula, usize> {
        let mut out = BTreeMap::new();
        for t in &self.tags {
            *out.entry(t.formula).or_insert(0) += 1;
        }
        out
    }

    pub fn count(&self, formula: Formula) -> usize {
        self.tags.iter().filter(|t| t.formula == formula).count()
    }
}

fn render_rule(p: &Program, r: &Rule) -> String {
    let body: Vec<String> = r
        .pos
        .iter()
        .map(|&a| p.name(a).to_owned())
        .chain(r.neg.iter().map(|&a| format!("not {}", p.name(a))))
        .collect();
    match (r.head, body.is_empty()) {
        (Some(h), true) => format!("{}.", p.name(h)),
        (Some(h), false) => format!("{} :- {}.", p.name(h), body.join(", ")),
        (None, _) => format!(":- {}.", body.join(", ")),
    }
}

/// One rule per line in grounder syntax, optionally followed by the schema
/// that produced it as a `%` comment.
pub fn emit_text(gp: &GroundProgram, provenance: bool) -> String {
    let mut out = String::new();
    for (r, tag) in gp.rules().iter().zip(gp.tags()) {
        out.push_str(&render_rule(gp.program(), r));
        if provenance {
            out.push_str("  % ");
            out.push_str(&tag.formula.to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordaug::Endpoint;

    #[test]
    fn rendering_and_dedup() {
        let mut gp = GroundProgram::new(Mode::R);
        let tag = Tag { formula: Formula::Plain(3), node: None };
        let (y, x) = (Endpoint::Vertex(1), Endpoint::Vertex(2));
        assert!(gp.push(Some(Atom::Edge(y, x)), &[Atom::Reach(y)], &[Atom::EdgeHat(y, x)], tag));
        assert!(!gp.push(Some(Atom::Edge(y, x)), &[Atom::Reach(y)], &[Atom::EdgeHat(y, x)], tag));
        let s = Endpoint::Source { group: 0, block: 0 };
        gp.push(Some(Atom::Reach(s)), &[], &[], Tag { formula: Formula::Plain(1), node: None });
        gp.push(None, &[], &[Atom::Reach(x)], Tag { formula: Formula::Plain(2), node: None });
        assert_eq!(
            emit_text(&gp, false),
            "e(v1,v2) :- r(v1), not ehat(v1,v2).\nr_s(g1).\n:- not r(v2).\n"
        );
        assert!(emit_text(&gp, true).lines().next().unwrap().ends_with("  % (3)"));
        assert_eq!(gp.count(Formula::Plain(3)), 1);
    }
}
