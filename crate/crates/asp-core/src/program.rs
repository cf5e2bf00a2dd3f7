use std::collections::HashMap;

use crate::AspError;

pub type Atom = usize;

/// `head :- pos, not neg.`; a missing head makes it a constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: Option<Atom>,
    pub pos: Vec<Atom>,
    pub neg: Vec<Atom>,
}

impl Rule {
    pub fn new(head: Atom, pos: Vec<Atom>, neg: Vec<Atom>) -> Self {
        Rule { head: Some(head), pos, neg }
    }

    pub fn fact(head: Atom) -> Self {
        Rule { head: Some(head), pos: Vec::new(), neg: Vec::new() }
    }

    pub fn constraint(pos: Vec<Atom>, neg: Vec<Atom>) -> Self {
        Rule { head: None, pos, neg }
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_none()
    }

    fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.head.iter().chain(&self.pos).chain(&self.neg).copied()
    }
}

/// A set of atoms, stored densely over the program's atom table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Interpretation {
    bits: Vec<bool>,
}

impl Interpretation {
    pub fn empty(num_atoms: usize) -> Self {
        Interpretation { bits: vec![false; num_atoms] }
    }

    pub fn from_atoms(num_atoms: usize, atoms: impl IntoIterator<Item = Atom>) -> Self {
        let mut i = Self::empty(num_atoms);
        for a in atoms {
            i.insert(a);
        }
        i
    }

    pub fn contains(&self, a: Atom) -> bool {
        self.bits.get(a).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, a: Atom) -> bool {
        if a >= self.bits.len() {
            self.bits.resize(a + 1, false);
        }
        !std::mem::replace(&mut self.bits[a], true)
    }

    pub fn remove(&mut self, a: Atom) -> bool {
        a < self.bits.len() && std::mem::replace(&mut self.bits[a], false)
    }

    pub fn iter(&self) -> impl Iterator<Item = Atom> + '_ {
        self.bits.iter().enumerate().filter_map(|(a, &b)| b.then_some(a))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|b| *b)
    }

    /// Equality as sets, ignoring trailing capacity.
    pub fn same_atoms(&self, other: &Interpretation) -> bool {
        let n = self.bits.len().max(other.bits.len());
        (0..n).all(|a| self.contains(a) == other.contains(a))
    }
}

/// A ground program over an interned atom table.
#[derive(Debug, Clone, Default)]
pub struct Program {
    names: Vec<String>,
    index: HashMap<String, Atom>,
    rules: Vec<Rule>,
}

impl Program {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `name`, adding it to the table if new.
    pub fn atom(&mut self, name: &str) -> Atom {
        if let Some(&a) = self.index.get(name) {
            return a;
        }
        let a = self.names.len();
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), a);
        a
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.index.get(name).copied()
    }

    pub fn name(&self, a: Atom) -> &str {
        &self.names[a]
    }

    pub fn num_atoms(&self) -> usize {
        self.names.len()
    }

    pub fn add_rule(&mut self, rule: Rule) -> Result<(), AspError> {
        let count = self.names.len();
        if let Some(atom) = rule.atoms().find(|&a| a >= count) {
            return Err(AspError::UnknownAtom { atom, count });
        }
        self.rules.push(rule);
        Ok(())
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn interpretation<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Option<Interpretation> {
        let mut i = Interpretation::empty(self.num_atoms());
        for n in names {
            i.insert(self.lookup(n)?);
        }
        Some(i)
    }

    pub fn names_of(&self, i: &Interpretation) -> Vec<&str> {
        i.iter().filter(|&a| a < self.names.len()).map(|a| self.name(a)).collect()
    }
}
