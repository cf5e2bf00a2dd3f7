use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{CnfError, Var};

/// A partial assignment with an explicit domain.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    values: BTreeMap<Var, bool>,
}

impl Assignment {
    pub fn from_map(values: BTreeMap<Var, bool>) -> Self {
        Self { values }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, bool)>) -> Self {
        Self { values: pairs.into_iter().collect() }
    }

    pub fn get(&self, var: Var) -> Result<bool, CnfError> {
        self.values.get(&var).copied().ok_or(CnfError::Unassigned(var))
    }

    pub fn set(&mut self, var: Var, value: bool) {
        self.values.insert(var, value);
    }

    pub fn domain(&self) -> BTreeSet<Var> {
        self.values.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, bool)> + '_ {
        self.values.iter().map(|(&v, &b)| (v, b))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Restriction to the variables in `vars` that lie in the domain.
    pub fn restrict<'a>(&self, vars: impl IntoIterator<Item = &'a Var>) -> Assignment {
        let values =
            vars.into_iter().filter_map(|v| self.values.get(v).map(|&b| (*v, b))).collect();
        Assignment { values }
    }

    /// Two assignments are compatible iff they agree on every shared variable.
    pub fn compatible(&self, other: &Assignment) -> bool {
        self.values.iter().all(|(v, b)| other.values.get(v).is_none_or(|o| o == b))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.values.iter().map(|(v, &b)| if b { format!("{v}") } else { format!("-{v}") }).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}
