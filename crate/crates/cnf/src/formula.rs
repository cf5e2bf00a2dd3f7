use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::{Assignment, CnfError, Lit, UndirectedGraph, Var};

/// Brute-force enumeration refuses formulas with more variables than this.
pub const MAX_ENUM_VARS: u32 = 24;

/// A formula in conjunctive normal form.
///
/// Clauses keep their input order (duplicates included); literals inside a
/// clause are deduplicated but otherwise keep their order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Vec<Lit>>) -> Result<Self, CnfError> {
        let mut normalized = Vec::with_capacity(clauses.len());
        for (index, clause) in clauses.into_iter().enumerate() {
            let mut seen = BTreeSet::new();
            let mut out = Vec::with_capacity(clause.len());
            for lit in clause {
                if lit == 0 || lit.unsigned_abs() > num_vars {
                    return Err(CnfError::LiteralOutOfRange { lit, num_vars });
                }
                if seen.contains(&-lit) {
                    return Err(CnfError::Tautology { index, var: lit.unsigned_abs() });
                }
                if seen.insert(lit) {
                    out.push(lit);
                }
            }
            normalized.push(out);
        }
        Ok(Self { num_vars, clauses: normalized })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// Variables that occur in some clause, ascending.
    pub fn occurring_vars(&self) -> BTreeSet<Var> {
        self.clauses.iter().flatten().map(|l| l.unsigned_abs()).collect()
    }

    /// All declared variables `1..=num_vars`.
    pub fn declared_vars(&self) -> impl Iterator<Item = Var> {
        1..=self.num_vars
    }

    /// The atoms `at(c)` of clause `index`.
    pub fn clause_vars(&self, index: usize) -> BTreeSet<Var> {
        self.clauses[index].iter().map(|l| l.unsigned_abs()).collect()
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Whether `assignment` satisfies `clause`; every variable must be assigned.
pub(crate) fn clause_satisfied(clause: &[Lit], assignment: &Assignment) -> Result<bool, CnfError> {
    for &lit in clause {
        if assignment.get(lit.unsigned_abs())? == (lit > 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff every clause has a satisfied literal.
pub fn eval(f: &CnfFormula, assignment: &Assignment) -> Result<bool, CnfError> {
    for var in f.occurring_vars() {
        assignment.get(var)?;
    }
    for clause in f.clauses() {
        if !clause_satisfied(clause, assignment)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices are the occurring variables; two are adjacent iff some clause
/// mentions both.
pub fn primal_graph(f: &CnfFormula) -> UndirectedGraph {
    let mut g = UndirectedGraph::new();
    for clause in f.clauses() {
        let vars: Vec<Var> = clause.iter().map(|l| l.unsigned_abs()).collect();
        for (i, &a) in vars.iter().enumerate() {
            g.add_vertex(a);
            for &b in &vars[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// All models over `1..=num_vars`, in lexicographic order with variable 1 as
/// the most significant position and false before true.
pub fn enumerate_models(f: &CnfFormula) -> Result<Vec<Assignment>, CnfError> {
    let n = f.num_vars();
    if n > MAX_ENUM_VARS {
        return Err(CnfError::TooLarge { num_vars: n, limit: MAX_ENUM_VARS });
    }
    let mut models = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let values: BTreeMap<Var, bool> =
            (1..=n).map(|v| (v, mask >> (n - v) & 1 == 1)).collect();
        let assignment = Assignment::from_map(values);
        if eval(f, &assignment)? {
            models.push(assignment);
        }
    }
    Ok(models)
}
