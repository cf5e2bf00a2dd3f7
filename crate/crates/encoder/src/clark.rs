use cnf::CnfFormula;
use ordaug::Mode;

use crate::{Atom, Formula, GroundProgram, Tag};

/// Guess each variable through a pair of mutually blocking rules, then
/// forbid every assignment that falsifies a clause.
pub fn encode_clark(f: &CnfFormula) -> GroundProgram {
    let mut gp = GroundProgram::new(Mode::R);
    let tag = Tag { formula: Formula::Baseline, node: None };
    for v in f.declared_vars() {
        gp.push(Some(Atom::Var(v)), &[], &[Atom::VarHat(v)], tag);
        gp.push(Some(Atom::VarHat(v)), &[], &[Atom::Var(v)], tag);
    }
    for clause in f.clauses() {
        let body: Vec<Atom> = clause
            .iter()
            .map(|&l| if l > 0 { Atom::VarHat(l as u32) } else { Atom::Var(l.unsigned_abs()) })
            .collect();
        gp.push(None, &body, &[], tag);
    }
    gp
}
