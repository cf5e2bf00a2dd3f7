use cnf::{Assignment, CnfFormula};
use ordaug::{AugNodeId, Endpoint, Mode, OrdRef, OrderingAugmentedTd, Pred, VertexId};

use crate::{Atom, EncodeError, Formula, GroundProgram, Tag};

/// Schemas whose blocked form differs from the plain one.
const BLOCKED: [u8; 5] = [1, 2, 5, 8, 10];

struct Emitter<'a> {
    f: &'a CnfFormula,
    atd: &'a OrderingAugmentedTd,
    gp: &'a mut GroundProgram,
    /// Clauses fully inside each group's bag.
    group_clauses: Vec<Vec<usize>>,
}

impl<'a> Emitter<'a> {
    fn new(f: &'a CnfFormula, atd: &'a OrderingAugmentedTd, gp: &'a mut GroundProgram) -> Self {
        let group_clauses = atd
            .groups()
            .iter()
            .map(|g| {
                (0..f.clauses().len())
                    .filter(|&i| f.clause_vars(i).iter().all(|v| g.bag().contains(v)))
                    .collect()
            })
            .collect();
        Emitter { f, atd, gp, group_clauses }
    }

    fn emit(&mut self, n: u8, t: AugNodeId, head: Option<Atom>, pos: &[Atom], neg: &[Atom]) {
        let formula = match self.atd.mode() {
            Mode::RPrime { .. } if BLOCKED.contains(&n) => Formula::Prime(n),
            _ => Formula::Plain(n),
        };
        self.gp.push(head, pos, neg, Tag { formula, node: Some(t) });
    }

    /// The testing point preceding `x` at `t`, when it is unique.
    fn pred_atom(&self, x: VertexId, t: AugNodeId) -> Option<Atom> {
        match self.atd.pred(x, t) {
            Pred::Eps => Some(Atom::TestEps(x)),
            Pred::Nodes(c) if c.len() == 1 => Some(Atom::Test(c[0], x)),
            Pred::Nodes(_) => None,
        }
    }

    fn same_group(&self, t: AugNodeId, c: AugNodeId) -> Option<usize> {
        let g = self.atd.node(t).group?;
        (self.atd.node(c).group == Some(g)).then_some(g)
    }

    fn decode(&self, side: &OrdRef) -> Option<Assignment> {
        self.atd.group(side.group).assignment_of_rank(side.rank)
    }

    fn lasts(t: AugNodeId, side: &OrdRef) -> Vec<Atom> {
        side.ordering.lasts().map(|x| Atom::Query(t, x)).collect()
    }

    fn node(&mut self, t: AugNodeId) {
        let atd = self.atd;
        let node = atd.node(t);
        let own = node.group.map(|g| atd.group(g));
        let children = atd.td().children(t);
        let blocks = own.map_or(0, |g| g.blocks().len());

        // Orderings and reachability.
        if let Some(g) = own {
            for j in 0..blocks {
                self.emit(1, t, Some(Atom::Reach(g.source(j))), &[], &[]);
            }
            for v in g.vertices() {
                self.emit(2, t, None, &[], &[Atom::Reach(Endpoint::Vertex(v))]);
            }
            for j in 0..blocks {
                self.emit(2, t, None, &[], &[Atom::Reach(g.dest(j))]);
            }
        }
        for &(y, x) in &node.edges {
            self.emit(3, t, Some(Atom::Edge(y, x)), &[Atom::Reach(y)], &[Atom::EdgeHat(y, x)]);
            self.emit(3, t, Some(Atom::EdgeHat(y, x)), &[Atom::Reach(y)], &[Atom::Edge(y, x)]);
        }
        for &(y, x) in &node.edges {
            if let Endpoint::Vertex(v) = x {
                self.emit(4, t, Some(Atom::TestEps(v)), &[Atom::Edge(y, x)], &[]);
            }
        }
        for &(y, x) in &node.edges {
            if let Endpoint::Dest { .. } = x {
                self.emit(5, t, Some(Atom::Reach(x)), &[Atom::Edge(y, x)], &[]);
            }
        }
        if node.phi.is_none() {
            for &c in children {
                let child = atd.node(c);
                let Some(psi) = &child.psi else { continue };
                for x in psi.ordering.vertices() {
                    if !child.phi.as_ref().is_some_and(|p| p.ordering.contains(x)) {
                        self.emit(6, t, Some(Atom::Reach(Endpoint::Vertex(x))), &[Atom::Test(c, x)], &[]);
                    }
                }
            }
        }
        if t == atd.root() {
            for x in atd.own_vertices(t) {
                self.emit(7, t, Some(Atom::Reach(Endpoint::Vertex(x))), &[Atom::Test(t, x)], &[]);
            }
        }

        // At most one outgoing edge.
        for &c in children {
            if let Some(g) = self.same_group(t, c) {
                let g = atd.group(g);
                for v in g.vertices() {
                    let y = Endpoint::Vertex(v);
                    self.emit(8, t, Some(Atom::Out(t, y)), &[Atom::Out(c, y)], &[]);
                }
                for j in 0..g.blocks().len() {
                    let s = g.source(j);
                    self.emit(8, t, Some(Atom::Out(t, s)), &[Atom::Out(c, s)], &[]);
                }
            }
        }
        for &(y, x) in &node.edges {
            self.emit(9, t, Some(Atom::Out(t, y)), &[Atom::Edge(y, x)], &[]);
        }
        for &(y, x) in &node.edges {
            for &c in children {
                if self.same_group(t, c).is_some() {
                    self.emit(10, t, None, &[Atom::Out(c, y), Atom::Edge(y, x)], &[]);
                }
            }
        }

        // Testing points.
        if node.phi.is_none() {
            for x in atd.own_vertices(t) {
                let body: Vec<Atom> = match atd.pred(x, t) {
                    Pred::Eps => vec![Atom::TestEps(x)],
                    Pred::Nodes(cs) => cs.into_iter().map(|c| Atom::Test(c, x)).collect(),
                };
                self.emit(11, t, Some(Atom::Test(t, x)), &body, &[]);
            }
        }
        let sides: Vec<&OrdRef> = node.phi.iter().chain(node.psi.iter()).collect();
        // Chain rules, schema by schema over both orderings.
        for n in 12..=16u8 {
            for side in &sides {
                for block in side.ordering.blocks() {
                    for (i, &x) in block.iter().enumerate() {
                        let Some(pr) = self.pred_atom(x, t) else { continue };
                        let prev = i.checked_sub(1).map(|j| Atom::Query(t, block[j]));
                        let last = i + 1 == block.len();
                        match (n, prev) {
                            (12, Some(q)) => self.emit(12, t, Some(Atom::Test(t, x)), &[pr], &[q]),
                            (13, _) if last => {
                                self.emit(13, t, Some(Atom::Test(t, x)), &[pr], &[Atom::Query(t, x)])
                            }
                            (14, None) => self.emit(14, t, Some(Atom::Query(t, x)), &[pr], &[]),
                            (15, Some(q)) => self.emit(15, t, Some(Atom::Query(t, x)), &[pr, q], &[]),
                            (16, _) => self.emit(16, t, Some(Atom::Test(t, x)), &[Atom::Query(t, x)], &[]),
                            _ => {}
                        }
                    }
                }
            }
        }

        // Compatibility and satisfiability.
        if let (Some(phi), Some(psi)) = (&node.phi, &node.psi) {
            if let (Some(a), Some(b)) = (self.decode(phi), self.decode(psi)) {
                if !a.compatible(&b) {
                    let mut body = Self::lasts(t, phi);
                    body.extend(Self::lasts(t, psi));
                    self.emit(17, t, None, &body, &[]);
                }
            }
        }
        if let Some(phi) = &node.phi {
            let body = Self::lasts(t, phi);
            match self.decode(phi) {
                Some(a) => {
                    let violated = self.group_clauses[phi.group].iter().any(|&i| {
                        !self.f.clauses()[i].iter().any(|&l| a.get(l.unsigned_abs()) == Ok(l > 0))
                    });
                    if violated {
                        self.emit(18, t, None, &body, &[]);
                    }
                }
                None => self.emit(19, t, None, &body, &[]),
            }
        }
    }
}

/// Encodes every node in id order, using the decomposition's own mode.
pub fn encode(f: &CnfFormula, atd: &OrderingAugmentedTd) -> GroundProgram {
    let mut gp = GroundProgram::new(atd.mode());
    let mut em = Emitter::new(f, atd, &mut gp);
    for t in 0..atd.len() {
        em.node(t);
    }
    gp
}

fn mode_name(m: Mode) -> String {
    match m {
        Mode::R => "plain orderings".into(),
        Mode::RPrime { iota } => format!("blocked orderings (block size {iota})"),
    }
}

pub fn encode_r(f: &CnfFormula, atd: &OrderingAugmentedTd) -> Result<GroundProgram, EncodeError> {
    if atd.mode() != Mode::R {
        return Err(EncodeError::ModeMismatch { expected: mode_name(Mode::R), found: mode_name(atd.mode()) });
    }
    Ok(encode(f, atd))
}

pub fn encode_r_prime(
    f: &CnfFormula,
    atd: &OrderingAugmentedTd,
    iota: usize,
) -> Result<GroundProgram, EncodeError> {
    if iota < 2 {
        return Err(EncodeError::IotaTooSmall(iota));
    }
    let expected = Mode::RPrime { iota };
    if atd.mode() != expected {
        return Err(EncodeError::ModeMismatch { expected: mode_name(expected), found: mode_name(atd.mode()) });
    }
    Ok(encode(f, atd))
}

/// The rules a single node contributes, without global deduplication.
pub fn encode_node(f: &CnfFormula, atd: &OrderingAugmentedTd, t: AugNodeId) -> GroundProgram {
    let mut gp = GroundProgram::new(atd.mode());
    Emitter::new(f, atd, &mut gp).node(t);
    gp
}
