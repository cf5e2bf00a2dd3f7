use ordaug::{AugNodeId, Endpoint, Mode, VertexId};

/// Structured atom names. Nodes render 1-based as `t{n}`, groups as `g{n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `r(v)`, `r_s(g)` or `r_d(g)` depending on the endpoint.
    Reach(Endpoint),
    Edge(Endpoint, Endpoint),
    EdgeHat(Endpoint, Endpoint),
    /// `o(t,v)` for vertices, `o_s(t,g)` for sources.
    Out(AugNodeId, Endpoint),
    Test(AugNodeId, VertexId),
    TestEps(VertexId),
    Query(AugNodeId, VertexId),
    Var(u32),
    VarHat(u32),
}

fn group_ref(group: usize, block: usize, mode: Mode) -> String {
    match mode {
        Mode::R => format!("g{}", group + 1),
        Mode::RPrime { .. } => format!("g{},{}", group + 1, block + 1),
    }
}

impl Atom {
    pub fn render(&self, mode: Mode) -> String {
        match *self {
            Atom::Reach(Endpoint::Vertex(v)) => format!("r(v{v})"),
            Atom::Reach(Endpoint::Source { group, block }) => format!("r_s({})", group_ref(group, block, mode)),
            Atom::Reach(Endpoint::Dest { group, block }) => format!("r_d({})", group_ref(group, block, mode)),
            Atom::Edge(a, b) => format!("e({},{})", a.label(mode), b.label(mode)),
            Atom::EdgeHat(a, b) => format!("ehat({},{})", a.label(mode), b.label(mode)),
            Atom::Out(t, Endpoint::Source { group, block }) => {
                format!("o_s(t{},{})", t + 1, group_ref(group, block, mode))
            }
            Atom::Out(t, y) => format!("o(t{},{})", t + 1, y.label(mode)),
            Atom::Test(t, x) => format!("p(t{},v{x})", t + 1),
            Atom::TestEps(x) => format!("p_eps(v{x})"),
            Atom::Query(t, x) => format!("q(t{},v{x})", t + 1),
            Atom::Var(v) => format!("x({v})"),
            Atom::VarHat(v) => format!("xhat({v})"),
        }
    }

    /// The ordering group the atom belongs to, if any.
    pub fn group(&self, vertex_group: impl Fn(VertexId) -> Option<usize>) -> Option<usize> {
        let of = |e: Endpoint| match e {
            Endpoint::Vertex(v) => vertex_group(v),
            Endpoint::Source { group, .. } | Endpoint::Dest { group, .. } => Some(group),
        };
        match *self {
            Atom::Reach(e) | Atom::Out(_, e) => of(e),
            Atom::Edge(a, b) | Atom::EdgeHat(a, b) => of(a).or(of(b)),
            Atom::Test(_, x) | Atom::TestEps(x) | Atom::Query(_, x) => vertex_group(x),
            Atom::Var(_) | Atom::VarHat(_) => None,
        }
    }
}
