use std::collections::{BTreeSet, HashMap, HashSet};

use cnf::{primal_graph, CnfFormula, UndirectedGraph};
use ordaug::{
    assign_edges, augment, build, group_size, group_size_iota, Endpoint, Mode, OrdError, Ordering,
    OrderingAugmentedTd, Origin, Pred, DEFAULT_NODE_CAP,
};
use proptest::prelude::*;
use treedec::{heuristic_td, make_nice, validate_td, Heuristic, TreeDecomposition};

fn set(v: &[u32]) -> BTreeSet<u32> {
    v.iter().copied().collect()
}

/// The three-bag decomposition of the running example, rooted at {a}.
fn example_td() -> TreeDecomposition {
    TreeDecomposition::from_edges(vec![set(&[1, 2]), set(&[1, 3, 4]), set(&[1])], &[(0, 2), (1, 2)], 2)
        .unwrap()
}

fn example_formula() -> CnfFormula {
    CnfFormula::new(4, vec![vec![1, -2], vec![-1, 3, 4], vec![-3, -4]]).unwrap()
}

fn count_origins(atd: &OrderingAugmentedTd, pred: impl Fn(&Origin) -> bool) -> usize {
    atd.nodes().iter().filter(|n| pred(&n.origin)).count()
}

#[test]
fn example_chain_lengths() {
    let atd = build(&make_nice(&example_td()), Mode::R).unwrap();
    assert_eq!(count_origins(&atd, |o| matches!(o, Origin::LeafChain { leaf: 0, .. })), 6);
    assert_eq!(count_origins(&atd, |o| matches!(o, Origin::Pair { parent: 2, child: 0, .. })), 12);
    assert_eq!(count_origins(&atd, |o| matches!(o, Origin::Pair { parent: 2, child: 1, .. })), 48);
    assert_eq!(atd.len(), 3 + 6 + 24 + 12 + 48);
    assert_eq!(atd.groups().iter().map(|g| g.len()).collect::<Vec<_>>(), vec![3, 4, 2]);
    assert_eq!(validate_td(&primal_graph(&example_formula()), atd.td()), Ok(()));
}

#[test]
fn example_edge_shares() {
    let atd = build(&make_nice(&example_td()), Mode::R).unwrap();
    let chain: Vec<usize> = (0..atd.len())
        .filter(|&t| matches!(atd.node(t).origin, Origin::LeafChain { leaf: 0, .. }))
        .collect();
    let v = Endpoint::Vertex;
    let s = Endpoint::Source { group: 0, block: 0 };
    let d = Endpoint::Dest { group: 0, block: 0 };
    let top = atd.node(chain[0]);
    assert_eq!(top.phi.as_ref().unwrap().ordering, Ordering::new(vec![vec![1, 2, 3]]));
    assert_eq!(top.edges, vec![(s, v(1)), (v(1), v(2)), (v(2), v(3)), (v(3), d)]);
    let next = atd.node(chain[1]);
    assert_eq!(next.phi.as_ref().unwrap().ordering, Ordering::new(vec![vec![1, 3, 2]]));
    assert_eq!(next.edges, vec![(v(1), v(3)), (v(3), v(2)), (v(2), d)]);
    assert_eq!(atd.td().parent(chain[1]), Some(chain[0]));
    assert_eq!(atd.td().parent(chain[0]), Some(0));
}

#[test]
fn pair_chain_runs_upward_in_lexicographic_order() {
    let atd = build(&make_nice(&example_td()), Mode::R).unwrap();
    let chain: Vec<usize> = (0..atd.len())
        .filter(|&t| matches!(atd.node(t).origin, Origin::Pair { parent: 2, child: 0, .. }))
        .collect();
    assert_eq!(atd.td().parent(0), Some(chain[0]));
    assert_eq!(atd.td().parent(chain[11]), Some(2));
    let ranks: Vec<(u64, u64)> = chain
        .iter()
        .map(|&t| {
            let n = atd.node(t);
            (n.phi.as_ref().unwrap().rank, n.psi.as_ref().unwrap().rank)
        })
        .collect();
    let mut sorted = ranks.clone();
    sorted.sort();
    assert_eq!(ranks, sorted);
    assert_eq!(ranks[0], (0, 0));
    assert_eq!(ranks[11], (1, 5));
}

#[test]
fn pred_cases() {
    let atd = build(&make_nice(&example_td()), Mode::R).unwrap();
    let bottom = (0..atd.len())
        .find(|&t| matches!(atd.node(t).origin, Origin::LeafChain { leaf: 0, index: 5 }))
        .unwrap();
    assert_eq!(atd.pred(1, bottom), Pred::Eps);
    let interior = (0..atd.len())
        .find(|&t| matches!(atd.node(t).origin, Origin::LeafChain { leaf: 0, index: 2 }))
        .unwrap();
    assert_eq!(atd.pred(1, interior), Pred::Nodes(atd.td().children(interior).to_vec()));
    // The root's children are the tops of two pair chains; only one carries v1.
    match atd.pred(1, 2) {
        Pred::Nodes(c) => assert_eq!(c.len(), 1),
        Pred::Eps => panic!("v1 should come from the left chain"),
    }
}

#[test]
fn pred_at_join_with_equal_bag_children() {
    // Three children force a binary cascade whose copy repeats the root bag.
    let bags = vec![set(&[1]), set(&[1, 2]), set(&[1, 3]), set(&[1, 4])];
    let td = TreeDecomposition::from_edges(bags, &[(0, 1), (0, 2), (0, 3)], 0).unwrap();
    let atd = build(&make_nice(&td), Mode::R).unwrap();
    let g = atd.node(0).group.unwrap();
    let x = atd.group(g).vertices().next().unwrap();
    // The copy (node 4) shares the root's group; its pair chain carries x.
    assert_eq!(atd.node(4).group, Some(g));
    let copy_top = atd.td().parent(4).unwrap();
    match atd.pred(x, copy_top) {
        Pred::Nodes(c) => assert_eq!(c, vec![4]),
        Pred::Eps => panic!("copy carries the vertex"),
    }
    // At the original join both child chains are topped by nodes of the root's group.
    match atd.pred(x, 0) {
        Pred::Nodes(c) => assert_eq!(c.len(), 2),
        Pred::Eps => panic!("both chains carry the vertex"),
    }
}

#[test]
fn single_bag_gets_six_chain_nodes() {
    let atd = build(&make_nice(&TreeDecomposition::single(set(&[1, 2]))), Mode::R).unwrap();
    assert_eq!(atd.len(), 7);
}

#[test]
fn empty_bag_leaf_has_no_group() {
    let td = TreeDecomposition::from_edges(vec![set(&[1]), set(&[])], &[(0, 1)], 0).unwrap();
    let atd = build(&make_nice(&td), Mode::R).unwrap();
    assert_eq!(atd.node(1).group, None);
    assert_eq!(count_origins(&atd, |o| matches!(o, Origin::LeafChain { .. })), 0);
    assert_eq!(atd.groups().len(), 1);
    // Two orderings above, one (empty) below.
    assert_eq!(count_origins(&atd, |o| matches!(o, Origin::Pair { .. })), 2);
}

#[test]
fn cap_is_enforced() {
    let ntd = make_nice(&example_td());
    assert!(matches!(augment(&ntd, Mode::R, 10), Err(OrdError::TooLarge { cap: 10, .. })));
    assert!(augment(&ntd, Mode::R, DEFAULT_NODE_CAP).is_ok());
}

#[test]
fn blocked_mode_splits_sources() {
    let atd = build(&make_nice(&TreeDecomposition::single(set(&[1, 2]))), Mode::RPrime { iota: 2 }).unwrap();
    let g = atd.group(0);
    assert_eq!(g.blocks().len(), 2);
    let sources: HashSet<Endpoint> = atd
        .nodes()
        .iter()
        .flat_map(|n| n.edges.iter().map(|e| e.0))
        .filter(|e| matches!(e, Endpoint::Source { .. }))
        .collect();
    assert_eq!(sources.len(), 2);
}

#[test]
fn json_dump_mentions_edges() {
    let atd = build(&make_nice(&example_td()), Mode::R).unwrap();
    let text = atd.to_json().to_string();
    assert!(text.contains("\"s1->v1\""));
    assert!(text.contains("\"leaf_chain\""));
}

#[test]
fn bijection_is_exhaustive() {
    for b in 0..=4u32 {
        let bag: Vec<u32> = (1..=b).collect();
        for mode in [Mode::R, Mode::RPrime { iota: 2 }, Mode::RPrime { iota: 3 }] {
            let g = ordaug::OrderingGroup::new(0, bag.clone(), 1, mode).unwrap();
            let mut seen = HashSet::new();
            for o in g.orderings() {
                if let Some(a) = g.assignment_of(&o).unwrap() {
                    assert!(seen.insert(a.to_string()), "duplicate assignment");
                    assert_eq!(g.ordering_of(&a).unwrap(), o);
                }
            }
            assert_eq!(seen.len(), 1 << b);
        }
    }
}

#[test]
fn sizing_bounds() {
    let mut prev = 0;
    for b in 0..=30usize {
        let k = group_size(b);
        assert!(k >= prev);
        prev = k;
        if b >= 1 {
            assert!(k <= b + 1);
            assert!(k as f64 * (k as f64).log2() >= b as f64);
        }
    }
}

fn graph() -> impl Strategy<Value = UndirectedGraph> {
    (1u32..=6).prop_flat_map(|n| {
        prop::collection::vec((1..=n, 1..=n), 0..8).prop_map(move |edges| {
            let mut g = UndirectedGraph::new();
            for v in 1..=n {
                g.add_vertex(v);
            }
            for (a, b) in edges {
                g.add_edge(a, b);
            }
            g
        })
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::R), Just(Mode::RPrime { iota: 2 }), Just(Mode::RPrime { iota: 3 })]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn augmented_td_is_valid_and_edges_partition(g in graph(), m in mode()) {
        let ntd = make_nice(&heuristic_td(&g, Heuristic::MinDegree));
        let atd = match augment(&ntd, m, 200_000) {
            Ok(a) => assign_edges(a),
            Err(OrdError::TooLarge { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        prop_assert_eq!(validate_td(&g, atd.td()), Ok(()));

        let mut owner: HashMap<(Endpoint, Endpoint), usize> = HashMap::new();
        for (t, n) in atd.nodes().iter().enumerate() {
            for e in &n.edges {
                prop_assert!(owner.insert(*e, t).is_none(), "edge claimed twice");
            }
        }
        for group in atd.groups() {
            let mut expected = HashSet::new();
            for o in group.orderings() {
                expected.extend(o.successor_edges(group.id()));
            }
            let got: HashSet<_> = owner
                .keys()
                .filter(|(a, b)| {
                    [a, b].iter().any(|e| match e {
                        Endpoint::Vertex(v) => group.contains(*v),
                        Endpoint::Source { group: g, .. } | Endpoint::Dest { group: g, .. } => *g == group.id(),
                    })
                })
                .copied()
                .collect();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn chains_enumerate_every_pair_once(g in graph(), m in mode()) {
        let ntd = make_nice(&heuristic_td(&g, Heuristic::MinFill));
        let atd = match augment(&ntd, m, 200_000) {
            Ok(a) => a,
            Err(OrdError::TooLarge { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let td = ntd.td();
        let count = |t: usize| atd.node(t).group.map_or(1, |g| atd.group(g).num_orderings());
        for t in 0..td.len() {
            prop_assert!(atd.node(t).phi.is_none() && atd.node(t).psi.is_none());
            for &c in td.children(t) {
                let pairs: HashSet<(Option<u64>, Option<u64>)> = atd
                    .nodes()
                    .iter()
                    .filter(|n| matches!(n.origin, Origin::Pair { parent, child, .. } if parent == t && child == c))
                    .map(|n| (n.phi.as_ref().map(|p| p.rank), n.psi.as_ref().map(|p| p.rank)))
                    .collect();
                prop_assert_eq!(pairs.len() as u64, count(t) * count(c));
            }
        }
    }

    #[test]
    fn blocked_sizing_is_minimal(b in 0usize..=16, iota in 2usize..=5) {
        let (k, blocks) = group_size_iota(b, iota).unwrap();
        prop_assert_eq!(blocks, k.div_ceil(iota));
        let orderings = |k: usize| -> f64 {
            let full = (k / iota) as f64 * (ordaug::factorial(iota) as f64).log2();
            full + (ordaug::factorial(k % iota) as f64).log2()
        };
        prop_assert!(orderings(k) + 1e-9 >= b as f64);
        if k > 0 {
            prop_assert!(orderings(k - 1) + 1e-9 < b as f64);
        }
    }
}
