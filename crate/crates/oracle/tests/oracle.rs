use std::collections::BTreeSet;

use asp_core::{is_answer_set, Interpretation, Program, Rule};
use cnf::{enumerate_models, Assignment, CnfFormula};
use encoder::{augmented_td, encode, encode_clark, emit_text};
use oracle::{decode, enumerate_naive, enumerate_structured, group_candidates, witness, OracleError};
use ordaug::{build, Mode, OrderingAugmentedTd, DEFAULT_NODE_CAP};
use proptest::prelude::*;
use treedec::{make_nice, Heuristic, TreeDecomposition};

fn f0() -> CnfFormula {
    CnfFormula::new(2, vec![vec![1, 2]]).unwrap()
}

fn single(f: &CnfFormula, mode: Mode) -> OrderingAugmentedTd {
    let bag: BTreeSet<u32> = f.declared_vars().collect();
    build(&make_nice(&TreeDecomposition::single(bag)), mode).unwrap()
}

#[test]
fn clark_counts_models() {
    let gp = encode_clark(&f0());
    assert_eq!(enumerate_naive(gp.program()).unwrap().len(), 3);
    let unsat = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
    assert!(enumerate_naive(encode_clark(&unsat).program()).unwrap().is_empty());
}

#[test]
fn structured_agrees_with_naive_on_tiny_programs() {
    // One variable keeps the reduction small enough for subset enumeration.
    for f in [
        CnfFormula::new(1, vec![vec![1]]).unwrap(),
        CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap(),
        CnfFormula::new(1, vec![]).unwrap(),
    ] {
        let atd = single(&f, Mode::R);
        let gp = encode(&f, &atd);
        let naive = enumerate_naive(gp.program()).unwrap();
        let structured = enumerate_structured(&gp, &atd).unwrap();
        assert_eq!(naive.len(), structured.len(), "{}", emit_text(&gp, true));
        for s in &structured {
            assert!(naive.iter().any(|n| n.same_atoms(s)));
        }
    }
}

#[test]
fn unsat_has_no_answer_sets() {
    let f = CnfFormula::new(2, vec![vec![1], vec![-1], vec![2]]).unwrap();
    for mode in [Mode::R, Mode::RPrime { iota: 2 }] {
        let atd = augmented_td(&f, Heuristic::MinDegree, mode, DEFAULT_NODE_CAP).unwrap();
        assert!(enumerate_structured(&encode(&f, &atd), &atd).unwrap().is_empty());
    }
}

#[test]
fn mode_mismatch_is_rejected() {
    let f = f0();
    let gp = encode(&f, &single(&f, Mode::R));
    assert!(matches!(
        enumerate_structured(&gp, &single(&f, Mode::RPrime { iota: 2 })),
        Err(OracleError::Mismatch(_))
    ));
}

#[test]
fn witness_requires_a_model() {
    let f = f0();
    let atd = single(&f, Mode::R);
    let gp = encode(&f, &atd);
    let bad = Assignment::from_pairs([(1, false), (2, false)]);
    assert_eq!(witness(&bad, &f, &atd, &gp), Err(OracleError::NotAModel));
    let partial = Assignment::from_pairs([(1, true)]);
    assert_eq!(witness(&partial, &f, &atd, &gp), Err(OracleError::MissingVariable(2)));
}

#[test]
fn clark_witness_round_trips() {
    let f = f0();
    let gp = encode_clark(&f);
    // The Clark program has no decomposition, so only its variable atoms matter.
    let atd = single(&f, Mode::R);
    for m in enumerate_models(&f).unwrap() {
        let w = witness(&m, &f, &atd, &gp).unwrap();
        assert!(is_answer_set(gp.program(), &w));
    }
}

#[test]
fn decode_reads_full_queries() {
    let f = f0();
    let atd = single(&f, Mode::R);
    let gp = encode(&f, &atd);
    assert!(matches!(
        decode(&Interpretation::empty(gp.atoms().len()), &gp, &atd),
        Err(OracleError::Undecided(1))
    ));
    for m in enumerate_models(&f).unwrap() {
        let w = witness(&m, &f, &atd, &gp).unwrap();
        assert_eq!(decode(&w, &gp, &atd).unwrap(), m);
    }
}

/// Per-group candidate counts on the two-variable formula. Printed so the
/// reduction's behaviour on this instance is visible in test output.
#[test]
fn candidate_diagnostic() {
    let f = f0();
    let atd = single(&f, Mode::R);
    let gp = encode(&f, &atd);
    let counts: Vec<usize> = group_candidates(&gp, &atd).unwrap().iter().map(Vec::len).collect();
    let total = enumerate_structured(&gp, &atd).unwrap().len();
    println!("groups={} candidates={counts:?} answer_sets={total} models=3", atd.groups().len());
}

fn formula() -> impl Strategy<Value = CnfFormula> {
    (1u32..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_map(1..=n, any::<bool>(), 1..=2), 0..4).prop_map(
            move |cs| {
                let clauses = cs
                    .into_iter()
                    .map(|c| c.into_iter().map(|(v, s)| if s { v as i32 } else { -(v as i32) }).collect())
                    .collect();
                CnfFormula::new(n, clauses).unwrap()
            },
        )
    })
}

fn program() -> impl Strategy<Value = Program> {
    let rule = (
        prop::option::of(0usize..5),
        prop::collection::btree_set(0usize..5, 0..3),
        prop::collection::btree_set(0usize..5, 0..3),
    );
    prop::collection::vec(rule, 0..8).prop_map(|rules| {
        let mut p = Program::new();
        for i in 0..5 {
            p.atom(&format!("a{i}"));
        }
        for (head, pos, neg) in rules {
            let (pos, neg): (Vec<_>, Vec<_>) = (pos.into_iter().collect(), neg.into_iter().collect());
            let rule = match head {
                Some(h) => Rule::new(h, pos, neg),
                None => Rule::constraint(pos, neg),
            };
            p.add_rule(rule).unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn guessing_matches_subset_search(p in program()) {
        let all: Vec<Interpretation> = (0u32..32)
            .map(|bits| Interpretation::from_atoms(5, (0..5).filter(|i| bits >> i & 1 == 1)))
            .filter(|m| is_answer_set(&p, m))
            .collect();
        let found = enumerate_naive(&p).unwrap();
        prop_assert_eq!(found.len(), all.len());
        for m in &found {
            prop_assert!(all.iter().any(|a| a.same_atoms(m)));
        }
    }

    #[test]
    fn clark_matches_models(f in formula()) {
        let gp = encode_clark(&f);
        prop_assert_eq!(enumerate_naive(gp.program()).unwrap().len(), enumerate_models(&f).unwrap().len());
    }

    #[test]
    fn structured_results_are_answer_sets(f in formula()) {
        let atd = augmented_td(&f, Heuristic::MinFill, Mode::R, DEFAULT_NODE_CAP).unwrap();
        let gp = encode(&f, &atd);
        for s in enumerate_structured(&gp, &atd).unwrap() {
            prop_assert!(is_answer_set(gp.program(), &s));
        }
    }

    #[test]
    fn witness_decodes_to_its_model(f in formula()) {
        let atd = augmented_td(&f, Heuristic::MinDegree, Mode::R, DEFAULT_NODE_CAP).unwrap();
        let gp = encode(&f, &atd);
        for m in enumerate_models(&f).unwrap() {
            let w = witness(&m, &f, &atd, &gp).unwrap();
            prop_assert_eq!(decode(&w, &gp, &atd).unwrap(), m);
        }
    }
}
