use std::path::PathBuf;
use std::process::{Command, Output};

fn twasp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twasp")).args(args).env_remove("TWASP_SOLVER").output().unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("twasp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn encoding_is_byte_identical_across_runs() {
    let f = scratch("ex2.cnf", "p cnf 4 3\n1 -2 0\n-1 3 4 0\n-3 -4 0\n");
    for extra in [&["--mode", "r"][..], &["--mode", "rprime", "--iota", "2", "--heuristic", "min-fill"]] {
        let mut args = vec!["encode", s(&f), "--provenance"];
        args.extend_from_slice(extra);
        let a = twasp(&args);
        let b = twasp(&args);
        assert!(a.status.success());
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout);
    }
    let a = twasp(&["analyze", s(&f)]);
    assert_eq!(a.stdout, twasp(&["analyze", s(&f)]).stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["k_prime"], 4);
}

#[test]
fn out_file_gets_program_and_stdout_gets_summary() {
    let f = scratch("f0.cnf", "p cnf 2 1\n1 2 0\n");
    let out = f.with_extension("lp");
    let o = twasp(&["encode", "--mode", "r", "--heuristic", "min-degree", s(&f), "--out", s(&out)]);
    assert!(o.status.success());
    let summary = String::from_utf8(o.stdout).unwrap();
    assert!(summary.starts_with("atoms="), "{summary}");
    assert!(std::fs::read_to_string(&out).unwrap().contains("r_s(g1)."));
}

#[test]
fn unsatisfiable_formula_verifies() {
    let f = scratch("unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let o = twasp(&["verify", s(&f)]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "models=0 answer_sets=0 OK\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn count_disagreement_exits_one() {
    let f = scratch("f0v.cnf", "p cnf 2 1\n1 2 0\n");
    let o = twasp(&["verify", s(&f)]);
    let line = String::from_utf8(o.stdout).unwrap();
    assert!(line.starts_with("models=3 answer_sets="), "{line}");
    assert_eq!(o.status.code(), Some(if line.ends_with("OK\n") { 0 } else { 1 }));
}

#[test]
fn usage_errors_exit_two() {
    let f = scratch("u.cnf", "p cnf 1 1\n1 0\n");
    assert_eq!(twasp(&["encode", s(&f), "--mode", "rprime"]).status.code(), Some(2));
    assert_eq!(twasp(&["encode", s(&f), "--mode", "rprime", "--iota", "1"]).status.code(), Some(2));
    assert_eq!(twasp(&["encode", "/definitely/missing.cnf"]).status.code(), Some(2));
    assert_eq!(twasp(&["frobnicate"]).status.code(), Some(2));
    let bad = scratch("bad.cnf", "p cnf x\n");
    assert_eq!(twasp(&["baseline", s(&bad)]).status.code(), Some(2));
}

#[test]
fn guards_exit_one() {
    let f = scratch("g.cnf", "p cnf 2 1\n1 2 0\n");
    let o = twasp(&["encode", s(&f), "--node-cap", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("cap"));
}

#[test]
fn td_subcommands() {
    let f = scratch("td.cnf", "p cnf 4 3\n1 -2 0\n-1 3 4 0\n-3 -4 0\n");
    let td = scratch("ex2.td", "s td 3 3 4\nb 1 1 2\nb 2 1 3 4\nb 3 1\n1 3\n2 3\n");
    let check = twasp(&["td", "check", s(&f), s(&td)]);
    assert_eq!(String::from_utf8(check.stdout).unwrap(), "valid width=2\n");
    let broken = scratch("broken.td", "s td 2 2 4\nb 1 1 2\nb 2 3 4\n1 2\n");
    let o = twasp(&["td", "check", s(&f), s(&broken)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("invalid:"));

    let computed = twasp(&["td", "compute", s(&f), "--heuristic", "min-fill"]);
    let path = scratch("computed.td", std::str::from_utf8(&computed.stdout).unwrap());
    assert!(twasp(&["td", "check", s(&f), s(&path)]).status.success());
    let nice = twasp(&["td", "nicify", s(&td)]);
    let nice_path = scratch("nice.td", std::str::from_utf8(&nice.stdout).unwrap());
    assert!(twasp(&["td", "check", s(&f), s(&nice_path)]).status.success());

    let enc = twasp(&["encode", s(&f), "--td", s(&td)]);
    assert!(enc.status.success());
    assert_eq!(twasp(&["encode", s(&f), "--td", s(&broken)]).status.code(), Some(1));
}

#[test]
fn baseline_is_clark_completion() {
    let f = scratch("b.cnf", "p cnf 2 1\n1 -2 0\n");
    let o = twasp(&["baseline", s(&f)]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("x(1) :- not xhat(1).\n"));
    assert!(text.contains(":- xhat(1), x(2).\n"));
}
