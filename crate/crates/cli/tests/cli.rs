use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cwtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwtool"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn open_pair_is_reported() {
    let o = cwtool(&["classify", "pair", "3P1", "co(S_1_2_3)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("status=Open rule=OPEN1 "), "{}", stdout(&o));
}

#[test]
fn bounded_and_unbounded_pairs() {
    let o = cwtool(&["classify", "pair", "P4", "K3"]);
    assert!(stdout(&o).starts_with("status=Bounded "));
    let o = cwtool(&["classify", "pair", "K1_3", "K4"]);
    assert!(stdout(&o).starts_with("status=Unbounded "), "{}", stdout(&o));
}

#[test]
fn single_and_family() {
    assert!(stdout(&cwtool(&["classify", "single", "P4"])).starts_with("status=Bounded rule=SG"));
    assert!(stdout(&cwtool(&["classify", "single", "P5"])).starts_with("status=Unbounded rule=SG"));
    let o = cwtool(&["classify", "family", "--relation", "topminor", "K1_4"]);
    assert!(stdout(&o).starts_with("status=Unbounded"));
    let o = cwtool(&["classify", "family", "--relation", "minor", "K4"]);
    assert!(stdout(&o).starts_with("status=Bounded"));
}

#[test]
fn json_is_one_document() {
    let o = cwtool(&["classify", "pair", "3P1", "co(S_1_2_3)", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "Open");
    assert_eq!(v["rule"], "OPEN1");
    let o = cwtool(&["colouring", "pair", "K1_3", "P5", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["status"].is_string());
    let o = cwtool(&["scan", "--max-vertices", "3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graphs"], 7);
    assert_eq!(v["pairs"], 28);
}

#[test]
fn witness_certificate_prints_bound() {
    let o = cwtool(&["witness", "thm4G", "4", "--certify"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("bound=4"));
}

#[test]
fn witness_freeness() {
    let o = cwtool(&["witness", "thm5G", "3", "--verify-free"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches(": yes").count(), 4);
    let o = cwtool(&["witness", "wall", "2", "--verify-free"]);
    assert!(stdout(&o).starts_with("family=Wall params=[2] vertices=16 "));
}

#[test]
fn witness_without_partition_cannot_certify() {
    assert_eq!(code(&cwtool(&["witness", "wall", "3", "--certify"])), 2);
    assert_eq!(code(&cwtool(&["witness", "swall", "3"])), 2);
}

#[test]
fn exact_cliquewidth_of_p4() {
    let o = cwtool(&["cw", "exact", "P4"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("cliquewidth=3"));
    let expr = cwclass::parse_cwexpr(lines.next().unwrap()).unwrap();
    assert!(expr.eval().graph.is_isomorphic(&cwclass::names::graph("P4")));
}

#[test]
fn eval_expression_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.cw");
    fs::write(
        &path,
        "# the path on four vertices\neta(3,2; 3(d) + rho(3->2; rho(2->1; eta(3,2; 3(c) + eta(2,1; 2(b)+1(a))))))\n",
    )
    .unwrap();
    let o = cwtool(&["cw", "eval", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("width=3\nvertices=4 edges=3\nname=P4\n"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&cwtool(&["free-check", "C5", "--patterns", "P4"])), 1);
    assert_eq!(code(&cwtool(&["free-check", "C5", "--patterns", "K3", "claw"])), 0);
    assert_eq!(code(&cwtool(&["classify", "pair", "P4", "nonsense("])), 2);
    assert_eq!(code(&cwtool(&["cw", "exact", "P9"])), 3);
    assert_eq!(code(&cwtool(&["cw", "exact", "P9", "--max-n", "9"])), 0);
    assert_eq!(code(&cwtool(&["scan", "--max-vertices", "9"])), 3);
    assert_eq!(code(&cwtool(&["no-such-command"])), 2);
}

#[test]
fn graph_arguments_from_files_and_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.edges");
    fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let at = format!("@{}", path.display());
    let by_name = stdout(&cwtool(&["classify", "single", "C5"]));
    assert_eq!(stdout(&cwtool(&["classify", "single", &at])), by_name);
    assert_eq!(stdout(&cwtool(&["classify", "single", path.to_str().unwrap()])), by_name);
    // graph6 of C5
    assert_eq!(stdout(&cwtool(&["classify", "single", "g6:Dhc"])), by_name);
}

#[test]
fn written_witness_round_trips_through_certify() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.edges");
    let part = dir.path().join("g.part");
    let o = cwtool(&[
        "witness",
        "thm5G",
        "3",
        "--out",
        graph.to_str().unwrap(),
        "--format",
        "edges",
        "--partition-out",
        part.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let o = cwtool(&["certify", graph.to_str().unwrap(), part.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("bound=3"));
}

#[test]
fn scan_is_deterministic_across_thread_counts() {
    let one = cwtool(&["scan", "--max-vertices", "5", "--jobs", "1"]);
    let four = cwtool(&["scan", "--max-vertices", "5", "--jobs", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert!(stdout(&one).starts_with("max_vertices=5 graphs=52 pairs=1378\n"));
}
