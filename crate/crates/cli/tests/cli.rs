use std::io::Write;
use std::process::{Command, Stdio};

use llt_lab_cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("llt-lab").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

#[test]
fn two_cells_llt() {
    let v = json(&["--json", "llt", "shapes", "[(1),(1)]", "--vars", "2"]);
    assert_eq!(v["num_vars"], 2);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms[0]["exponents"], serde_json::json!([2]));
    assert_eq!(terms[0]["q_coeffs"], serde_json::json!(["1"]));
    assert_eq!(terms[1]["exponents"], serde_json::json!([1, 1]));
    assert_eq!(terms[1]["q_coeffs"], serde_json::json!(["1", "1"]));
}

#[test]
fn vars_default_to_the_degree() {
    let v = json(&["--json", "llt", "shapes", "[(2,1),(1)]"]);
    assert_eq!(v["num_vars"], 4);
}

#[test]
fn graph_and_shape_routes_agree() {
    let by_shapes = cli(&["--json", "llt", "shapes", "[(1),(1)]"]);
    let by_graph = cli(&["--json", "llt", "graph", r#"{"n":2,"e1":[],"e2":[],"ed":[[1,2]]}"#]);
    assert_eq!(by_shapes, by_graph);
}

#[test]
fn smallest_theorem_case_exits_zero() {
    let out = cli(&["lollipop", "--l", "0", "--m", "2", "--k", "0", "--verify"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("[PASS] theorem"), "{}", out.stdout);
}

#[test]
fn parking_functions_on_three_cars() {
    let v = json(&["--json", "parking", "--m", "3"]);
    assert_eq!(v.as_array().unwrap().len(), 16);
    let text = cli(&["parking", "--m", "3"]).stdout;
    assert!(text.ends_with("16 parking functions\n"));
}

#[test]
fn worked_tree() {
    let v = json(&["--json", "nu", "[[1,3],[1,5],[1,6],[5,2],[5,4]]"]);
    assert_eq!(v["schroder_path"], "ndnnedneee");
    assert_eq!(v["dyck_path"], "nnneenneee");
    assert_eq!(v["diagonal_order"], serde_json::json!([1, 3, 5, 6, 2, 4]));
    assert_eq!(v["parking_function"], serde_json::json!([3, 1, 3, 1, 1]));
    assert_eq!(v["strips"].as_array().unwrap().len(), 4);
}

#[test]
fn strips_of_a_path() {
    let out = cli(&["mu", "ndnnedneee"]);
    assert_eq!(out.code, 0);
    let v = json(&["--json", "mu", "ndnnedneee"]);
    assert_eq!(v["path"], "ndnnedneee");
    assert_eq!(v["graph"]["n"], 6);
}

#[test]
fn spanning_trees_of_a_triangle() {
    let v = json(&["--json", "trees", r#"{"n":3,"e1":[],"e2":[],"ed":[[1,2],[1,3],[2,3]]}"#]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["trees"][0], serde_json::json!([[1, 2], [1, 3]]));
}

#[test]
fn cumulant_with_schur_expansion() {
    let v = json(&["--json", "cumulant", r#"{"n":2,"e1":[],"e2":[],"ed":[[1,2]]}"#, "--schur"]);
    assert_eq!(v["schur"][0]["partition"], serde_json::json!([1, 1]));
    assert_eq!(v["schur"][0]["q_coeffs"], serde_json::json!(["1"]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["verify", "nonsense"]).code, 2);
    assert_eq!(cli(&["llt", "shapes", "[(1,2)]"]).code, 2);
    assert_eq!(cli(&["lollipop", "--l", "0", "--m", "2", "--k", "2"]).code, 2);
    assert_eq!(cli(&["mu", "nndeee"]).code, 2);
    assert_eq!(cli(&["llt", "graph", "/no/such/file.json"]).code, 2);
    // a type-I edge into a weak edge has no symmetric coloring sum
    let skewed = r#"{"n":3,"e1":[[1,2]],"e2":[[2,3]],"ed":[]}"#;
    assert_eq!(cli(&["llt", "graph", skewed]).code, 2);
}

#[test]
fn inexact_division_exits_three() {
    // a type-I edge inside one vertex pair: the numerator is -m2 - m11
    let out = cli(&["--json", "cumulant", r#"{"n":2,"e1":[[1,2]],"e2":[],"ed":[]}"#]);
    assert_eq!(out.code, 3);
    let dump: Value = serde_json::from_str(&out.stderr).unwrap();
    assert!(dump["error"].as_str().unwrap().contains("not divisible"));
}

#[test]
fn help_exits_zero() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("sweep"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["--json", "sweep", "--max-total", "3", "--jobs", "3"];
    let a = cli(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a, cli(&args));
    assert_eq!(a, cli(&["--json", "sweep", "--max-total", "3", "--jobs", "1"]));
    let reports: Vec<Value> = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(reports.len(), 4 * 10);
    assert!(reports.iter().all(|r| r["verdict"] == "holds"));
}

#[test]
fn sweep_example_sizes() {
    let one: Vec<Value> = serde_json::from_str(&cli(&["--json", "sweep", "--max-total", "1"]).stdout).unwrap();
    assert_eq!(one.len(), 4);
    let two: Vec<Value> = serde_json::from_str(&cli(&["--json", "sweep", "--max-total", "2"]).stdout).unwrap();
    assert_eq!(two.len(), 4 * 4);
}

#[test]
fn every_verifier_runs() {
    let cases: &[&[&str]] = &[
        &["verify", "theorem", "--l", "1", "--m", "2", "--k", "0", "--vars", "4"],
        &["verify", "corollary", "--m", "4"],
        &["verify", "corollary", "--max-m", "4"],
        &["verify", "moebius", r#"{"n":3,"e1":[],"e2":[],"ed":[[1,2],[1,3],[2,3]]}"#],
        &["verify", "forest-identity", "--l", "1", "--m", "3", "--k", "1"],
        &["verify", "lemma-3-2", "--trials", "3"],
        &["verify", "lemma-3-2", "--case", "1c", "--trials", "3", "--seed", "9"],
        &["verify", "lemma-4-5", "--max-m", "3"],
        &["verify", "lemma-4-5", "--case", "a", "--path", "nnee"],
        &["verify", "bijections", "--max-schroder", "3", "--max-tree", "4", "--max-parking", "3"],
        &["verify", "schur", "--max-total", "3"],
        &["verify", "forests", "--max-total", "3"],
        &["verify", "consistency", "--max-total", "3", "--random", "5"],
        &["verify", "vanishing", "--max-vertices", "3"],
        &["verify", "cross-representation", "--max-tree", "3", "--max-path", "3"],
        &["lollipop", "--l", "1", "--m", "3", "--k", "1", "--schur"],
        &["lollipop", "--l", "2", "--m", "3", "--k", "1", "--strips"],
        &["lollipop", "--l", "2", "--m", "3", "--k", "1", "--graph"],
    ];
    for args in cases {
        let out = cli(args);
        assert_eq!(out.code, 0, "{args:?}: {}{}", out.stdout, out.stderr);
        assert!(!out.stdout.contains("[FAIL]"), "{args:?}");
    }
}

#[test]
fn inapplicable_path_relation_is_a_usage_error() {
    assert_eq!(cli(&["verify", "lemma-4-5", "--case", "b", "--path", "ne"]).code, 2);
}

#[test]
fn binary_reads_stdin_and_sets_exit_code() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_llt-lab"))
        .args(["--json", "cumulant", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":2,"e1":[],"e2":[],"ed":[[1,2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["terms"][0]["exponents"], serde_json::json!([1, 1]));

    let status = Command::new(env!("CARGO_BIN_EXE_llt-lab"))
        .args(["verify", "nonsense"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}
