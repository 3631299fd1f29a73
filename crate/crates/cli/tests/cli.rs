//! End-to-end tests of the binary: exit codes, piping, and byte-level
//! agreement between the CLI output and in-process analysis.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sdlat"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn validate_good_and_bad_files() {
    let good = r#"{"n": 5, "covers": [[0,1],[1,2],[2,4],[0,3],[3,4]]}"#;
    let out = run_with_stdin(&["validate", "-"], good);
    assert!(out.status.success());

    let bad = r#"{"n": 5, "covers": [[0,1],[1,2],[2,4],[0,3],[3,4]], "junk": true}"#;
    let out = run_with_stdin(&["validate", "-"], bad);
    assert_eq!(out.status.code(), Some(3));

    let not_a_lattice = r#"{"n": 6, "covers": [[0,3],[0,4],[1,4],[1,5],[2,5],[2,3]]}"#;
    let out = run_with_stdin(&["validate", "-"], not_a_lattice);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_pipeline_matches_in_process_analysis() {
    let catalog_json = stdout_of(&["catalog", "get", "crowned-w"]);
    let out = run_with_stdin(&["--json", "analyze", "-"], &catalog_json);
    assert!(out.status.success());
    let piped = String::from_utf8(out.stdout).unwrap();

    let lattice = sdlat::construct::catalog("crowned-w").unwrap().lattice;
    let report = sdlat::analysis::analyze(&lattice);
    let direct = serde_json::to_string(&report).unwrap();
    assert_eq!(piped.trim_end(), direct);

    // The crowned lattice satisfies (W) and fails SD.
    let parsed: serde_json::Value = serde_json::from_str(piped.trim_end()).unwrap();
    assert_eq!(parsed["whitman"]["holds"], true);
    assert_eq!(parsed["sd_join"]["holds"], false);
}

#[test]
fn analyze_snake_claims() {
    let snake_json = stdout_of(&["snake", "0"]);
    let out = run_with_stdin(&["--json", "analyze", "-"], &snake_json);
    let parsed: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim_end()).unwrap();
    assert_eq!(parsed["sd_join"]["holds"], true);
    assert_eq!(parsed["sd_meet"]["holds"], true);
    assert_eq!(parsed["whitman"]["holds"], true);
    assert_eq!(parsed["dismantlable"], true);
    assert_eq!(parsed["planar"], false);
    assert_eq!(parsed["breadth"], 2);
}

#[test]
fn dot_has_one_edge_per_cover() {
    let pentagon = r#"{"n": 5, "covers": [[0,1],[1,2],[2,4],[0,3],[3,4]]}"#;
    let out = run_with_stdin(&["dot", "-"], pentagon);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 5);
    assert!(dot.starts_with("graph lattice {"));
    let opens = dot.matches('{').count();
    assert_eq!(opens, dot.matches('}').count());
}

#[test]
fn fl_commands() {
    assert_eq!(stdout_of(&["fl", "leq", "x", "x+y"]).trim_end(), "true");
    assert_eq!(stdout_of(&["fl", "leq", "x+y", "x"]).trim_end(), "false");
    assert_eq!(stdout_of(&["fl", "canon", "(x+y)+x"]).trim_end(), "x + y");
    assert_eq!(stdout_of(&["fl", "canon", "x(x+y)"]).trim_end(), "x");
    let out = bin().args(["fl", "leq", "x", "x ++ y"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = bin().args(["fl", "verify-s0"]).output().unwrap();
    assert!(out.status.success());
}

#[test]
fn double_produces_a_bigger_lattice() {
    let chain3 = r#"{"n": 3, "covers": [[0,1],[1,2]]}"#;
    let out = run_with_stdin(&["double", "-", "--interval", "1,1"], chain3);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim_end()).unwrap();
    assert_eq!(parsed["n"], 4);

    let out = run_with_stdin(&["double", "-", "--interval", "2,1"], chain3);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn enumerate_counts() {
    let lines = stdout_of(&["--json", "enumerate", "5"]);
    assert_eq!(lines.trim_end().lines().count(), 5);
    let out = bin().args(["enumerate", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_round_trip_validates() {
    for name in ["stage1", "stage2", "stage3", "crowned-w", "s0", "s1"] {
        let json = stdout_of(&["catalog", "get", name]);
        let out = run_with_stdin(&["validate", "-"], &json);
        assert!(out.status.success(), "catalog {name} must validate");
    }
    let out = bin().args(["catalog", "get", "missing"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn minimal_pairs_serialization_shape() {
    let catalog_json = stdout_of(&["catalog", "get", "crowned-w"]);
    let out = run_with_stdin(&["--json", "crowned", "-"], &catalog_json);
    let parsed: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim_end()).unwrap();
    let cycles = parsed.as_array().unwrap();
    assert!(!cycles.is_empty());
    for cy in cycles {
        assert!(cy["pairs"].is_array());
        assert!(cy["pairs"][0]["p"].is_number());
        assert!(cy["pairs"][0]["J"].is_array());
        assert!(cy["forms"].is_array());
        assert_eq!(cy["fruitful_count"], 0);
        assert_eq!(cy["crowned"], true);
    }
}

#[test]
fn lemma_suite_smoke() {
    let out = bin().args(["check", "lemmas", "--max-size", "5"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("[PASS]").count(), 8);
    assert_eq!(text.matches("[FAIL]").count(), 0);
}

#[test]
fn kappa_and_cycles_commands() {
    let pentagon = r#"{"n": 5, "covers": [[0,1],[1,2],[2,4],[0,3],[3,4]]}"#;
    let out = run_with_stdin(&["kappa", "-"], pentagon);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kappa(1) = 3"));
    assert!(text.contains("complete: true"));

    let out = run_with_stdin(&["cycles", "-"], pentagon);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("no C-cycles"));

    // M3 is not semidistributive; the cycle digraph is undefined.
    let m3 = r#"{"n": 5, "covers": [[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]]}"#;
    let out = run_with_stdin(&["cycles", "-"], m3);
    assert_eq!(out.status.code(), Some(3));
}
