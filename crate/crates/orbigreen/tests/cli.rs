use std::process::{Command, Output};

use orbigreen::io::DiagramDocument;
use orbigreen::{build_diagram, OrbifoldParams};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbigreen")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_file() -> String {
    format!("{}/tests/data/golden.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn build_dot_torus() {
    let o = run(&["build", "-n", "1", "-p", "2", "-q", "1", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    let nodes = dot.lines().filter(|l| l.ends_with(';') && !l.contains("->")).count();
    assert_eq!(nodes, 8);
    assert!(dot.contains("\"f_1\" -> \"f_2\" [label=\"4\"];"));
}

#[test]
fn build_frozen_dot_boxes_companions() {
    let o = run(&["build", "-n", "1", "-p", "2", "-q", "1", "--format", "dot", "--frozen"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches("shape=box").count(), 8);
    assert_eq!(dot.matches("fillcolor=green").count(), 8);
}

#[test]
fn build_rejects_once_punctured() {
    let o = run(&["build", "-n", "0", "-p", "1", "-q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PunctureOne"));
}

#[test]
fn build_json_reloads_identically() {
    let o = run(&["build", "-n", "1", "-p", "2", "-q", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = DiagramDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.to_matrix().unwrap(), build_diagram(OrbifoldParams::new(1, 2, 1)).unwrap());
}

#[test]
fn malformed_flags_exit_one() {
    assert_eq!(run(&["build", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["build", "-n", "x"]).status.code(), Some(1));
    assert_eq!(run(&["build", "-n", "1"]).status.code(), Some(1));
}

#[test]
fn sequence_listing() {
    let o = run(&["sequence", "-n", "1", "-p", "2", "-q", "1"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 22);
    assert_eq!(lines[..5], ["h_2", "h_1", "m_1", "h_2", "g_1"]);
}

#[test]
fn sequence_annotated() {
    let o = run(&["sequence", "-n", "1", "-p", "2", "-q", "1", "--annotate"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 22);
    assert!(text.lines().next().unwrap().starts_with("h_2\t"));
    assert!(text.contains("step 2"));
    assert!(text.contains("step 4(a)"));
}

#[test]
fn sequence_rejects_once_punctured() {
    assert_eq!(run(&["sequence", "-n", "9", "-p", "1", "-q", "1"]).status.code(), Some(2));
}

#[test]
fn verify_genus_two() {
    let o = run(&["verify", "-n", "2", "-p", "3", "-q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Valid, 0 violations"));
    assert!(text.contains("final C = −permutation"));
}

#[test]
fn verify_superscript_trace() {
    let o = run(&["verify", "-n", "1", "-p", "2", "-q", "1", "--trace", "superscript"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let steps: Vec<&str> = text.lines().filter(|l| l.contains(" μ_")).collect();
    assert_eq!(steps.len(), 22);
    assert!(steps[0].starts_with("1 μ_h_2 | g_1: green {g_1,2h_2}"));
    assert!(steps[0].contains("m_1: green {m_1,h_2}"));
}

#[test]
fn verify_matrix_trace_has_start_line() {
    let o = run(&["verify", "-n", "1", "-p", "2", "-q", "1", "--trace", "matrix"]);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("0 start | g_1: [1,0,0,0,0,0,0,0]"));
}

#[test]
fn verify_checkpoints() {
    let o = run(&["verify", "-n", "2", "-p", "3", "-q", "1", "--checkpoints"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches(": ok").count(), 2);
}

#[test]
fn verify_custom_input_with_sequence() {
    let f = golden_file();
    let ok = run(&["verify", "--input", &f, "--sequence", "b,a,c,b"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["verify", "--input", &f, "--sequence", "b,a,b"]);
    assert_eq!(bad.status.code(), Some(5));
    assert!(stdout(&bad).starts_with("NotGreenAt(3)"));
}

#[test]
fn verify_corrupted_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"version\": \"orbigreen-diagram/1\", \"vertices\": [").unwrap();
    let o = run(&["verify", "--input", path.to_str().unwrap(), "--sequence", "a"]);
    assert_eq!(o.status.code(), Some(1));
    let missing = run(&["verify", "--input", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn verify_json_round_trip_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let o = run(&["build", "-n", "1", "-p", "3", "-q", "2"]);
    std::fs::write(&path, o.stdout).unwrap();
    // the document carries its parameters, so Δ is implied
    assert_eq!(run(&["verify", "--input", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn verify_grid_reports_the_sphere_band() {
    let o = run(&["verify", "--grid"]);
    assert_eq!(o.status.code(), Some(5));
    let text = stdout(&o);
    assert!(text.contains("(0,2,3) NotGreenAt(11)"));
    assert!(text.ends_with("118 points, 1 failed\n"));
    let amended = run(&["verify", "--grid", "--amended"]);
    assert_eq!(amended.status.code(), Some(0));
}

#[test]
fn search_golden_file() {
    let o = run(&["search", "--input", &golden_file(), "--max-depth", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim().split(',').count(), 4);
}

#[test]
fn search_depth_zero_is_exhausted() {
    let o = run(&["search", "--input", &golden_file(), "--max-depth", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_tiny_budget() {
    let o = run(&["search", "-n", "1", "-p", "4", "-q", "2", "--max-states", "10", "--any"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["search", "-n", "1", "-p", "4", "-q", "2", "--max-states", "10"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn search_all_lists_sorted_sequences() {
    let o = run(&["search", "--input", &golden_file(), "--max-depth", "4", "--all"]);
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert!(lines.contains(&"(b,a,c,b)"));
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    let big = run(&["search", "-n", "1", "-p", "2", "-q", "1", "--all"]);
    assert_eq!(big.status.code(), Some(1));
}
