//! Exit-code and determinism contracts of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewring"))
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_c4_exits_zero_with_all_true() {
    let out = run(&["analyze", &data("c4.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("simple_oracle"));
    assert!(!text.contains("false"));
}

#[test]
fn analyze_broken_instance_exits_two_with_witness() {
    let out = run(&["analyze", &data("c4_broken.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("composition axiom"));
}

#[test]
fn analyze_trivial_action_reports_false_but_agrees() {
    let out = run(&["analyze", &data("c2_trivial.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("g_simple"));
    assert!(text.contains("false"));
}

#[test]
fn validate_distinguishes_good_and_bad() {
    assert_eq!(run(&["validate", &data("c4.json")]).status.code(), Some(0));
    assert_eq!(run(&["validate", &data("c4_broken.json")]).status.code(), Some(2));
}

#[test]
fn leavitt_construct_rejects_cycles() {
    let out = run(&["leavitt", &data("loop.graph"), "--construct"]);
    assert_eq!(out.status.code(), Some(2));
    // Without --construct the criterion is still reported and exits 0.
    let plain = run(&["leavitt", &data("loop.graph")]);
    assert_eq!(plain.status.code(), Some(0));
    assert!(stdout(&plain).contains("condition_l"));
}

#[test]
fn leavitt_constructs_acyclic_graph() {
    let out = run(&["leavitt", &data("a2.graph"), "--construct", "--field", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ring_dimension: 4"));
}

#[test]
fn leavitt_loop_with_exit_satisfies_condition_l() {
    let out = run(&["leavitt", &data("loop_exit.graph")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("condition_l"));
    assert!(!text.contains("exitless"));
}

#[test]
fn dynamics_on_swap_action() {
    let out = run(&["dynamics", &data("c2_swap.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("topologically_free"));
    assert!(text.contains("free_and_minimal_iff_simple"));
}

#[test]
fn fuzz_is_deterministic_per_seed() {
    let args = ["fuzz", "--seed", "9", "--count", "25", "--group", "c3", "--max-carrier", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b), "same seed must give byte-identical summaries");
    let json = run(&["fuzz", "--seed", "9", "--count", "25", "--group", "c3", "--max-carrier", "3", "--json"]);
    let json2 = run(&["fuzz", "--seed", "9", "--count", "25", "--group", "c3", "--max-carrier", "3", "--json"]);
    assert_eq!(stdout(&json), stdout(&json2));
}

#[test]
fn fuzz_count_zero_is_empty_and_green() {
    let out = run(&["fuzz", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass=0 skip=0 fail=0"));
}

#[test]
fn json_report_round_trips_the_instance() {
    let out = run(&["analyze", &data("c4.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let instance = value.get("instance_data").expect("embedded instance").clone();
    let file: skewring::format::InstanceFile = serde_json::from_value(instance).unwrap();
    let (field, action) = file.build().unwrap();
    assert_eq!(field.modulus(), 2);
    assert!(action.validate().is_valid());
    assert!(action.is_g_simple());
}

#[test]
fn tight_budget_skips_oracles_without_failing() {
    let out = run(&["analyze", &data("c4.json"), "--budget", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("skipped"));
}

#[test]
fn timings_go_to_stderr_only() {
    let plain = run(&["analyze", &data("c4.json")]);
    let timed = run(&["analyze", &data("c4.json"), "--timings"]);
    assert_eq!(stdout(&plain), stdout(&timed), "stdout must stay canonical");
    let err = String::from_utf8_lossy(&timed.stderr).into_owned();
    assert!(err.contains("timing simple_oracle"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}
