//! Contract tests for the command-line front end: schemas, exit codes, and
//! seed determinism, driving the real binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_steinberg-rsk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

#[test]
fn map_emits_a_triple() {
    let out = run(&["map", "--seed", "1"], r#"{"p":1,"q":1,"ones":[]}"#);
    let doc = stdout_json(&out);
    assert_eq!(doc["diagram"]["render"][0], "+-");
    assert_eq!(doc["q_tab"]["chain"], serde_json::json!([[1]]));
}

#[test]
fn map_unmap_round_trip() {
    let input = r#"{"p":2,"q":2,"ones":[[1,1],[2,2]]}"#;
    let mapped = run(&["map", "--seed", "7"], input);
    let triple = String::from_utf8(stdout_json(&mapped).to_string().into_bytes()).unwrap();
    let back = run(&["unmap", "--seed", "7"], &triple);
    let doc = stdout_json(&back);
    assert_eq!(doc["ones"], serde_json::json!([[1, 1], [2, 2]]));
}

#[test]
fn census_reports_the_identity() {
    let out = run(&["census", "--p", "2", "--q", "2", "--seed", "5"], "");
    let doc = stdout_json(&out);
    assert_eq!(doc["pp_count"], 7);
    assert_eq!(doc["identity_holds"], true);
}

#[test]
fn tauhat_matches_the_formula() {
    let out = run(&["tauhat"], r#"{"p":2,"q":2,"ones":[]}"#);
    let doc = stdout_json(&out);
    assert_eq!(
        doc["entries"],
        serde_json::json!([[1, 1, 0], [0, 0, 1], [0, 0, 1]])
    );
}

#[test]
fn duplicate_cell_is_an_input_error() {
    let out = run(&["map"], r#"{"p":1,"q":1,"ones":[[1,1],[1,1]]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn malformed_json_is_an_input_error() {
    let out = run(&["map"], "{");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strict_mode_requires_a_seed_with_trials() {
    let out = run(&["map", "--strict", "--trials", "7"], r#"{"p":1,"q":1}"#);
    assert_eq!(out.status.code(), Some(2));
    let out = run(
        &["map", "--strict", "--trials", "7", "--seed", "1"],
        r#"{"p":1,"q":1,"ones":[]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seeded_runs_are_reproducible() {
    let input = r#"{"rows":3,"cols":3,"entries":[[1,1,0],[0,0,1],[0,0,1]]}"#;
    let a = run(&["rsk", "--seed", "11", "--trials", "5"], input);
    let b = run(&["rsk", "--seed", "11", "--trials", "5"], input);
    assert_eq!(stdout_json(&a), stdout_json(&b));
    let doc = stdout_json(&a);
    assert_eq!(doc["q"]["chain"], serde_json::json!([[1], [1, 1], [2, 2]]));
    assert_eq!(
        doc["p"]["chain"],
        serde_json::json!([[1, 1], [2, 1], [2, 2]])
    );
}

#[test]
fn verify_small_passes() {
    let out = run(
        &["verify", "--pmax", "2", "--qmax", "2", "--seed", "3"],
        "",
    );
    let doc = stdout_json(&out);
    assert_eq!(doc["all_ok"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_is_byte_reproducible_for_a_fixed_seed() {
    let args = ["verify", "--pmax", "1", "--qmax", "1", "--seed", "9"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn poset_signature_one_one() {
    let out = run(&["poset", "--q", "1", "--p", "1"], "");
    let doc = stdout_json(&out);
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 3);
    // the two-row diagram is below both one-row diagrams
    assert_eq!(doc["edges"], serde_json::json!([[1, 0], [1, 2]]));
}

#[test]
fn enum_subcommands_count() {
    let out = run(&["enum-pp", "--p", "2", "--q", "3"], "");
    assert_eq!(stdout_json(&out)["count"], 13);
    let out = run(&["enum-syd", "--q", "2", "--p", "2", "--admissible"], "");
    assert_eq!(stdout_json(&out)["count"], 7);
}

#[test]
fn input_file_flag_reads_a_file() {
    let dir = std::env::temp_dir().join("steinberg-rsk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("input.json");
    std::fs::write(&path, r#"{"p":1,"q":1,"ones":[[1,1]]}"#).unwrap();
    let out = run(&["tauhat", "--in", path.to_str().unwrap()], "");
    let doc = stdout_json(&out);
    assert_eq!(doc["entries"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn rect_requires_a_valid_index() {
    let out = run(
        &["rect", "--index", "9"],
        r#"{"chain":[[1,1],[2,1],[2,2]]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rsk_accepts_csv_rows() {
    let csv = "1,1,0\n0,0,1\n0,0,1\n";
    let out = run(&["rsk", "--seed", "2"], csv);
    let doc = stdout_json(&out);
    assert_eq!(doc["q"]["chain"], serde_json::json!([[1], [1, 1], [2, 2]]));
}

#[test]
fn field_prime_env_override() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_steinberg-rsk"))
        .args(["census", "--p", "1", "--q", "1", "--seed", "4"])
        .env("STEINBERG_RSK_PRIME", "104729")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout_json(&out)["identity_holds"], true);

    let mut child = Command::new(env!("CARGO_BIN_EXE_steinberg-rsk"))
        .args(["census", "--p", "1", "--q", "1"])
        .env("STEINBERG_RSK_PRIME", "91")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
