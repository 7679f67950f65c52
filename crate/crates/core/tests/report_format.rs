use std::collections::BTreeSet;
use std::process::Command;

use serde_json::Value;
use toric_diagonal::report::{run, RunOptions, SCHEMA_VERSION};

fn schema() -> Value {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

#[test]
fn report_matches_versioned_schema() {
    let schema = schema();
    assert_eq!(schema["properties"]["schema_version"]["const"], SCHEMA_VERSION);
    for timing in [false, true] {
        let report = run("no-lift", &RunOptions { timing, ..RunOptions::default() }).unwrap();
        let json: Value = serde_json::from_str(&report.to_json()).unwrap();
        let allowed = keys(&schema["properties"]);
        assert!(keys(&json).is_subset(&allowed));
        let case_allowed = keys(&schema["properties"]["cases"]["items"]["properties"]);
        for case in json["cases"].as_array().unwrap() {
            assert!(keys(case).is_subset(&case_allowed));
            assert_eq!(json.get("elapsed_ms").is_some(), timing);
        }
    }
}

#[test]
fn markdown_lists_every_case() {
    let report = run("invariant", &RunOptions::default()).unwrap();
    let md = report.to_markdown();
    for c in &report.cases {
        assert!(md.contains(&c.claim_id));
    }
}

fn verify(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toric-verify")).args(args).output().unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_exit_codes() {
    let (code, stdout) = verify(&["--suite", "no-lift", "--seed", "3"]);
    assert_eq!(code, Some(0));
    let json: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["seed"], 3);
    assert_eq!(verify(&["--suite", "nonsense"]).0, Some(2));
    assert_eq!(verify(&["--box-size", "0"]).0, Some(2));
    assert_eq!(verify(&["--samples", "0"]).0, Some(2));
    let (code, stdout) = verify(&["--suite", "groupoid", "--format", "markdown"]);
    assert_eq!(code, Some(0));
    assert!(stdout.starts_with("# Verification report"));
}

#[test]
fn exhausted_budget_skips_cases() {
    let (code, stdout) = verify(&["--suite", "ltqo", "--time-budget", "0"]);
    assert_eq!(code, Some(1));
    let json: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["summary"]["pass"], 0);
}
