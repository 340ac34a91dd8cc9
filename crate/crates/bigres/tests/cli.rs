//! End-to-end checks of the binary: exit codes and JSON output.

use std::process::Command;

fn bigres(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bigres")).args(args).output().expect("binary runs")
}

#[test]
fn resolve_json_round_trips() {
    let out = bigres(&["resolve", "--lambda", "2,1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([2, 1]));
    assert_eq!(v["s2"], serde_json::json!([[3, 3]]));
    assert_eq!(v["s0"].as_array().unwrap().len(), 6);
}

#[test]
fn invalid_partition_exits_1() {
    let out = bigres(&["resolve", "--lambda", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly decreasing"));

    let out = bigres(&["resolve", "--lambda", "0"]);
    assert_eq!(out.status.code(), Some(1));

    // usage errors are invalid input too
    let out = bigres(&["resolve"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_passes_and_reports() {
    let out = bigres(&["verify", "--lambda", "3,1", "--deep", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["prime"], serde_json::json!(1_000_003));
}

#[test]
fn verify_rejects_bad_prime() {
    let out = bigres(&["verify", "--lambda", "2,1", "--prime", "1000004"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));
}

#[test]
fn ledger_json_matches_table() {
    let out = bigres(&["ledger", "--lambda", "6,5,3,1,1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    assert_eq!(entries[0]["corner"], serde_json::json!([4, 6]));
    assert_eq!(entries[5]["v"], serde_json::json!(10));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("bigres-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("res.json");
    let out = bigres(&["romer", "--lambda", "2,1", "--json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_counts_partitions() {
    let out = bigres(&["enumerate", "--max-rows", "4", "--max-width", "4", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 69);
}
