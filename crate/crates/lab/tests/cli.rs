use std::process::{Command, Output};

use qdet_core::identitylab::REGISTRY;
use serde_json::Value;

fn qdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdet-lab"))
        .args(args)
        .env_remove("QDETLAB_SEED")
        .env_remove("SOURCE_DATE_EPOCH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_prints_every_id() {
    let o = qdet(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for spec in REGISTRY {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(spec.id)), "{}", spec.id);
    }
}

#[test]
fn explain_shows_recipe_and_slots() {
    let o = qdet(&["explain", "thm_rows"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("recipe:") && text.contains("k-tuple"));
    assert_eq!(qdet(&["explain", "nope"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qdet(&["run", "--check", "no_such_id"]).status.code(), Some(2));
    assert_eq!(qdet(&["run", "--check", "hankel", "--n-min", "4", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(qdet(&["run", "--trials", "0", "--check", "hankel"]).status.code(), Some(2));
    assert_eq!(qdet(&["run", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(qdet(&["frobnicate"]).status.code(), Some(2));
    assert!(!qdet(&["run", "--check", "no_such_id"]).stderr.is_empty());
}

#[test]
fn json_report_has_the_documented_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = qdet(&[
        "run",
        "--check",
        "hankel,r_sum",
        "--n-min",
        "1",
        "--n-max",
        "3",
        "--trials",
        "2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 42);
    assert!(v["version"].is_u64());
    assert!(v["started"].is_null());
    for key in ["pass", "fail", "evidence_pass", "evidence_fail", "skipped"] {
        assert!(v["summary"][key].is_u64(), "{key}");
    }
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 12);
    assert_eq!(v["summary"]["pass"], 12);
    let first = &results[0];
    assert_eq!(first["id"], "hankel");
    assert_eq!(first["n"], 1);
    assert_eq!(first["trial"], 0);
    assert_eq!(first["status"], "pass");
    assert!(first["point"].as_str().unwrap().contains("kappa="));
    let keys: Vec<(i64, &str, i64)> = results
        .iter()
        .map(|r| (r["n"].as_i64().unwrap(), r["id"].as_str().unwrap(), r["trial"].as_i64().unwrap()))
        .collect();
    assert_eq!(keys[5], (3, "hankel", 1));
    assert_eq!(keys[6], (1, "r_sum", 0));
}

#[test]
fn identical_arguments_give_identical_bytes() {
    let args = ["run", "--check", "thm_main_aw,conjecture_mw3", "--n-min", "1", "--n-max", "3", "--format", "json"];
    let a = qdet(&args);
    let b = qdet(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = qdet(&[
        "run",
        "--check",
        "thm_main_aw,conjecture_mw3",
        "--n-min",
        "1",
        "--n-max",
        "3",
        "--format",
        "json",
        "--seed",
        "43",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn seed_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qdet-lab"))
        .args(["run", "--check", "hankel", "--n-min", "1", "--n-max", "1", "--format", "json"])
        .env("QDETLAB_SEED", "99")
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 99);
    assert_eq!(v["started"], "1700000000");
}

#[test]
fn text_and_json_summaries_agree() {
    let base =
        ["run", "--check", "andrews,quadratic_clean,conjecture_mw3", "--n-min", "1", "--n-max", "3", "--trials", "2"];
    let text = stdout(&qdet(&[&base[..], &["--format", "text"]].concat()));
    let json: Value = serde_json::from_slice(&qdet(&[&base[..], &["--format", "json"]].concat()).stdout).unwrap();
    let s = &json["summary"];
    let expected = format!(
        "summary: pass={} fail={} evidence_pass={} evidence_fail={} skipped={}",
        s["pass"], s["fail"], s["evidence_pass"], s["evidence_fail"], s["skipped"]
    );
    assert_eq!(text.lines().last(), Some(expected.as_str()));
    let first = text.lines().next().unwrap();
    assert_eq!(first, "PASS check=andrews n=1 trial=0");
    assert!(text.contains("EVIDENCE-PASS check=conjecture_mw3 n=1 trial=0"));
}

#[test]
fn full_registry_run_succeeds() {
    let o = qdet(&["run", "--check", "all", "--trials", "3", "--seed", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["seed"], 7);
    let ids: std::collections::BTreeSet<&str> =
        v["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), REGISTRY.len());
}
