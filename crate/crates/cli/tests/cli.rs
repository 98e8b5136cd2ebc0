use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projquant"))
        .args(args)
        .env_remove("PROJQUANT_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn resonances_of_the_standard_plane() {
    assert_eq!(json(&["resonances", "--m", "2", "--diagram", "1", "--n", "0"]), serde_json::json!(["1"]));
    assert_eq!(
        json(&["resonances", "--m", "2", "--diagram", "2", "--base", "1/3"]),
        serde_json::json!(["1", "4/3"])
    );
}

#[test]
fn branch_of_the_standard_representation() {
    let v = json(&["branch", "--m", "3", "--diagram", "1"]);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[0]["label"], "D=1; m=3; n=0; delta=0");
    assert_eq!(comps[1]["label"], "D=0; m=3; n=0; delta=0");
}

#[test]
fn resonant_quantization_exits_with_diagnostic() {
    let out = run(&["quantize", "--m", "2", "-k", "1", "--lambda", "0", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "resonant_weight");
    assert_eq!(v["delta"], "1");
    assert_eq!(v["denominator"], "delta - 1");
}

#[test]
fn quantization_coefficients() {
    // c_1 = −λ/(δ − 1)
    assert_eq!(
        json(&["quantize", "--m", "2", "-k", "1", "--lambda", "2", "--mu", "5/2"]),
        serde_json::json!(["1", "4"])
    );
    let v = json(&["quantize", "--m", "2", "-k", "2", "--lambda", "-1/3", "--mu", "0", "--symbolic"]);
    assert_eq!(v["singular_weights"], serde_json::json!(["4/3", "5/3"]));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["resonances", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["resonances", "--m", "2", "--diagram", "1", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["eigenvalue", "--m", "2", "--diagram", "2,3"]).status.code(), Some(2));
    assert_eq!(run(&["quantize", "--m", "2", "-k", "1", "--lambda", "0.5", "--mu", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["casimir-check", "--m", "2", "--diagram", "2", "--delta", "1/2", "--trials", "2", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["matches"], 2);
}

#[test]
fn emitted_labels_parse_back() {
    let v = json(&["branch", "--m", "2", "--diagram", "3,1", "--n", "-1", "--delta", "2/5"]);
    for comp in v["components"].as_array().unwrap() {
        let label = comp["label"].as_str().unwrap();
        let again = json(&["eigenvalue", "--label", label]);
        assert_eq!(again["label"], label);
    }
    let d = json(&["decompose", "--v1", "D=1; m=3", "--v2", "D=2; m=3; delta=1/2", "-k", "1"]);
    for term in d.as_array().unwrap() {
        let label = term["label"].as_str().unwrap();
        assert_eq!(json(&["lift-plan", "--label", label])["label"], label);
    }
}

#[test]
fn table_format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_projquant"))
        .args(["lift-plan", "--m", "2", "--diagram", "2", "--delta", "0"])
        .env("PROJQUANT_FORMAT", "table")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("coefficient"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
