use std::process::{Command, Output};

use serde_json::Value;

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SWAP: &str = r#"{"n":2,"entries":[[1,2,1],[2,1,1]]}"#;
const E12: &str = r#"{"n":2,"entries":[[1,2,1]]}"#;

#[test]
fn coset_length() {
    let out = qschur(&["coset", SWAP]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["length"], 1);
    assert_eq!(v["length_formula"], 1);
}

#[test]
fn hall_counts() {
    let out = qschur(&["hall", "--alpha", "1,0", E12, "--q", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    let brute: Vec<_> = terms[0]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["brute"].as_i64().unwrap())
        .collect();
    assert_eq!(brute, [3, 4]);
}

#[test]
fn mismatched_product_is_zero() {
    let b = r#"{"n":2,"entries":[[1,2,1],[2,2,1]]}"#;
    let a = r#"{"n":2,"entries":[[1,1,2]]}"#;
    let out = qschur(&["schur-mul", b, a]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["terms"].as_array().unwrap().is_empty());
}

#[test]
fn vbln_generator() {
    let x = r#"{"n":2,"terms":[{"matrix":{"n":2,"entries":[]},"j":[0,0],"coeff_num":[[0,1]],"coeff_den":[[0,1]]}]}"#;
    let out = qschur(&[
        "vbln-mul",
        "--generator",
        "plus",
        "--vector",
        "1,0",
        x,
        "--r",
        "2",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["product"]["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["level"], 2);
}

#[test]
fn verify_passes() {
    let out = qschur(&["verify", "--suite", "schur-oracle", "--n", "2", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS schur-oracle"));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["coset", r#"{"n":2"#],
        vec!["hall", "--alpha", "1,0,0", E12],
        vec!["hall", "--alpha", "1,0", E12, "--q", "4"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--n", "1"],
        vec!["reduce", E12, "--j", "0,0", "--lambda", "-1,0"],
    ] {
        let out = qschur(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["reduce", SWAP, "--j", "1,-1", "--lambda", "2,1"];
    let first = qschur(&args);
    assert_eq!(first.status.code(), Some(0));
    for _ in 0..3 {
        assert_eq!(qschur(&args).stdout, first.stdout);
    }
}

#[test]
fn writes_out_file() {
    let path = std::env::temp_dir().join(format!("qschur-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = qschur(&["--out", p, "coset", SWAP]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
    std::fs::remove_file(&path).ok();
}
