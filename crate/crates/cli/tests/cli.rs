use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn polyperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyperm"))
        .args(args)
        .env_remove("POLYPERM_GATE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = polyperm(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema_for(def: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/polyperm.schema.json");
    let mut schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let obj = schema.as_object_mut().unwrap();
    obj.remove("oneOf");
    obj.insert("$ref".into(), Value::String(format!("#/$defs/{def}")));
    jsonschema::JSONSchema::compile(&schema).expect("schema compiles")
}

fn assert_valid(def: &str, value: &Value) {
    let schema = schema_for(def);
    let msgs: Vec<String> = match schema.validate(value) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect(),
    };
    panic!("{def} invalid: {msgs:#?}");
}

#[test]
fn analyze_z4_text() {
    let out = polyperm(&["analyze", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("|Pgr(Z/4)| = 8"));
    assert!(text.contains("recognition: D4"));
}

#[test]
fn analyze_json_orders_and_schema() {
    for (n, order) in [
        ("4", "8"),
        ("8", "128"),
        ("9", "1296"),
        ("6", "12"),
        ("16", "8192"),
    ] {
        let v = json(&["analyze", n, "--json"]);
        assert_eq!(v["order"], order, "n = {n}");
        assert_valid("GroupReport", &v);
    }
    let v = json(&["analyze", "9", "--json"]);
    assert_eq!(v["order_method"], "formula");
    assert_eq!(v["factors"][0]["cross_checks"][0]["method"], "enumeration");
    assert_eq!(v["factors"][0]["cross_checks"][0]["agrees"], true);
    assert_eq!(
        json(&["analyze", "8", "--json"])["order_method"],
        "enumeration"
    );
}

#[test]
fn analyze_gated_is_partial_success() {
    let v = json(&["analyze", "32", "--json"]);
    assert!(v["order"].is_null());
    assert!(!v["not_computed"].as_array().unwrap().is_empty());
    assert_valid("GroupReport", &v);
}

#[test]
fn gate_override_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_polyperm"))
        .args(["analyze", "16", "--json"])
        .env("POLYPERM_GATE", "1000")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["order"].is_null());
}

#[test]
fn invalid_n_is_usage_error() {
    assert_eq!(polyperm(&["analyze", "1"]).status.code(), Some(2));
    assert_eq!(polyperm(&["analyze", "abc"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "counting", "--json"]);
    assert_eq!(v["pass"], true);
    assert_valid("SuiteReport", &v);
    let out = polyperm(&["verify", "p2-structure"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for p in ["p=2", "p=3", "p=5"] {
        assert!(text.contains(p), "{text}");
    }
    assert_eq!(polyperm(&["verify", "unknown-name"]).status.code(), Some(2));
}

#[test]
fn atlas_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("atlas.csv");
    let out = polyperm(&["atlas", "10", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines[0], "n,order,method,factorization");
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"6,12,product,2*3"));
    assert!(lines.contains(&"10,240,product,2*5"));
    assert!(lines.contains(&"4,8,formula,2^2"));

    let js = dir.path().join("atlas.json");
    let out = polyperm(&[
        "atlas",
        "40",
        "--out",
        js.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_valid("Atlas", &v);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 39);
    assert!(arr
        .windows(2)
        .all(|w| w[0]["n"].as_u64() < w[1]["n"].as_u64()));
    assert!(arr.iter().any(|r| r["n"] == 32 && r["order"].is_null()));

    assert_eq!(
        polyperm(&["atlas", "1", "--out", csv.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let bad = dir.path().join("missing/dir/atlas.csv");
    assert_eq!(
        polyperm(&["atlas", "4", "--out", bad.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = polyperm(&[
            "atlas",
            "64",
            "--out",
            path.to_str().unwrap(),
            "--format",
            "json",
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    for n in ["8", "12", "27", "36"] {
        let first = polyperm(&["analyze", n, "--json"]).stdout;
        let second = polyperm(&["analyze", n, "--json"]).stdout;
        assert_eq!(first, second, "analyze {n}");
    }
}

#[test]
fn threads_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_polyperm"))
        .args(["analyze", "9"])
        .env("POLYPERM_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_polyperm"))
        .args(["analyze", "9"])
        .env("POLYPERM_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pfb_command() {
    assert_eq!(stdout(&polyperm(&["pfb", "27"])).trim(), "pfb(Z/27) <= 20");
    assert_eq!(stdout(&polyperm(&["pfb", "8"])).trim(), "pfb(Z/8) <= 4");
}

#[test]
fn rivest_command() {
    let out = polyperm(&["rivest", "x^2+x", "--modulus", "8"]);
    assert!(stdout(&out).contains("not a permutation polynomial"));
    let out = polyperm(&["rivest", "2x^2+x", "--modulus", "8"]);
    assert!(stdout(&out).contains(": permutation polynomial"));
    assert_eq!(
        polyperm(&["rivest", "x", "--modulus", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn fractal_command() {
    let v = json(&["fractal", "3", "3", "--json"]);
    assert_eq!(v["pgr_order"], "25509168");
    assert_eq!(v["fpg_order"], "13060694016");
    assert_eq!(v["proper"], true);
    assert_eq!(v["method"]["fpg"], "recursion");
    assert_valid("FractalReport", &v);
    let v = json(&["fractal", "2", "3", "--json"]);
    assert_eq!(v["proper"], false);
    assert_eq!(v["method"]["fpg"], "scan");
}

#[test]
fn is_poly_command() {
    let z27 = "(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)";
    let out = polyperm(&["is-poly", "3", "3", "--perm", z27]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("not a polynomial function"));
    let out = polyperm(&["is-poly", "2", "2", "--perm", "(1,3)"]);
    assert_eq!(stdout(&out).trim(), "polynomial: 3x");
    assert_eq!(
        polyperm(&["is-poly", "2", "2", "--perm", "(1,1)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        polyperm(&["is-poly", "4", "2", "--perm", "(1,3)"])
            .status
            .code(),
        Some(2)
    );
}
