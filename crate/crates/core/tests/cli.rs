use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn call(args: &[&str], request: &Value) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_projsym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(request.to_string().as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn call_json(request: Value) -> (i32, Value) {
    let (code, text) = call(&[], &request);
    (code, serde_json::from_str(&text).expect("json output"))
}

#[test]
fn symbolize_then_quantize() {
    let (code, out) = call_json(json!({
        "command": "symbolize", "n": 2, "lambda": "formal",
        "payload": {"terms": [{"dx": [2, 0], "coeff": "x1"}]}
    }));
    assert_eq!(code, 0);
    let symbol = out["result"]["symbol"].clone();
    assert_eq!(symbol["terms"][0], json!({"xi": [1, 0], "coeff": "-6/5*l - 2/5"}));
    let (code, out) = call_json(json!({"command": "quantize", "n": 2, "payload": symbol}));
    assert_eq!(code, 0);
    assert_eq!(out["result"]["operator"], json!({"terms": [{"dx": [2, 0], "coeff": "x1"}]}));
}

#[test]
fn flags_override_the_request() {
    let req = json!({"command": "symbolize", "n": 2, "payload": {"terms": [{"dx": [2, 0], "coeff": "x1"}]}});
    let (code, tex) = call(&["--lambda", "1/2", "--format", "latex"], &req);
    assert_eq!(code, 0);
    assert_eq!(tex.trim(), "x^1 \\xi_1^2 - \\xi_1");
    let req = json!({"command": "symbolize", "payload": {"terms": [{"dx": [1], "coeff": "x1"}]}});
    let (code, _) = call(&["--n", "1"], &req);
    assert_eq!(code, 0);
}

#[test]
fn output_is_byte_identical() {
    let req = json!({"command": "extract-gamma", "k": 2, "p": 1, "n": 2});
    let a = call(&[], &req);
    let b = call(&[], &req);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn classification_verbs() {
    let (code, out) = call_json(json!({"command": "solve-sys", "k": 3, "p": 2, "n": 2, "cocycle": false}));
    assert_eq!((code, out["result"]["dimension"].clone()), (0, json!(2)));
    let (_, out) = call_json(json!({"command": "solve-sys", "k": 3, "p": 2, "n": 2, "cocycle": true}));
    assert_eq!(out["result"]["dimension"], json!(1));
    let (code, out) = call_json(json!({"command": "cocycle", "n": 2, "k": 3, "payload": {"name": "c2", "check": true}}));
    assert_eq!((code, out["result"]["passed"].clone()), (0, json!(true)));
    let (_, out) = call_json(json!({
        "command": "cocycle", "n": 2,
        "payload": {"name": "gamma_bar", "field": {"components": ["x1^2", "0"]}}
    }));
    let entries = out["result"]["tensor"].as_array().unwrap();
    assert!(entries.contains(&json!({"upper": 1, "lower": [1, 1], "coeff": "2/3"})));
    assert!(entries.contains(&json!({"upper": 2, "lower": [1, 2], "coeff": "-2/3"})));
    assert_eq!(entries.len(), 3);
}

#[test]
fn applications() {
    let (code, out) = call_json(json!({
        "command": "geodesic", "n": 2,
        "payload": {"terms": [{"xi": [2, 0], "coeff": "1"}, {"xi": [0, 2], "coeff": "1 + x2^2"}]}
    }));
    assert_eq!(code, 0);
    let terms = out["result"]["operator"]["terms"].as_array().unwrap().clone();
    assert_eq!(terms[0], json!({"dx": [0, 0], "coeff": "3/8"}));
    assert_eq!(terms[1], json!({"dx": [0, 1], "coeff": "2*x2"}));

    let (code, out) = call_json(json!({
        "command": "star", "n": 1,
        "payload": {"f": {"terms": [{"xi": [1], "coeff": "1"}]}, "g": {"terms": [{"xi": [0], "coeff": "x1"}]}}
    }));
    assert_eq!(code, 0);
    let grades = out["result"]["grades"].as_array().unwrap();
    assert_eq!(grades[0]["terms"][0], json!({"xi": [1], "coeff": "x1"}));

    let (code, _) = call_json(json!({
        "command": "intertwine", "n": 1,
        "payload": {"operator": {"terms": [{"dx": [1], "coeff": "x1^2"}]}, "from": "1/3", "to": "2/5"}
    }));
    assert_eq!(code, 0);
    let (code, out) = call_json(json!({
        "command": "intertwine", "n": 1,
        "payload": {"operator": {"terms": [{"dx": [1], "coeff": "1"}]}, "from": "1/2", "to": "2/5"}
    }));
    assert_eq!(code, 3);
    assert_eq!(out["error"]["kind"], json!("precondition"));
}

#[test]
fn one_dimensional_verbs() {
    let (code, out) = call_json(json!({
        "command": "transvectant", "m": 2,
        "payload": {"phi": {"coeff": "x1", "weight": "1"}, "psi": {"coeff": "x1", "weight": "1"}}
    }));
    assert_eq!(code, 0);
    assert_eq!(out["result"], json!({"coeff": "-18", "weight": "4"}));
    let (code, out) = call_json(json!({"command": "extract-t", "k": 2, "j": 2}));
    assert_eq!(code, 0);
    assert_eq!(out["result"]["t"], json!("2/3*l^2 - 2/3*l"));
    let (code, out) = call_json(json!({"command": "extract-t", "k": 2, "j": 3}));
    assert_eq!((code, out["ok"].clone()), (3, json!(false)));
}

#[test]
fn usage_errors() {
    let (code, out) = call_json(json!({"command": "frobnicate"}));
    assert_eq!((code, out["error"]["kind"].clone()), (2, json!("usage")));
    let (code, _) = call_json(json!({"command": "symbolize", "n": 2, "payload": {"terms": [{"dx": [1, 0], "coeff": "l"}]}}));
    assert_eq!(code, 2);
    let (code, _) = call_json(json!({"command": "solve-sys", "p": 1, "n": 2}));
    assert_eq!(code, 2);
}
