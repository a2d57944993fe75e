use std::process::{Command, Output};

use cremona_cli::{run_command, Command as Cmd, Format};
use cremona_core::JonqElement;
use serde_json::Value;

fn cremona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_conjugation_example() {
    let out = cremona(&["eval", "m(X)*a(1)*m(X)^-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "alpha(X)\n(t, g, f) = (0, 1, X)\n");
}

#[test]
fn eval_json_is_compact_schema_with_sorted_keys() {
    let report = run_command(&Cmd::Eval { word: "a(X)".into() }).unwrap();
    let value = &report.json["value"];
    assert_eq!(
        value.to_string(),
        r#"{"f":{"den":["1"],"num":["0","1"]},"g":{"den":["1"],"num":["1"]},"t":"0"}"#
    );
    let back = JonqElement::from_json(value).unwrap();
    assert_eq!(back.to_string(), "alpha(X)");
}

#[test]
fn gamma_certify_three() {
    let out = cremona(&["--format", "json", "gamma-certify", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let docs: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let classes: Vec<u64> = docs.as_array().unwrap().iter().map(|d| d["claimed_class"].as_u64().unwrap()).collect();
    assert_eq!(classes, [2, 3, 4]);
    assert!(docs.as_array().unwrap().iter().all(|d| d["kind"] == "class"));
}

#[test]
fn class_text_shows_witness_identities() {
    let report = run_command(&Cmd::GammaCertify { n: 2, seed: 42, trials: 10 }).unwrap();
    let text = report.render(Format::Text);
    assert!(text.contains("witness: alpha(2)"));
    assert!(text.contains("[s(1),[s(1),a(X^2)]] = alpha(2)"));
}

#[test]
fn order_and_commutator() {
    assert_eq!(stdout(&cremona(&["order", "m(-1)"])), "mu(-1)\norder: 2\n");
    assert!(stdout(&cremona(&["order", "s(1)*a(X)"])).ends_with("order: infinite\n"));
    let out = cremona(&["commutator", "s(1)", "a(X)"]);
    assert!(stdout(&out).contains("alpha(-1)"));
}

#[test]
fn heisenberg_json_and_unsupported_prime() {
    let out = cremona(&["--format", "json", "heisenberg", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["num_classes"], 29);
    assert_eq!(v["birkhoff_min_dim"], 5);
    assert_eq!(cremona(&["heisenberg", "11"]).status.code(), Some(2));
}

#[test]
fn elem_linearize_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.txt");
    std::fs::write(&path, "# shear and translation\n1;1;0;y^2\n2;1;1;0\n").unwrap();
    let out = cremona(&["--format", "json", "elem-linearize", path.to_str().unwrap(), "--trials", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["size"], 5);
    assert_eq!(v["passed"], true);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 2);
    assert_eq!(cremona(&["elem-linearize", "/nonexistent/gens.txt"]).status.code(), Some(2));
}

#[test]
fn nonlinearity_table() {
    let out = cremona(&["nonlinearity", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("   5      6            3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cremona(&[]).status.code(), Some(2));
    assert_eq!(cremona(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cremona(&["gamma-certify", "three"]).status.code(), Some(2));
    assert_eq!(cremona(&["--help"]).status.code(), Some(0));
}

#[test]
fn tampered_class_row_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_command(&Cmd::Nonlinearity { max_n: 4 }).unwrap();
    let mut doc = report.json;
    doc["rows"][2]["class"] = Value::from(7);
    let path = dir.path().join("report.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = cremona(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAILED"));
}
