//! End-to-end runs of the `qqsh` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qqsh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qqsh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn docs(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(name)
}

fn output_schema() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(docs("output.schema.json")).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("valid schema")
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let o = qqsh(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).expect("json output");
    let validator = output_schema();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn product_base_case_text() {
    let o = qqsh(&["product", "--algebra", "A4", "e1", "e1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1+q) e1|e1 + e2");
}

#[test]
fn product_methods_agree() {
    let mut outs = Vec::new();
    for method in ["recursive", "right", "explicit", "nfold"] {
        let o = qqsh(&["product", "--algebra", "A4", "--method", method, "e1", "e2", "e1"]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        outs.push(stdout(&o));
    }
    assert!(outs.windows(2).all(|w| w[0] == w[1]), "{outs:?}");
    let a = qqsh(&["product", "--algebra", "hoffman-zero:1,1", "--method", "hoffman", "e1", "e2"]);
    assert_eq!(stdout(&a).trim(), "e1|e2 + q e2|e1");
}

#[test]
fn count_terms_and_eval() {
    let o = qqsh(&["product", "--algebra", "A4", "--count-terms", "--eval-q", "2", "e1", "e1"]);
    let text = stdout(&o);
    assert!(text.contains("terms: 2"), "{text}");
    assert!(text.contains("at q = 2: 3 e1|e1 + e2"), "{text}");
    // exact form is still printed first
    assert!(text.starts_with("(1+q) e1|e1 + e2"), "{text}");
}

#[test]
fn enumerate_mixable_one_one_json() {
    let v = json_of(&["enumerate", "mixable", "1", "1"]);
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.iter().any(|r| r["w"] == serde_json::json!([1, 2]) && r["S"] == serde_json::json!([[1, 2]])));
    let marked = json_of(&["enumerate", "marked", "4"]);
    assert_eq!(marked.as_array().unwrap().len(), 75);
}

#[test]
fn json_outputs_match_schema() {
    json_of(&["product", "--algebra", "A4", "--eval-q", "1/2", "e1|e2", "e2"]);
    json_of(&["power", "--algebra", "A_inf", "--letter", "1", "-k", "3"]);
    json_of(&["enumerate", "shuffles", "2", "2"]);
    json_of(&["verify", "zeta", "--max-degree", "3"]);
    json_of(&["dual", "phi", "--algebra", "A4", "c1|c2"]);
    json_of(&["dual", "verify-adjoint", "--algebra", "A4", "e1", "e1", "c1|c1"]);
    json_of(&["rb", "fbar", "--fixture", "kt", "t1|t2", "--eval-q", "1/3"]);
    let z = json_of(&["zeta", "--kind", "zudilin", "--index", "2,1", "-N", "4"]);
    assert_eq!(z["agree"], Value::Bool(true));
}

#[test]
fn json_terms_are_canonically_ordered() {
    let v = json_of(&["product", "--algebra", "A4", "e1|e1", "e2"]);
    let words: Vec<Vec<u64>> = v["result"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["word"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect();
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(words, sorted);
}

#[test]
fn verify_all_exits_zero() {
    let o = qqsh(&["verify", "all", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn failing_verification_exits_one() {
    let o = qqsh(&["rb", "verify", "--fixture", "kt-corrupted"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn out_of_scope_does_not_fail() {
    let o = qqsh(&["rb", "verify", "--fixture", "kt-braided", "--max-degree", "3"]);
    let text = stdout(&o);
    assert!(text.contains("OUT-OF-SCOPE"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["product", "--algebra", "A4x", "e1", "e1"],
        vec!["product", "--method", "nope", "e1", "e1"],
        vec!["product", "e1 +", "e1"],
        vec!["product", "--algebra", "A4", "e9", "e1"],
        vec!["zeta", "--kind", "bradley", "--index", "1,2", "-N", "3"],
        vec!["verify", "nonsense"],
        vec!["frobnicate"],
    ] {
        let o = qqsh(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = qqsh(&["product", "e1 +", "e1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn algebra_file_matches_fixture_and_schema() {
    let path = docs("examples/a3.json");
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(docs("algebra.schema.json")).unwrap()).unwrap();
    assert!(jsonschema::is_valid(&schema, &file));
    let from_file = qqsh(&["product", "--algebra-file", path.to_str().unwrap(), "e1|e2", "e1"]);
    let fixture = qqsh(&["product", "--algebra", "A3", "e1|e2", "e1"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&fixture));
}

#[test]
fn zeta_spot_value() {
    let o = qqsh(&["zeta", "--kind", "zudilin", "--index", "2", "-N", "1"]);
    let text = stdout(&o);
    assert!(text.contains("direct: (q^2)/(1-2q+q^2)"), "{text}");
    assert!(text.contains("routes agree: true"));
}

#[test]
fn cache_limit_does_not_change_results() {
    let a = qqsh(&["product", "--algebra", "A4", "e1|e2|e1", "e2|e1"]);
    let b = Command::new(env!("CARGO_BIN_EXE_qqsh"))
        .args(["product", "--algebra", "A4", "e1|e2|e1", "e2|e1"])
        .env("QQSH_CACHE_LIMIT", "0")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}
