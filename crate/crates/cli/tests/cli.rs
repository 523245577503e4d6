use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn rrcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrcurve")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap()
}

#[test]
fn classify_proper_power() {
    let out = rrcurve(&["classify", "B^3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["verdict"], "proper_power");
    assert_eq!(v["exponent"], 3);
    assert_eq!(v["input"]["parsed"], "B^3");
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn classify_reports_descent() {
    let v = stdout_json(&rrcurve(&["classify", "A B^2 A B^3"]));
    assert_eq!(v["verdict"], "primitive");
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 2);
    assert_eq!(trace[0]["before"], "A B^2 A B^3");
    assert_eq!(trace[1]["after"], "B");
}

#[test]
fn oracle_and_classify_agree() {
    for word in ["A B^2 A^-1 B^2", "a b a b", "A^2 B^2", "A B A^-1 B^-1 A"] {
        let ours = stdout_json(&rrcurve(&["classify", word]));
        let truth = stdout_json(&rrcurve(&["oracle", word]));
        assert_eq!(ours["verdict"], truth["verdict"], "{word}");
        assert_eq!(ours["exponent"], truth["exponent"], "{word}");
    }
    let v = stdout_json(&rrcurve(&["oracle", "A B A B"]));
    assert_eq!(v["root"], "A B");
    assert!(v["move_trace"].is_array());
}

#[test]
fn reduce_words() {
    let v = stdout_json(&rrcurve(&["reduce", "B A B^2 b a"]));
    assert_eq!(v["reduced"], "B A B A^-1");
    assert_eq!(v["cyclic"], "A B A^-1 B");
    assert_eq!(v["cyclic_length"], 4);
    let v = stdout_json(&rrcurve(&["reduce", "A a"]));
    assert_eq!(v["cyclic"], Value::Null);
}

#[test]
fn homology_of_lens_pair() {
    let v = stdout_json(&rrcurve(&["homology", "A^4 B", "B"]));
    assert_eq!(v["h1"], json!([1, 4]));
    let out = rrcurve(&["--output", "text", "homology", "A^4 B", "B"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "H1 = Z/4");
}

#[test]
fn diagram_commands_accept_inline_json_and_files() {
    let form = r#"{"family":"SeifertM","params":{"s":3}}"#;
    let v = stdout_json(&rrcurve(&["classify-form", form]));
    assert_eq!(v["class"], "seifert_m");
    assert_eq!(v["fiber"], json!({"index": 3}));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(form.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let v = stdout_json(&rrcurve(&["realize", path]));
    assert_eq!(v["word"], "A B^3 A^-1 B^3");
    assert_eq!(v["length"], 8);
    assert_eq!(v["input"], serde_json::from_str::<Value>(form).unwrap());

    let brz = r#"{"family":"BRZRect","params":{"nu":2,"omega":3,"p":5,"q":7}}"#;
    let v = stdout_json(&rrcurve(&["fiber-types", brz]));
    assert_eq!(v["fiber_types"], json!([{"numerator": 2, "denominator": 5}, {"numerator": 3, "denominator": 7}]));
}

#[test]
fn sweep_counts_match_enumeration() {
    let out = rrcurve(&["sweep", "--max-len", "8", "--mode", "equivalence"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let expected = rrcurve::enumerate_cyclic_words(8).count();
    assert_eq!(v["checked"], expected);
    assert_eq!(v["mismatches"], 0);
    let sum = ["primitive", "proper_power", "neither"].iter().map(|k| v[k].as_u64().unwrap()).sum::<u64>();
    assert_eq!(sum as usize, expected);
}

#[test]
fn domain_errors_exit_two() {
    let out = rrcurve(&["classify", "A^0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let e = stderr_json(&out);
    assert_eq!(e["error"]["kind"], "parse_error");
    assert_eq!(e["error"]["detail"]["offset"], 2);

    let e = stderr_json(&rrcurve(&["classify", "A B b a"]));
    assert_eq!(e["error"]["kind"], "empty_word");

    let out = rrcurve(&["classify-form", r#"{"family":"SeifertDGen","params":{"n":2,"s":3,"a":2,"b":4}}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["detail"]["gcd"], 2);

    let e = stderr_json(&rrcurve(&["realize", r#"{"family":"PPTypeI","params":{}}"#]));
    assert_eq!(e["error"]["kind"], "no_word_realization");

    let e = stderr_json(&rrcurve(&["fiber-types", r#"{"family":"SeifertM","params":{"s":2}}"#]));
    assert_eq!(e["error"]["kind"], "not_applicable");

    let e = stderr_json(&rrcurve(&["realize", "/nonexistent/form.json"]));
    assert_eq!(e["error"]["kind"], "io_error");

    let e = stderr_json(&rrcurve(&["realize", r#"{"family":"Nope","params":{}}"#]));
    assert_eq!(e["error"]["kind"], "invalid_json");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(rrcurve(&[]).status.code(), Some(1));
    assert_eq!(rrcurve(&["bogus"]).status.code(), Some(1));
    assert_eq!(rrcurve(&["classify"]).status.code(), Some(1));
    assert_eq!(rrcurve(&["sweep", "--max-len", "0"]).status.code(), Some(1));
    assert_eq!(rrcurve(&["sweep", "--mode", "other"]).status.code(), Some(1));
    assert_eq!(rrcurve(&["--output", "xml", "classify", "A"]).status.code(), Some(1));
    assert_eq!(rrcurve(&["--help"]).status.code(), Some(0));
    assert_eq!(rrcurve(&["--version"]).status.code(), Some(0));
}

#[test]
fn text_output() {
    let out = rrcurve(&["--output", "text", "classify", "B^3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "proper power, exponent 3");
    let out = rrcurve(&["classify-form", "--output", "text", r#"{"family":"SeifertM","params":{"s":1}}"#]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("no exceptional fiber"));
    assert!(text.contains("indexes 2 and 2"));
    let out = rrcurve(&["--output", "text", "classify", "A^0"]);
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error: "));
}
