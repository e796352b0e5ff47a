use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;

use dutchbook_core::matrix::{verify_coherence, verify_solution, CoherenceResult, MixedStrategy, Solution};
use dutchbook_core::schema::parse_payoff_matrix;
use dutchbook_core::SurrealRF;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dutchbook"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = run(&full);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {stdout} {stderr}"));
    (code, v)
}

fn temp_json(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn rf(v: &Value) -> SurrealRF {
    v["exact"].as_str().unwrap().parse().unwrap()
}

fn strategy(v: &Value) -> MixedStrategy {
    MixedStrategy::new(
        v["labels"].as_array().unwrap().iter().map(|l| l.as_str().unwrap().to_string()).collect(),
        v["weights"].as_array().unwrap().iter().map(rf).collect(),
    )
}

#[test]
fn eval_zero_mean_positive_game() {
    let (code, v) = run_json(&["eval", "{1 | {0 | -2}}"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["status"], "Positive");
    assert_eq!(r["mean"], "0");
    assert_eq!(r["temperature"], "1");
    assert_eq!(r["infinitesimal"], false);
    assert!(r.get("number").is_none());
    assert_eq!(v["provenance"]["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["provenance"]["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn eval_human_has_thermograph() {
    let (code, out, _) = run(&["eval", "{10 | 2}"]);
    assert_eq!(code, 0);
    assert!(out.contains("temperature:   4"), "{out}");
    assert!(out.contains("thermograph:"));
    let (_, out, _) = run(&["eval", "3/4"]);
    assert!(out.contains("number:        3/4"), "{out}");
}

#[test]
fn cmp_symbols() {
    assert_eq!(run(&["cmp", "^", "0"]).1.lines().next().unwrap(), "^ > 0");
    let (_, v) = run_json(&["cmp", "*", "0"]);
    assert_eq!(v["result"]["relation"], "‖");
    let (_, v) = run_json(&["cmp", "{0|2}", "1"]);
    assert_eq!(v["result"]["relation"], "=");
}

#[test]
fn coherence_table1() {
    let path = fixture("table1.json");
    let (code, v) = run_json(&["coherence", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["verdict"], "Coherent");
    let witness = strategy(&r["certificate"]);
    assert_eq!(
        witness.weights,
        vec!["(2*w+3)/(4*w+4)".parse::<SurrealRF>().unwrap(), "(2*w+1)/(4*w+4)".parse().unwrap()]
    );
    let m = parse_payoff_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(verify_coherence(&m, &CoherenceResult::Coherent { witness }));
}

#[test]
fn solve_report_reverifies() {
    let path = fixture("table1.json");
    let (code, v) = run_json(&["--std", "solve", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["value"]["standard_part"], "0");
    let s = Solution {
        value: rf(&r["value"]),
        row_strategy: strategy(&r["row_strategy"]),
        column_strategy: strategy(&r["column_strategy"]),
    };
    let m = parse_payoff_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(verify_solution(&m, &s));
    assert_eq!(s.value, "1/(4*w*(w+1))".parse().unwrap());
}

#[test]
fn dutch_book_exit_code() {
    let f = temp_json(r#"{"outcomes":["a1","a2"],"bookmakers":["b1"],"entries":[["-1","-1/w"]]}"#);
    let (code, v) = run_json(&["coherence", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"], "DutchBook");
    let (code, v) = run_json(&["coherence", "--bank", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["certificate"]["labels"][1], "bank");
    assert_eq!(v["result"]["certificate"]["weights"][1]["exact"], "0");
}

#[test]
fn classify_reports() {
    let switch = temp_json(r#"{"outcomes":["a"],"bookmakers":["b"],"entries":[["{0|-2}"]]}"#);
    let (code, v) = run_json(&["classify", switch.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["certificate"]["kind"], "DutchBook");
    assert_eq!(v["result"]["certificate"]["coefficients"][0], "2");
    assert_eq!(v["provenance"]["policy"], "classification policy: mean-LP sign");

    let zero = temp_json(r#"{"outcomes":["a"],"bookmakers":["b"],"entries":[["{1|{0|-2}}"]]}"#);
    let (code, v) = run_json(&["classify", zero.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["certificate"]["kind"], "ZeroMeanUndecided");

    let (code, _, stderr) = run(&["classify", "--budget", "1", switch.path().to_str().unwrap()]);
    assert_eq!(code, 3, "{stderr}");
}

#[test]
fn lower_prevision_cases() {
    let even = temp_json(r#"{"bets":[{"event":["a1"],"g1":"1","g2":"-1"}],"target":["a1"]}"#);
    let (code, v) = run_json(&["lower-prevision", even.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["lower_prevision"]["exact"], "1/2");

    let clash = temp_json(
        r#"{"outcomes":["e","f"],"bets":[{"event":["e"],"g1":"1","g2":"-3"},{"event":["f"],"g1":"1","g2":"-1"}],"target":["e"]}"#,
    );
    let (code, _, stderr) = run(&["lower-prevision", clash.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("no probability vector"), "{stderr}");
}

#[test]
fn input_errors_exit_2() {
    let ragged = temp_json(r#"{"outcomes":["a1","a2"],"bookmakers":["b1","b2"],"entries":[["1","2"],["3"]]}"#);
    let (code, _, stderr) = run(&["solve", ragged.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("entries[1]"), "{stderr}");

    let third = temp_json(r#"{"outcomes":["a"],"bookmakers":["b"],"entries":[["1/3"]]}"#);
    let (code, _, stderr) = run(&["classify", third.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not a dyadic"), "{stderr}");

    assert_eq!(run(&["eval", "{0 |"]).0, 2);
    assert_eq!(run(&["solve", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn human_and_json_agree() {
    let path = fixture("table1.json");
    let (_, human, _) = run(&["coherence", path.to_str().unwrap()]);
    let (_, v) = run_json(&["coherence", path.to_str().unwrap()]);
    assert!(human.contains(v["provenance"]["input_sha256"].as_str().unwrap()));
    for w in v["result"]["certificate"]["weights"].as_array().unwrap() {
        assert!(human.contains(w["exact"].as_str().unwrap()));
    }
    assert!(human.contains("verdict: Coherent"));
}
