use std::process::{Command, Output};

use alcove_spin::codec::decode_set;
use alcove_spin::{enumerate_perm_sp, Mu};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove-spin"))
        .args(args)
        .env_remove("ALCOVE_SPIN_LONG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_succeeds_for_small_n() {
    for mu in ["mu1", "mu2"] {
        let out = run(&["verify", "--n", "2", "--mu", mu, "--no-timing"]);
        assert_eq!(out.status.code(), Some(0));
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let flags = report["flags"].as_object().unwrap();
        assert!(flags.values().all(|v| v == &Value::Bool(true)));
        assert_eq!(report["sizes"]["adm_circ"], report["sizes"]["perm_sp"]);
        assert_eq!(report["sizes"]["perm"], report["sizes"]["perm_sp"]);
        assert!(report.get("elapsed_ms").is_none());
    }
}

#[test]
fn unsupported_mu_is_a_usage_error() {
    let out = run(&["verify", "--n", "2", "--mu", "mu3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["verify", "--n", "4", "--mu", "mu1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--n", "1", "--mu", "mu1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--n", "2", "--set", "perm"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--n", "2", "--set", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["spin-op", "--n", "2", "--threads", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exhausted_budget_fails() {
    let out = run(&["report", "--budget-secs", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["enumerate", "--n", "2", "--set", "perm-sp", "--mu", "mu1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let decoded = decode_set(&stdout(&a)).unwrap();
    assert_eq!(decoded, enumerate_perm_sp(2, Mu::Mu1));
}

#[test]
fn output_independent_of_thread_count() {
    let base = ["report", "--n", "3", "--no-timing"];
    let one = run(&[&base[..], &["--threads", "1"]].concat());
    let four = run(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn keys_are_sorted() {
    let out = run(&["enumerate", "--n", "2", "--set", "z"]);
    let text = stdout(&out);
    assert!(text.find("\"perm\"").unwrap() < text.find("\"t\"").unwrap());
    let sets: Vec<Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(sets.len(), 13);
}

#[test]
fn ascent_certificates_decode() {
    let out = run(&["ascent", "--n", "2", "--mu", "mu2"]);
    assert_eq!(out.status.code(), Some(0));
    let certs: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(certs.len(), 3);
    for cert in certs {
        alcove_spin::codec::decode_certificate(&cert.to_string()).unwrap();
    }
}

#[test]
fn report_csv() {
    let out = run(&["report", "--csv", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn spin_op_facts() {
    let out = run(&["spin-op", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["involution"], Value::Bool(true));
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["eigenspace_dims"]["plus"], 3);
}
