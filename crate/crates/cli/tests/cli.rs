use std::process::Command;

use serde_json::Value;
use uturn::patterns::{ProctorPattern, Tableau};
use uturn::{CartanType, Family, LaurentPolynomial, Model, Partition, SignedPermutation, Variables};
use uturn_cli::run_command;

fn run(args: &[&str]) -> uturn_cli::Outcome {
    run_command(std::iter::once("uturn").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn atom_example_prints_convention_and_value() {
    let out = run(&["atom", "--type", "C", "--rank", "2", "--shape", "2,1", "--weyl", "s2 s1"]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert!(lines.next().unwrap().starts_with("# Z = z^rho * A_w"));
    let value = lines.next().unwrap();
    assert_eq!(value, "z1^2 + z1^2*z2^-2");
    let parsed = LaurentPolynomial::parse(value, Variables::z(2)).unwrap();
    let w = SignedPermutation::parse("s2 s1", 2).unwrap();
    let model = Model::new(&Partition::parse("2,1").unwrap(), &w, Family::Atom, CartanType::C).unwrap();
    assert_eq!(parsed, model.partition_function());
}

#[test]
fn json_report_schema_and_polynomial_round_trip() {
    let v = json(&["character", "--type", "B", "--rank", "2", "--shape", "1", "--weyl", "w0"]);
    for key in ["command", "inputs", "result", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "character");
    let check = &v["checks"][0];
    assert_eq!(check["pass"], true);
    assert!(check["name"].is_string() && check["detail"].is_string());
    let z = LaurentPolynomial::from_json(&v["result"]["partition_function"], Variables::z(2)).unwrap();
    // z^rho times the SO(5) vector character
    let chi = LaurentPolynomial::parse("z1 + z2 + 1 + z2^-1 + z1^-1", Variables::z(2)).unwrap();
    assert_eq!(z, &LaurentPolynomial::monomial(Variables::z(2), vec![1, 0], 1) * &chi);
}

#[test]
fn key_example() {
    let out = run(&["key", "--type", "C", "--rank", "2", "--tableau", "[[2b,1],[1]]"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "s2\n"));
    let out = run(&["key", "--type", "C", "--rank", "2", "--pattern", "[(2,1),(1,0),(1),(0)]"]);
    assert_eq!(out.stdout, "1\n");
}

#[test]
fn verify_ybe_passes() {
    let out = run(&["verify", "ybe", "--kind", "gamma-gamma"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = run(&["verify", "ybe", "--kind", "gamma-delta", "--family", "atom"]);
    assert_eq!(out.code, 1);
}

#[test]
fn verify_suites_exit_codes() {
    for target in ["reflection", "unitarity", "nonexistence", "functional"] {
        let out = run(&["verify", target]);
        assert_eq!(out.code, 0, "{target}: {}", out.stdout);
    }
    let out = run(&["verify", "theorem", "--rank", "2", "--max-size", "2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["atom", "--type", "C", "--rank", "2"]).code, 2);
    assert_eq!(run(&["atom", "--type", "D", "--rank", "2", "--shape", "1"]).code, 2);
    assert_eq!(run(&["atom", "--type", "C", "--rank", "1", "--shape", "2,1"]).code, 2);
    assert_eq!(run(&["atom", "--type", "C", "--rank", "2", "--shape", "1", "--weyl", "s3"]).code, 2);
    assert_eq!(run(&["key", "--type", "C", "--rank", "2", "--tableau", "[[1,2]]"]).code, 2);
    assert_eq!(run(&["verify", "unitarity", "--kind", "delta-gamma"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let args = ["--seed", "7", "--format", "json", "verify", "nonexistence", "--family", "atom", "--trials", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
    let c = run(&["--seed", "8", "--format", "json", "verify", "nonexistence", "--family", "atom", "--trials", "3"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn pattern_and_tableau_listings_reparse() {
    let out = run(&["patterns", "--type", "C", "--rank", "2", "--shape", "2,1"]);
    assert_eq!(out.code, 0);
    let pats: Vec<ProctorPattern> = out
        .stdout
        .lines()
        .filter(|l| l.starts_with('['))
        .map(|l| ProctorPattern::parse(l.split("  ").next().unwrap()).unwrap())
        .collect();
    assert_eq!(pats.len(), 16);
    assert!(pats.iter().all(|p| p.validate(CartanType::C)));

    let out = run(&["tableaux", "--type", "B", "--rank", "2", "--shape", "2,1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let tabs: Vec<Tableau> = out
        .stdout
        .lines()
        .filter(|l| l.starts_with('['))
        .map(|l| Tableau::parse(l.split("  ").next().unwrap(), 2, CartanType::B).unwrap())
        .collect();
    assert_eq!(tabs.len(), 35);
}

#[test]
fn states_listing_sums_to_partition_function() {
    let out = run(&["states", "--type", "C", "--rank", "2", "--shape", "2,1", "--weyl", "s1 s2", "--family", "atom"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().filter(|l| l.starts_with("state ")).count(), 3);
    let v = json(&["states", "--type", "B", "--rank", "2", "--shape", "2,1", "--weyl", "s2", "--marked"]);
    assert_eq!(v["result"]["count"], 2);
}

#[test]
fn output_file_and_binary_exit_codes() {
    let dir = std::env::temp_dir().join(format!("uturn-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let bin = env!("CARGO_BIN_EXE_uturn");
    let status = Command::new(bin)
        .args(["--format", "json", "--output", path.to_str().unwrap()])
        .args([
            "partition",
            "--type",
            "C",
            "--rank",
            "2",
            "--shape",
            "2,1",
            "--weyl",
            "s2 s1 s2",
            "--family",
            "character",
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["states"], 11);
    std::fs::remove_dir_all(&dir).unwrap();

    let bad = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
