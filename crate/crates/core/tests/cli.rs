use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn pinj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinj"))
        .args(args)
        .env_remove("PINJ_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&o.stdout)
        )
    })
}

fn golden(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn decompose_example_element() {
    let o = pinj(&[
        "decompose",
        "--n",
        "10",
        "--chart",
        "(1,7,2,4)[3,5,10][9,6][8]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rank"], 7);
    assert_eq!(v["defect"], 3);
    assert_eq!(v["stable_rank"], 4);
    assert_eq!(v, golden("decompose_n10.json"));
}

#[test]
fn decompose_from_pairs_matches_chart() {
    let a = pinj(&[
        "decompose",
        "--n",
        "10",
        "--chart",
        "(1,7,2,4)[3,5,10][9,6][8]",
    ]);
    let b = pinj(&[
        "decompose",
        "--n",
        "10",
        "--pairs",
        "[[1,7],[2,4],[3,5],[4,1],[5,10],[7,2],[9,6]]",
    ]);
    assert_eq!(json(&a), json(&b));
}

#[test]
fn count_field_and_table() {
    let o = pinj(&["count", "--n", "3", "--field", "card_is"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), Value::String("34".into()));
    let o = pinj(&["count", "--n", "3"]);
    assert_eq!(json(&o), golden("count_n3.json"));
}

#[test]
fn count_csv_is_one_row() {
    let o = pinj(&["count", "--n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let header = r.headers().unwrap().clone();
    let rows: Vec<_> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    let at = header.iter().position(|h| h == "card_is").unwrap();
    assert_eq!(&rows[0][at], "34");
}

#[test]
fn verify_all_at_five() {
    let o = pinj(&["verify", "--n", "5", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn verify_single_identity() {
    let o = pinj(&["verify", "--n", "4", "--identity", "fixed_points"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert_eq!(v["checks"][0]["name"], "fixed_points");
}

#[test]
fn distribution_matches_golden() {
    let o = pinj(&["distribution", "--n", "2", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), golden("distribution_n2_k2.json"));
}

#[test]
fn distribution_all_reports_checks() {
    let o = pinj(&["distribution", "--n", "3", "--k", "2", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["eigenbasis"].as_array().unwrap().len(), 4);
    assert_eq!(v["cross_checks"]["reduction"], true);
}

#[test]
fn simulate_is_reproducible_with_seed() {
    let args = [
        "simulate", "--n", "3", "--k", "2", "--trials", "20000", "--seed", "7",
    ];
    let a = pinj(&args);
    let b = pinj(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["within_tolerance"], true);
}

#[test]
fn simulate_without_seed_prints_it() {
    let o = pinj(&["simulate", "--n", "2", "--k", "2", "--trials", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8(o.stderr).unwrap();
    let seed: u64 = err
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("seed "))
        .and_then(|s| s.trim().parse().ok())
        .expect("seed line on stderr");
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], seed);
}

#[test]
fn bijection_sweeps() {
    let o = pinj(&["bijection", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["sweeps"].as_array().unwrap().len(), 5);
    let o = pinj(&["bijection", "--n", "2", "--identity", "orbit_chain"]);
    assert_eq!(json(&o)["sweeps"][0]["bijection"], "orbit_chain");
}

#[test]
fn asymptotics_reports() {
    let o = pinj(&["asymptotics", "--n", "30", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["residues"]["m"], 3);
    let o = pinj(&["asymptotics", "--n", "10", "--format", "csv"]);
    let rows = csv::Reader::from_reader(o.stdout.as_slice())
        .records()
        .count();
    assert_eq!(rows, 9);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count"][..],
        &["nonsense"],
        &["count", "--n", "3", "--field", "nope"],
        &["decompose", "--n", "3", "--chart", "(1,2)(2,3)"],
        &["compose", "--n", "3", "--chart", "(1,2)[3]"],
        &["bijection", "--n", "2", "--identity", "nope"],
    ] {
        let o = pinj(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn budget_error_reports_required_count() {
    let o = pinj(&["verify", "--n", "5", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("1546"), "{err}");
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_pinj"))
        .args(["bijection", "--n", "4"])
        .env("PINJ_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_is_stable() {
    let args = ["asymptotics", "--n", "12"];
    assert_eq!(pinj(&args).stdout, pinj(&args).stdout);
}
