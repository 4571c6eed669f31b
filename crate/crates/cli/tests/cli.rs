use std::process::Command;

use frobdeg::parse::{parse_field, parse_poly, parse_poly_list};
use frobdeg::solver::solve_for;
use frobdeg_cli::{run, Outcome, EXIT_CAPACITY, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("frobdeg").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cli(&all);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn degree_of_expanded_squares() {
    let v = json(&["degree", "--field", "Q", "t^2-2*t+1, t^2, t^2+2*t+1"]);
    assert_eq!(v["g"], 3);
    assert_eq!(v["method"], "rank_criterion");
    assert_eq!(v["upper_bound"], 4);
    assert_eq!(v["lower_bound"], 3);
}

#[test]
fn factored_input_matches_expanded() {
    let a = json(&["degree", "(t-1)^2, t^2, (t+1)^2"]);
    let b = json(&["degree", "t^2-2*t+1, t^2, t^2+2*t+1"]);
    assert_eq!(a, b);
}

#[test]
fn solve_prints_verified_witness() {
    let v = json(&[
        "solve", "--field", "Q", "--target", "t^3", "t, t+1", "--verify",
    ]);
    assert_eq!(v["solvable"], true);
    let q = parse_field("Q", None).unwrap();
    let w: Vec<_> = v["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| parse_poly(x.as_str().unwrap(), &q).unwrap())
        .collect();
    let a = parse_poly_list("t, t+1", &q).unwrap();
    let sum = &(&w[0] * &a[0]) + &(&w[1] * &a[1]);
    assert_eq!(sum, parse_poly("t^3", &q).unwrap());
}

#[test]
fn unsolvable_target_reports_false() {
    let v = json(&["solve", "--target", "t^2-t-1", "t, t+1"]);
    assert_eq!(v["solvable"], false);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn oracle_over_f5() {
    let v = json(&[
        "oracle",
        "--field",
        "F5",
        "t+1, t+2, t+3",
        "--dmax",
        "2",
        "--verify",
    ]);
    assert_eq!(v["g"], 1);
    assert_eq!(v["method"], "oracle_fallback");
    assert!(v["counterexample"].is_string());
}

#[test]
fn counterexample_round_trips() {
    let v = json(&[
        "counterexample",
        "(t-1)^2, t^2, (t+1)^2",
        "--seed",
        "42",
        "--verify",
    ]);
    let q = parse_field("Q", None).unwrap();
    let c = parse_poly(v["counterexample"].as_str().unwrap(), &q).unwrap();
    assert_eq!(c.deg(), Some(3));
    assert_eq!(c.to_string(), v["counterexample"].as_str().unwrap());
    let a = parse_poly_list("(t-1)^2, t^2, (t+1)^2", &q).unwrap();
    assert!(solve_for(&c, &a).unwrap().is_none());
}

#[test]
fn extension_field_output_round_trips() {
    let v = json(&["oracle", "--field", "F5^2", "t+1, t+2, t+3", "--dmax", "2"]);
    assert_eq!(v["g"], 2);
    let f25 = parse_field("F5^2", None).unwrap();
    let c = parse_poly(v["counterexample"].as_str().unwrap(), &f25).unwrap();
    assert_eq!(c.to_string(), v["counterexample"].as_str().unwrap());
}

#[test]
fn same_seed_same_bytes() {
    let args = [
        "degree",
        "t^2+1, t^2, t^2-1",
        "--certify",
        "--seed",
        "7",
        "--json",
    ];
    assert_eq!(cli(&args), cli(&args));
    let other = cli(&[
        "degree",
        "t^2+1, t^2, t^2-1",
        "--certify",
        "--seed",
        "8",
        "--json",
    ]);
    assert_eq!(other.code, EXIT_OK);
}

#[test]
fn seed_falls_back_to_environment() {
    let bin = env!("CARGO_BIN_EXE_frobdeg");
    let go = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(["counterexample", "t^2+1, t^2, t^2-1", "--json"]);
        cmd.env_remove("FROBDEG_SEED");
        if let Some(s) = env {
            cmd.env("FROBDEG_SEED", s);
        }
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(go(Some("5"), None), go(None, Some("5")));
    assert_eq!(go(None, None), go(None, Some("0")));
}

#[test]
fn denumerant_report() {
    let v = json(&["denumerant", "--target", "t^3", "t, t+1"]);
    assert_eq!(v["count"], 4);
    assert_eq!(
        v["types"],
        serde_json::json!([[2, "-inf"], [2, 1], [0, 2], [1, 2]])
    );
    assert_eq!(v["dim2"]["c"], 2);
}

#[test]
fn charp_witness() {
    let v = json(&[
        "charp", "--field", "F2", "--target", "1", "--m", "3", "t, t+1", "--verify",
    ]);
    assert_eq!(
        v["witness"],
        serde_json::json!(["t^4 + t^3 + 1", "t^4 + 1"])
    );
}

#[test]
fn bounds_for_degree_seven() {
    let v = json(&["bounds", "(t-1)^7, t^7, (t+1)^7"]);
    assert_eq!(
        (v["lower_bound"].as_u64(), v["upper_bound"].as_u64()),
        (Some(10), Some(14))
    );
}

#[test]
fn degenerate_inputs() {
    let v = json(&["degree", "t, 1"]);
    assert_eq!(v["g"], "-inf");
    assert_eq!(v["method"], "degenerate");
    assert_eq!(cli(&["degree", "t, 1", "--strict"]).code, EXIT_INPUT);
    let v = json(&["degree", "--field", "F3", "t, t+1, t+2"]);
    assert_eq!(v["g"], "-inf");
}

#[test]
fn invalid_input_exit_codes() {
    assert_eq!(cli(&["degree", "t, t^2"]).code, EXIT_INPUT);
    assert_eq!(cli(&["degree", "t + , t"]).code, EXIT_INPUT);
    assert_eq!(cli(&["degree", "2*t, t+1"]).code, EXIT_INPUT);
    assert_eq!(cli(&["degree", "--field", "F6", "t, t+1"]).code, EXIT_INPUT);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_INPUT);
    let bad = cli(&["degree", "t, t^2", "--json"]);
    let v: Value = serde_json::from_str(&bad.stdout).unwrap();
    assert_eq!(v["exit_code"], EXIT_INPUT);
}

#[test]
fn capacity_exit_code() {
    let out = cli(&[
        "oracle",
        "--field",
        "F7",
        "t, t+1",
        "--dmax",
        "9",
        "--capacity",
        "1000",
    ]);
    assert_eq!(out.code, EXIT_CAPACITY);
}

#[test]
fn help_exits_cleanly() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("degree"));
}

#[test]
fn binary_exit_status_matches() {
    let bin = env!("CARGO_BIN_EXE_frobdeg");
    let out = Command::new(bin)
        .args(["degree", "t, t^2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    let out = Command::new(bin)
        .args(["degree", "t, t+1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(out.stdout).unwrap().contains("g: 2"));
}
