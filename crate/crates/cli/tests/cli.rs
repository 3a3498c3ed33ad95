use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hssp-lab"))
        .args(args)
        .env_remove("HSSP_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

#[test]
fn hqpp_example() {
    let out = run(&["solve", "hqpp", "--q", "7", "--hidden", r#"{"u":3}"#]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["u"], 3);
    assert!(r["queries"].as_u64().unwrap() > 0);
}

#[test]
fn vandermonde_example() {
    let out = run(&["vandermonde", "--q", "7", "--n", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["rank"], 5);
    let m = r["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 5);
    assert!(m.iter().all(|row| row.as_array().unwrap().len() == 5));
}

#[test]
fn vandermonde_emit_writes_file() {
    let path = std::env::temp_dir().join(format!("hssp-lab-vm-{}.json", std::process::id()));
    let out = run(&["vandermonde", "--q", "5", "--n", "2", "--d", "3", "--emit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["size"], 9);
    assert_eq!(records(&out)[0]["rank"], 9);
    std::fs::remove_file(path).ok();
}

#[test]
fn quick_acceptance_exits_zero() {
    let out = run(&["suite", "acceptance", "--quick"]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    assert_eq!(rs.len(), 10);
    assert!(rs.iter().all(|r| r["status"] == "PASS"));
}

#[test]
fn same_seed_same_bytes() {
    let args = ["solve", "hpp2", "--q", "5", "--n", "3", "--trials", "6", "--seed", "11"];
    let a = run(&args);
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "3"]);
    let b = run(&parallel);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let ids: Vec<u64> = records(&a).iter().map(|r| r["trial"].as_u64().unwrap()).collect();
    assert_eq!(ids, (0..6).collect::<Vec<_>>());
}

#[test]
fn env_seed_is_the_default() {
    let a = run(&["base", "random", "--group", r#"{"kind":"affine","q":13,"H":[1,3,9]}"#, "--trials", "4", "--seed", "7"]);
    let b = Command::new(env!("CARGO_BIN_EXE_hssp-lab"))
        .args(["base", "random", "--group", r#"{"kind":"affine","q":13,"H":[1,3,9]}"#, "--trials", "4"])
        .env("HSSP_LAB_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn promise_violations_exit_two() {
    let out = run(&["solve", "hpgp", "--q", "5", "--d", "1", "--hidden", r#"{"coeffs":[0,1,1]}"#]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["solve", "hpp2", "--q", "3", "--hidden", r#"{"coeffs":[0,0,0,0,0]}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn other_errors_exit_one() {
    assert_eq!(run(&["solve", "hqpp", "--q", "6"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(1));
}

#[test]
fn hpgp_paths_agree() {
    for path in ["A", "B", "both"] {
        let out = run(&["solve", "hpgp", "--q", "5", "--d", "2", "--hidden", r#"{"coeffs":[4,2,3]}"#, "--path", path]);
        assert_eq!(out.status.code(), Some(0), "path {path}");
        assert_eq!(records(&out)[0]["coeffs"], serde_json::json!([2, 3]));
    }
}

#[test]
fn multivariate_hpgp_counts_solves() {
    let out = run(&["solve", "hpgp", "--q", "5", "--n", "2", "--d", "2", "--path", "B", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["univariate_solves"], 5);
    assert_eq!(r["correct"], true);
}

#[test]
fn structural_verbs() {
    let g = r#"{"kind":"affine","q":7,"H":[1,6]}"#;
    let out = run(&["verify", "galois", "--group", g]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["passed"], true);

    let out = run(&["base", "deterministic", "--group", g]);
    assert_eq!(records(&out)[0]["points"], serde_json::json!([0, 1]));

    let out = run(&["base", "verify", "--group", g, "--points", "[0]"]);
    assert_eq!(records(&out)[0]["strong"], false);

    let out = run(&["separators", "--group", g]);
    let rs = records(&out);
    assert_eq!(rs.len(), 22);
    assert_eq!(rs.last().unwrap()["all_ok"], true);
}

#[test]
fn grover_bench_mean() {
    let out = run(&["bench", "grover", "--q", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    let summary = rs.last().unwrap();
    assert_eq!(summary["mean_scan_queries"], 4.0);
    assert!(rs[..7].iter().all(|r| r["recovered"] == r["c"]));
}

#[test]
fn pretty_prints_a_table() {
    let out = run(&["bench", "grover", "--q", "5", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("adversary_queries"));
}
