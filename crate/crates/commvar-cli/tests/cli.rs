//! End-to-end tests of the command line surface, driving the built binary.

use std::process::{Command, Output};

fn commvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn orbit_dim_reports_partition_data() {
    let out = commvar(&["orbit-dim", "C2", "--partition", "2,2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["centralizer_dim"], 4);
    // invalid partition still exits 0 and reports valid = false
    let out = commvar(&["orbit-dim", "C2", "--partition", "3,1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["dim"], serde_json::Value::Null);
}

#[test]
fn algebra_exports_basis_as_strings() {
    let out = commvar(&["algebra", "sp4"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 10);
    assert_eq!(v["coxeter_number"], 4);
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 10);
    assert_eq!(basis[0].as_array().unwrap().len(), 4);
    assert!(basis[0][0][0].is_string());
}

#[test]
fn compile_writes_ideal_files() {
    let dir = std::env::temp_dir().join("commvar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ideal.txt");
    let out = commvar(&[
        "compile",
        "--algebra",
        "C2",
        "--locus",
        "u",
        "--r",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("x_1_1"));
    // json format to stdout
    let out = commvar(&[
        "compile", "--algebra", "A2", "--locus", "u", "--r", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["vars"].as_array().unwrap().len(), 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn cvdim_exit_codes() {
    // match -> 0
    let out = commvar(&["cvdim", "--algebra", "A2", "--locus", "u", "--r", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dimension"], 5);
    assert_eq!(v["verdict"], "match");
    // input error -> 2
    let out = commvar(&["cvdim", "--algebra", "E8", "--locus", "u", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // unsupported locus -> 2
    let out = commvar(&["cvdim", "--algebra", "so8", "--locus", "o2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // resource error -> 3
    let out = commvar(&[
        "cvdim",
        "--algebra",
        "C2",
        "--locus",
        "o2",
        "--r",
        "2",
        "--max-pairs",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn cvdim_both_methods_cross_check() {
    let out = commvar(&[
        "cvdim", "--algebra", "A1", "--locus", "n", "--r", "2", "--method", "both", "--qs",
        "2,3,5,7",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["routes_consistent"], true);
    assert_eq!(v["counts"].as_array().unwrap().len(), 4);
}

#[test]
fn env_var_sets_default_characteristic() {
    let out = Command::new(env!("CARGO_BIN_EXE_commvar"))
        .args(["cvdim", "--algebra", "A2", "--locus", "o2u", "--r", "1"])
        .env("COMMVAR_CHAR", "3")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["characteristic"], 3);
}

#[test]
fn verify_suites_pass() {
    for suite in ["thresholds", "bounds"] {
        let out = commvar(&["verify", "--suite", suite, "--max-rank", "4"]);
        assert!(out.status.success(), "suite {suite} failed");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("rows match"));
    }
    // json output is parseable and carries verdicts
    let out = commvar(&["verify", "--suite", "thresholds", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["rows"].as_array().unwrap().len() >= 4);
    assert!(v["rows"][0]["verdict"].is_string());
    // unknown suite -> input error
    let out = commvar(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_table_text_and_json() {
    let out = commvar(&["bound-table", "--family", "C", "--max-rank", "3", "--max-r", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("C2"));
    let out = commvar(&[
        "bound-table", "--family", "A", "--max-rank", "2", "--max-r", "1", "--json",
    ]);
    let v = stdout_json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["frobenius_lower"], 4); // sl3 at r = 1: 2 * 2
}
