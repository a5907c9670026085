//! End-to-end tests of the `walkmat` binary: output bytes, piping between
//! subcommands, and exit-code contract (0 pass, 1 failed check, 2 usage).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn walkmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn walkmat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_walkmat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_dn_edge_list_bytes() {
    let out = walkmat(&["gen-dn", "--n", "5", "--format", "edges"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n1 3\n2 3\n3 4\n4 5\n");
}

#[test]
fn gen_dn_graph6_and_matrix() {
    let out = walkmat(&["gen-dn", "--n", "5", "--format", "graph6"]);
    assert_eq!(stdout(&out), "DXC\n");
    let out = walkmat(&["gen-dn", "--n", "4", "--format", "matrix"]);
    assert_eq!(stdout(&out), "4 4\n0 0 1 0\n0 0 1 0\n1 1 0 1\n0 0 1 0\n");
}

#[test]
fn walk_pipeline_from_edges_and_graph6() {
    let edges = stdout(&walkmat(&["gen-dn", "--n", "5", "--format", "edges"]));
    let w = walkmat_stdin(&["walk", "--input", "-"], &edges);
    assert_eq!(
        stdout(&w),
        "5 5\n1 1 3 4 10\n1 1 3 4 10\n1 3 4 10 14\n1 2 4 6 14\n1 1 2 4 6\n"
    );
    let hat = walkmat_stdin(
        &["walk", "--input", "-", "--format", "graph6", "--hat"],
        "DXC\n",
    );
    assert_eq!(stdout(&hat), "4 4\n1 1 3 4\n1 3 4 10\n1 2 4 6\n1 1 2 4\n");
}

#[test]
fn walk_accepts_raw_matrices() {
    // Walk matrix of the 2x2 swap matrix: e is an eigenvector, so the
    // second column repeats the first.
    let out = walkmat_stdin(
        &["walk", "--input", "-", "--format", "matrix"],
        "2 2\n0 1\n1 0\n",
    );
    assert_eq!(stdout(&out), "2 2\n1 1\n1 1\n");
    // --hat makes no sense for a raw matrix.
    let out = walkmat_stdin(
        &["walk", "--input", "-", "--format", "matrix", "--hat"],
        "2 2\n0 1\n1 0\n",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn snf_and_rank_of_walk_matrix() {
    let w = "5 5\n1 1 3 4 10\n1 1 3 4 10\n1 3 4 10 14\n1 2 4 6 14\n1 1 2 4 6\n";
    let out = walkmat_stdin(&["snf", "--input", "-"], w);
    assert_eq!(stdout(&out), "1 1 1 2 0\n");
    let out = walkmat_stdin(&["rank", "--input", "-"], w);
    assert_eq!(stdout(&out), "4\n");
    let out = walkmat_stdin(&["rank", "--input", "-", "--mod2"], w);
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn snf_json_is_certified() {
    let out = walkmat_stdin(&["snf", "--input", "-", "--json"], "2 2\n4 0\n0 6\n");
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["diag"], serde_json::json!(["2", "12"]));
    assert_eq!(value["certified"], serde_json::json!(true));
    assert!(value["left"].is_array() && value["right"].is_array());
}

#[test]
fn divisor_matrix_output() {
    let out = walkmat(&["divisor", "--n", "5"]);
    assert_eq!(stdout(&out), "4 4\n0 1 0 0\n2 0 1 0\n0 1 0 1\n0 0 1 0\n");
    let out = walkmat(&["divisor", "--n", "5", "--json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["characteristic"][1][0], serde_json::json!("1"));
    assert_eq!(value["divisor"][1][0], serde_json::json!("2"));
}

#[test]
fn cheb_polynomial_output() {
    let out = walkmat(&["cheb", "--n", "3"]);
    assert_eq!(stdout(&out), "T_3 0 -3 0 4\nU_3 0 -4 0 8\ndisc_T 432\n");
}

#[test]
fn cheb_degree_zero_has_no_discriminant() {
    let out = walkmat(&["cheb", "--n", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "T_0 1\nU_0 1\n");
}

#[test]
fn failing_check_exits_one() {
    // An impossible tolerance turns finite rounding residuals into
    // failures; the process must report them with exit code 1.
    let out = walkmat(&["cheb", "--from", "1", "--to", "3", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn cheb_sweep_passes_and_reports() {
    let out = walkmat(&["cheb", "--from", "1", "--to", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().count() >= 11);
    let out = walkmat(&["cheb", "--from", "1", "--to", "3", "--json"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], serde_json::json!(true));
    }
}

#[test]
fn verify_json_records() {
    let out = walkmat(&["verify", "--from", "4", "--to", "12", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], serde_json::json!(true));
        assert!(v["n"].as_u64().unwrap() >= 4);
        // Big integers travel as strings.
        assert!(v["det_hat"].is_string());
    }
}

#[test]
fn verify_text_table() {
    let out = walkmat(&["verify", "--from", "4", "--to", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("det_hat"));
    assert!(text.contains("all checks passed"));
}

#[test]
fn corpus_runs_clean() {
    let out = walkmat(&["corpus", "--count", "50", "--n", "12", "--seed", "42"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 violation(s)"));
    let out = walkmat(&[
        "corpus", "--count", "10", "--n", "8", "--seed", "7", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(walkmat(&["gen-dn", "--n", "3"]).status.code(), Some(2));
    assert_eq!(walkmat(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        walkmat(&["walk", "--input", "/does/not/exist"])
            .status
            .code(),
        Some(2)
    );
    let out = walkmat_stdin(&["snf", "--input", "-"], "not a matrix\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn identical_invocations_identical_bytes() {
    let a = walkmat(&["verify", "--from", "4", "--to", "10", "--json"]);
    let b = walkmat(&["verify", "--from", "4", "--to", "10", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    // The text table too: no timings or other run-dependent bytes.
    let a = walkmat(&["verify", "--from", "4", "--to", "10"]);
    let b = walkmat(&["verify", "--from", "4", "--to", "10"]);
    assert_eq!(a.stdout, b.stdout);
    let a = walkmat(&[
        "corpus", "--count", "25", "--n", "10", "--seed", "9", "--json",
    ]);
    let b = walkmat(&[
        "corpus", "--count", "25", "--n", "10", "--seed", "9", "--json",
    ]);
    assert_eq!(a.stdout, b.stdout);
}
