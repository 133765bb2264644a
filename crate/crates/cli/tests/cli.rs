//! End-to-end tests against the built binary: the documented examples,
//! the JSON schemas, and the exit-code contract (0 pass, 1 failed
//! check/computation, 2 usage).

use hankel_core::stieltjes::{hankel_matrix, Factorization};
use hankel_core::{Mat, MomentKind, Rational};
use serde_json::Value;
use std::process::{Command, Output};

fn hankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(args)
        .output()
        .expect("binary failed to start")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

#[test]
fn det_harmonic_golden_rows_all_agree() {
    let out = hankel(&[
        "det", "--family", "harmonic", "--t", "1", "--s", "1", "--n", "0..8", "--all",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    for expected in [
        "-11/129600",
        "-137/2016379008000000",
        "761/658299967151148396655182662860800000000",
    ] {
        assert!(text.contains(expected), "missing {expected} in:\n{text}");
    }
    assert!(!text.contains("false"));
    assert_eq!(text.lines().count(), 10, "header plus nine rows");
}

#[test]
fn det_single_order_examples() {
    let out = hankel(&[
        "det", "--family", "hilbert", "--t", "1", "--n", "0", "--closed",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n  closed\n0  1\n");

    let out = hankel(&[
        "det", "--family", "hilbert", "--t", "1", "--n", "2", "--oracle",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n  oracle\n2  1/2160\n");
}

#[test]
fn det_json_rows_carry_requested_routes() {
    let out = hankel(&[
        "det",
        "--family",
        "generalized",
        "--s",
        "7/3",
        "--n",
        "0..2",
        "--all",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let rows: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let rows = rows.as_array().expect("array of rows");
    assert_eq!(rows.len(), 3);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row["n"], n);
        assert_eq!(row["closed"], row["factor"]);
        assert_eq!(row["closed"], row["oracle"]);
        assert_eq!(row["agree"], true);
    }
    assert_eq!(rows[1]["closed"], "63/1300");
}

#[test]
fn det_factor_route_rejected_for_harmonic() {
    let out = hankel(&["det", "--family", "harmonic", "--n", "2", "--factor"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("factor route"));

    // Under --all the factor column is skipped rather than rejected.
    let out = hankel(&["det", "--family", "harmonic", "--n", "0..2", "--all"]);
    assert_eq!(code(&out), 0);
    assert!(!stdout(&out).contains("factor"));
}

#[test]
fn det_csv_and_decimal() {
    let out = hankel(&[
        "det", "--family", "hilbert", "--n", "1..3", "--oracle", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,oracle\n1,1/12\n2,1/2160\n3,1/6048000\n");

    let out = hankel(&[
        "det",
        "--family",
        "hilbert",
        "--n",
        "1",
        "--closed",
        "--decimal",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("approx"));
    assert!(text.contains("0.08333333333333333"));
}

#[test]
fn inverse_closed_and_kernel_examples() {
    let out = hankel(&["inverse", "--family", "hilbert", "--n", "1", "--closed"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("[ 4  -6]"), "unexpected output:\n{text}");
    assert!(text.contains("[-6  12]"));

    let out = hankel(&["inverse", "--family", "hilbert", "--n", "0", "--kernel"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("[1]"));
}

#[test]
fn inverse_oracle_handles_harmonic() {
    let out = hankel(&[
        "inverse", "--family", "harmonic", "--t", "1", "--s", "1", "--n", "1", "--oracle",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("-3/2"), "unexpected output:\n{text}");

    let json = hankel(&[
        "inverse", "--family", "harmonic", "--n", "1", "--oracle", "--format", "json",
    ]);
    let obj: Value = serde_json::from_str(&stdout(&json)).expect("valid JSON");
    let matrix: Mat = serde_json::from_value(obj["matrix"].clone()).expect("matrix schema");
    let kind = MomentKind::harmonic(Rational::one(), Rational::one()).unwrap();
    assert!((&matrix * &hankel_matrix(&kind, 1)).is_identity());
}

#[test]
fn inverse_singular_matrix_is_structured_error() {
    // H_0 = 0, so the order-0 harmonic matrix is singular.
    let out = hankel(&["inverse", "--family", "harmonic", "--n", "0", "--oracle"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("singular"));

    let json = hankel(&[
        "inverse", "--family", "harmonic", "--n", "0", "--oracle", "--format", "json",
    ]);
    assert_eq!(code(&json), 1);
    let obj: Value = serde_json::from_str(&stdout(&json)).expect("valid JSON");
    assert_eq!(obj["error"]["kind"], "singular");
}

#[test]
fn inverse_closed_requires_t_equal_one() {
    let out = hankel(&[
        "inverse", "--family", "hilbert", "--t", "2", "--n", "1", "--closed",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("t = 1"));
}

#[test]
fn verify_single_suites() {
    let out = hankel(&["verify", "--suite", "eq2.14"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("91 cases"), "unexpected output:\n{text}");
    assert!(text.contains("pass"));

    let out = hankel(&["verify", "--suite", "eq4.1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("n <= 40"));
}

#[test]
fn verify_all_passes_and_lists_findings() {
    let out = hankel(&["verify", "--all"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("result: all"));
    assert!(text.contains("transcription findings:"));
    for finding in ["eq5.5", "eq5.7", "eq5.8"] {
        assert!(text.contains(finding), "missing finding {finding}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_schema() {
    let out = hankel(&["verify", "--all", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let obj: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(obj["pass"], true);
    let suites = obj["suites"].as_array().expect("suites array");
    assert!(suites.len() >= 16);
    for suite in suites {
        assert_eq!(suite["pass"], true);
        assert!(suite["cases"].as_u64().expect("case count") > 0);
        assert_eq!(suite["counterexample"], Value::Null);
    }
    assert_eq!(obj["findings"].as_array().expect("findings").len(), 3);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = hankel(&["verify", "--suite", "nope"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown suite"));
    assert!(
        stderr(&out).contains("eq2.14"),
        "lists the available suites"
    );
}

#[test]
fn rseq_example_rows() {
    let out = hankel(&["rseq", "--t", "2", "--s", "1", "--nmax", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|line| line.split_whitespace().nth(1).expect("direct column"))
        .collect();
    assert_eq!(values, ["0", "4", "0", "-32/3", "0"]);
    assert!(!text.contains("false"));
}

#[test]
fn orthopoly_examples() {
    let out = hankel(&["orthopoly", "--family", "hilbert", "--t", "1", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "[1/6, -1, 1]\n");

    let out = hankel(&["orthopoly", "--family", "hilbert", "--n", "2", "--scaled"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "[1, -6, 6]\n");

    let out = hankel(&["orthopoly", "--family", "harmonic", "--n", "2"]);
    assert_eq!(code(&out), 2);

    let out = hankel(&[
        "orthopoly",
        "--family",
        "generalized",
        "--n",
        "2",
        "--scaled",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn conjecture_example() {
    let out = hankel(&["conjecture", "--nmax", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("true").count(), 5);
    assert!(!text.contains("false"));

    let json = hankel(&["conjecture", "--nmax", "5", "--format", "json"]);
    let rows: Value = serde_json::from_str(&stdout(&json)).expect("valid JSON");
    let rows = rows.as_array().expect("rows");
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["U_n"], "137");
    assert_eq!(rows[4]["holds"], true);
}

#[test]
fn factorize_json_round_trips() {
    let out = hankel(&[
        "factorize",
        "--family",
        "generalized",
        "--s",
        "3/2",
        "--n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let f: Factorization = serde_json::from_str(&stdout(&out)).expect("factorization schema");
    let kind = MomentKind::generalized(Rational::one(), Rational::new(3, 2)).unwrap();
    assert_eq!(f.reconstruct(), hankel_matrix(&kind, 3));

    let out = hankel(&[
        "factorize",
        "--family",
        "hilbert",
        "--n",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_route_group_is_usage_error() {
    let out = hankel(&["det", "--family", "hilbert", "--n", "3"]);
    assert_eq!(code(&out), 2);

    let out = hankel(&["inverse", "--family", "hilbert", "--n", "1"]);
    assert_eq!(code(&out), 2);

    let out = hankel(&["verify"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn invalid_parameters_are_usage_errors() {
    let out = hankel(&[
        "det", "--family", "hilbert", "--t", "0", "--n", "1", "--closed",
    ]);
    assert_eq!(code(&out), 2);

    let out = hankel(&[
        "det",
        "--family",
        "generalized",
        "--s",
        "-2",
        "--n",
        "1",
        "--closed",
    ]);
    assert_eq!(code(&out), 2);

    let out = hankel(&[
        "det", "--family", "hilbert", "--s", "2", "--n", "1", "--closed",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("fixes s = 1"));

    let out = hankel(&["det", "--family", "hilbert", "--n", "2..1", "--closed"]);
    assert_eq!(code(&out), 2);
}
