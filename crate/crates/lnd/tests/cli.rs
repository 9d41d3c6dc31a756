//! Exit-code and output contract of the `lnd` binary.
//!
//! 0 = verified/true, 1 = refuted/false with certificate, 2 = unknown or
//! budget exhausted, 3 = usage/parse error; `--json` emits one object per
//! certificate that round-trips through the `Report` schema.

use std::path::PathBuf;
use std::process::Output;

use lnd::cli::Report;

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn lnd(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_lnd"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn scratch_file(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn apply_prints_the_image() {
    let file = corpus().join("triangular-non-rigid.lnd");
    let out = lnd(&[
        "apply",
        file.to_str().unwrap(),
        "--poly",
        "T - Y^2 + 2*X*Z",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0");

    let out = lnd(&["apply", file.to_str().unwrap(), "--poly", "Z"]);
    assert_eq!(stdout(&out).trim(), "Y");
}

#[test]
fn lnd_check_exit_codes() {
    let file = corpus().join("non-fg-kernel.lnd");
    let out = lnd(&["lnd-check", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["X: 1", "S: 2", "T: 3", "U: 4", "V: 2"] {
        assert!(text.contains(line), "missing `{line}` in {text}");
    }

    // A non-nilpotent derivation stays unknown at any cap: exit 2.
    let bad = scratch_file("not-lnd.lnd", "ring Q[Y]\nder D: Y -> Y\n");
    let out = lnd(&["lnd-check", &bad, "--cap", "32"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exp_refutes_non_kernel_multipliers() {
    let file = corpus().join("triangular-non-rigid.lnd");
    let out = lnd(&["exp", file.to_str().unwrap(), "--poly", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Y -> X + Y"));
    assert!(text.contains("Z -> 1/2*X + Y + Z"));

    let out = lnd(&["exp", file.to_str().unwrap(), "--poly", "Y"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn coords_check_verdicts() {
    let file = corpus().join("triangular-non-rigid.lnd");
    let out = lnd(&["coords-check", file.to_str().unwrap(), "--tuple", "t2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("T -> Y^2 - 2*X*Z + T"));

    let bad = scratch_file(
        "bad-coords.lnd",
        "ring Q[X][T,Y,Z]\nder D: Y -> X\ntuple t = (X*T, Y, Z)\n",
    );
    let out = lnd(&["coords-check", &bad, "--tuple", "t"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("jacobian"));
}

#[test]
fn gamma_and_rigid_pair_verdicts() {
    let file = corpus().join("triangular-non-rigid.lnd");
    let f = file.to_str().unwrap();
    assert_eq!(
        lnd(&["gamma-check", f, "--tuple", "t1", "--rank", "2"]).status.code(),
        Some(0)
    );
    // (Y, T, Z) has DY = X in first position: refuted.
    let moved = scratch_file(
        "gamma-no.lnd",
        "ring Q[X][T,Y,Z]\nder D: T -> 0, Y -> X, Z -> Y\ntuple t = (Y, T, Z)\n",
    );
    let out = lnd(&["gamma-check", &moved, "--tuple", "t", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = lnd(&["rigid-pair", f, "--tuple", "t1", "--tuple", "t2", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("non-rigidity certificate"));

    let out = lnd(&["rigid-pair", f, "--tuple", "t1", "--tuple", "t1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));

    // Gamma membership failure of an input tuple is a refutation with its
    // own certificate kind.
    let out = lnd(&[
        "rigid-pair", &moved, "--tuple", "t", "--tuple", "t", "--rank", "2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.certificate["kind"], "gamma-membership-failed");
}

#[test]
fn rank_bound_and_irreducible() {
    let file = corpus().join("non-fg-kernel.lnd");
    let f = file.to_str().unwrap();
    let out = lnd(&["rank-bound", f, "--tuple", "t1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rank upper bound: 3"));

    assert_eq!(lnd(&["irreducible", f]).status.code(), Some(0));

    let reducible = scratch_file(
        "reducible.lnd",
        "ring Q[X][Y,Z]\nder D: Y -> X^2, Z -> X*Y\n",
    );
    let out = lnd(&["irreducible", &reducible, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.verdict, "reducible");
    assert_eq!(report.certificate["gcd"], "X");
}

#[test]
fn kernel_commands() {
    let file = corpus().join("rank-two-rigid.lnd");
    let f = file.to_str().unwrap();
    let out = lnd(&["kernel-basis", f, "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dimension 4"));

    let out = lnd(&["kernel-rounds", f]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("stabilized after round"));

    let non_fg = corpus().join("non-fg-kernel.lnd");
    let out = lnd(&["kernel-rounds", non_fg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("non-stabilized"));

    // Budget exhaustion is exit 2, not a wrong answer.
    let out = lnd(&["kernel-basis", f, "--degree", "9", "--dim-budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gcd_and_member() {
    let file = corpus().join("rank-two-rigid.lnd");
    let f = file.to_str().unwrap();
    let out = lnd(&["gcd", f, "--poly", "X^3*Y - X^2*Z", "--poly", "X^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "X^2");

    let out = lnd(&["member", f, "--poly", "Y^4 - 4*X*Y^2*Z + 4*X^2*Z^2", "--gen", "P"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("preimage: _t1^2"));

    let out = lnd(&["member", f, "--poly", "Z", "--gen", "P"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(lnd(&["bogus-subcommand"]).status.code(), Some(3));
    assert_eq!(lnd(&["apply", "/nonexistent.lnd", "--poly", "X"]).status.code(), Some(3));
    let file = corpus().join("rank-two-rigid.lnd");
    let f = file.to_str().unwrap();
    assert_eq!(lnd(&["apply", f, "--poly", "Q + 1"]).status.code(), Some(3));
    assert_eq!(lnd(&["gcd", f, "--poly", "X"]).status.code(), Some(3));
    let zero = scratch_file("zero-der.lnd", "ring Q[Y]\nder D: Y -> 0\n");
    assert_eq!(lnd(&["irreducible", &zero]).status.code(), Some(3));
}

#[test]
fn json_reports_round_trip_and_are_stable() {
    let file = corpus().join("triangular-non-rigid.lnd");
    let f = file.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["apply", f, "--poly", "Tprime", "--json"],
        vec!["lnd-check", f, "--json"],
        vec!["exp", f, "--poly", "X", "--json"],
        vec!["coords-check", f, "--tuple", "t2", "--json"],
        vec!["gamma-check", f, "--tuple", "t2", "--rank", "2", "--json"],
        vec!["rigid-pair", f, "--tuple", "t1", "--tuple", "t2", "--rank", "2", "--json"],
        vec!["irreducible", f, "--json"],
    ];
    for args in &commands {
        let first = lnd(args);
        let second = lnd(args);
        assert_eq!(first.stdout, second.stdout, "unstable output for {args:?}");
        for line in stdout(&first).lines() {
            let report: Report = serde_json::from_str(line).unwrap();
            let reserialized = serde_json::to_string(&report).unwrap();
            assert_eq!(reserialized, line, "schema round-trip failed");
            assert!(!report.command.is_empty());
            assert!(!report.verdict.is_empty());
        }
    }
}

#[test]
fn verify_corpus_json_emits_one_object_per_expectation() {
    let dir = corpus();
    let out = lnd(&["verify-corpus", dir.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 21);
    for line in lines {
        let report: Report = serde_json::from_str(line).unwrap();
        assert_eq!(report.command, "verify-corpus");
        assert_eq!(report.verdict, "pass");
    }
}
