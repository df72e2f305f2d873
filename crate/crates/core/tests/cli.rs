use std::process::Command;

use tl_markov::cli::run;
use tl_markov::markov::{MatrixJson, SquareMatrix};
use tl_markov::ortho::{verify, OrthoJson, VerifyOptions};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn tl(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tl-markov").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn pair_examples() {
    let o = tl(&["pair", "1,3,2,1,1", "2,1,2,1,1"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "q^2\n"));
    assert_eq!(tl(&["pair", "1,1", "2,1"]).stdout, "q\n");
    assert_eq!(tl(&["pair", "", ""]).stdout, "1\n");
    let j = tl(&["pair", "2,1", "2,1", "--format", "json"]).stdout;
    let v: serde_json::Value = serde_json::from_str(&j).unwrap();
    assert_eq!(v["exponent"], 2);
}

#[test]
fn chebyshev_examples() {
    assert_eq!(tl(&["chebyshev", "3"]).stdout, "q^3 - 2*q\n");
    assert_eq!(tl(&["chebyshev", "0"]).stdout, "1\n");
    assert_eq!(tl(&["chebyshev", "-1"]).stdout, "0\n");
    assert_eq!(tl(&["chebyshev", "2", "--at", "1"]).stdout, "0\n");
    assert_eq!(tl(&["chebyshev", "2", "--at", "-1/2"]).stdout, "-3/4\n");
    let f: f64 = tl(&["chebyshev", "3", "--at", "1.41421356"]).stdout.trim().parse().unwrap();
    assert!(f.abs() < 1e-7);
    let o = tl(&["chebyshev", "-2"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("-2"));
}

#[test]
fn usage_errors_exit_two() {
    let o = tl(&["pair", "1,x", "1,1"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("\"x\""), "{}", o.stderr);
    assert!(o.stdout.is_empty());

    let o = tl(&["pair", "3,1,1", "1,1,1"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("a_3"), "{}", o.stderr);

    assert_eq!(tl(&["pair", "1,1", "1,1,1"]).code, 2);
    assert_eq!(tl(&["frobnicate"]).code, 2);
    assert_eq!(tl(&["gram", "2", "--bogus"]).code, 2);
    assert_eq!(tl(&["hasse", "2", "--format", "csv"]).code, 2);
    assert_eq!(tl(&["gram", "2", "--format", "dot"]).code, 2);
    assert_eq!(tl(&["verify", "0"]).code, 2);
    assert_eq!(tl(&[]).code, 2);
}

#[test]
fn size_guardrail() {
    let o = tl(&["enumerate", "9"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("--max-n"));
    let o = tl(&["enumerate", "9", "--max-n", "9"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 4862);
    assert_eq!(tl(&["gram", "9", "--max-n", "8"]).code, 2);
}

#[test]
fn enumerate_output_parses_back() {
    let o = tl(&["enumerate", "4"]);
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 14);
    for a in &lines {
        let p = tl(&["pair", a, a]);
        assert_eq!((p.code, p.stdout.as_str()), (0, "q^4\n"), "{a}");
    }
    let j = tl(&["enumerate", "3", "--format", "json"]).stdout;
    let v: Vec<Vec<u32>> = serde_json::from_str(&j).unwrap();
    assert_eq!(v[4], vec![3, 2, 1]);
}

#[test]
fn gram_json_is_canonical() {
    for n in 0..=4 {
        let s = n.to_string();
        let text = tl(&["gram", &s, "--format", "json"]).stdout;
        let parsed: MatrixJson = serde_json::from_str(&text).unwrap();
        let m = SquareMatrix::try_from(parsed).unwrap();
        let again = serde_json::to_string_pretty(&m.to_json()).unwrap() + "\n";
        assert_eq!(again, text);
        assert!(!text.contains('.'), "floats in gram JSON");
    }
    let text = tl(&["gram", "1", "--format", "json"]).stdout;
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["basis", "entries", "n"]);
}

#[test]
fn gram_text_and_csv() {
    assert_eq!(tl(&["gram", "2"]).stdout, "(1,1): q^2, q\n(2,1): q, q^2\n");
    assert_eq!(
        tl(&["gram", "2", "--format", "csv"]).stdout,
        "basis,\"(1,1)\",\"(2,1)\"\n\"(1,1)\",q^2,q\n\"(2,1)\",q,q^2\n"
    );
}

#[test]
fn orthogonalize_json_shape() {
    let text = tl(&["orthogonalize", "2", "--format", "json"]).stdout;
    let parsed: OrthoJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.n, 2);
    assert_eq!(parsed.p[1][0].to_string(), "-1/q");
    assert_eq!(parsed.diagonal[1].to_string(), "q^2 - 1");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["P", "basis", "diagonal", "n"]);
    assert!(tl(&["orthogonalize", "2"]).stdout.contains("e'(2,1) = (-1/q)*e(1,1) + e(2,1)"));
}

#[test]
fn verify_exit_code_tracks_report() {
    for n in 1..=4 {
        let o = tl(&["verify", &n.to_string()]);
        // n = 3 includes the printed fixture matrices and fails on one of them
        let report = verify(n, VerifyOptions::default()).unwrap();
        assert_eq!(o.code == 0, report.passed, "n={n}");
        assert_eq!(o.stdout, report.render_text());
    }
    let o = tl(&["verify", "3", "--det-oracle"]);
    assert_eq!(o.code, 1);
    for name in [
        "unitriangularity",
        "downset support",
        "orthogonality",
        "diagonal formula",
        "determinant oracle",
    ] {
        assert!(o.stdout.contains(&format!("PASS {name}")), "{name}\n{}", o.stdout);
    }
    assert!(o.stdout.contains("FAIL fixture matrices"));
    assert!(o.stdout.contains("(5,4)"));

    let j = tl(&["verify", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(j.stderr.contains("orthogonality:"));
}

#[test]
fn hasse_dot_and_text() {
    let dot = tl(&["hasse", "2", "--format", "dot"]).stdout;
    assert!(dot.starts_with("digraph hasse_2 {"));
    assert!(dot.contains("\"(1,1)\" -> \"(2,1)\";"));
    assert_eq!(tl(&["hasse", "2"]).stdout, "(1,1) -> (2,1)\n");
}

#[test]
fn output_is_deterministic_and_out_flag_writes_file() {
    for args in [
        &["gram", "3", "--format", "json"][..],
        &["orthogonalize", "3", "--format", "csv"],
        &["verify", "3"],
        &["hasse", "3", "--format", "dot"],
    ] {
        assert_eq!(tl(args).stdout, tl(args).stdout);
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let p = path.to_str().unwrap();
    let o = tl(&["gram", "2", "--format", "csv", "--out", p]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), tl(&["gram", "2", "--format", "csv"]).stdout);
}

#[test]
fn binary_forwards_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tl-markov");
    let out = Command::new(bin).args(["pair", "1,3,2,1,1", "2,1,2,1,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"q^2\n");
    let out = Command::new(bin).args(["pair", "1,,1", "1,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
