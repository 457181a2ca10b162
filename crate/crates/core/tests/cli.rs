//! Runs the `hilbert-quasi` binary end to end.

mod common;

use std::process::{Command, Output};

use hilbert_quasi::cli::SolutionDocument;
use hilbert_quasi::RationalPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbert-quasi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Parses `"1/16*x^2 + 1/2*x - 3"` as printed by the text format.
fn parse_text_poly(s: &str) -> RationalPolynomial {
    let mut coeffs: Vec<BigRational> = Vec::new();
    let normalized = s.replace(" - ", " + -");
    for term in normalized.split(" + ") {
        let term = term.trim();
        if term == "0" {
            continue;
        }
        let (c, deg) = match term.split_once("x") {
            Some((c, rest)) => {
                let deg = rest.strip_prefix('^').map_or(1, |e| e.parse().unwrap());
                let c = c.trim_end_matches('*');
                let c = match c {
                    "" => "1",
                    "-" => "-1",
                    other => other,
                };
                (c, deg)
            }
            None => (term, 0),
        };
        let value = match c.split_once('/') {
            Some((n, d)) => BigRational::new(n.parse::<BigInt>().unwrap(), d.parse::<BigInt>().unwrap()),
            None => BigRational::from_integer(c.parse::<BigInt>().unwrap()),
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigRational::from_integer(0.into()));
        }
        coeffs[deg] = value;
    }
    RationalPolynomial::new(coeffs)
}

fn text_polys(text: &str) -> Vec<RationalPolynomial> {
    text.lines()
        .filter_map(|l| l.strip_prefix("P_"))
        .filter_map(|l| l.split_once("(x) = "))
        .map(|(_, p)| parse_text_poly(p))
        .collect()
}

#[test]
fn ring_text_output_matches_reference() {
    let out = stdout(&["--weights", "1 2 3 4 6"]);
    let polys = text_polys(&out);
    assert_eq!(polys.len(), 12);
    for (i, desc) in common::RING_12346 {
        assert_eq!(polys[*i], common::poly(desc), "residue {i}");
    }
}

#[test]
fn quotient_text_output_matches_reference() {
    let out = stdout(&["--weights", "1 2 3 4 6", "--ideal", "x1^3, x2*x3"]);
    let polys = text_polys(&out);
    assert_eq!(polys.len(), 12);
    for (i, desc) in common::QUOTIENT_12346 {
        assert_eq!(polys[*i], common::poly(desc), "residue {i}");
    }
}

#[test]
fn scaled_weights_have_zero_odd_residues() {
    let out = stdout(&["--weights", "2 4 8 16 32", "--format", "json"]);
    let doc: SolutionDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.polynomials.len(), 32);
    assert!(doc.polynomials.iter().skip(1).step_by(2).all(Vec::is_empty));
    assert_eq!(doc.gcd, 2);
    assert_eq!(doc.normalized_weights, vec![1, 2, 4, 8, 16]);
    let polys = doc.rational_polynomials().unwrap();
    for (i, desc) in common::RING_2_TO_32 {
        assert_eq!(polys[*i], common::poly(desc), "residue {i}");
    }
}

#[test]
fn json_round_trips_byte_for_byte() {
    let out = stdout(&[
        "--weights", "1 2 3 4 6", "--ideal", "x1^3, x2*x3", "--format", "json", "--eval", "12",
        "--table", "10", "--verify",
    ]);
    let doc: SolutionDocument = serde_json::from_str(&out).unwrap();
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(out, again);
    assert!(doc.verification.is_some());
    assert_eq!(doc.table.as_ref().unwrap().len(), 11);
    for p in &doc.polynomials {
        for c in p {
            assert!(!c.den.starts_with('-') && c.den != "0");
        }
    }
}

#[test]
fn text_and_json_agree() {
    for args in [
        vec!["--weights", "1 2 3 4 6"],
        vec!["--weights", "3 5 7", "--ideal", "x1^2*x3, x2^3"],
        vec!["--weights", "4 6"],
    ] {
        let text = stdout(&args);
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let doc: SolutionDocument = serde_json::from_str(&stdout(&json_args)).unwrap();
        assert_eq!(text_polys(&text), doc.rational_polynomials().unwrap(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--weights", "2 3 5", "--structure", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn structure_and_evaluations_in_text() {
    let out = stdout(&["--weights", "1 2 3 4 6", "--structure", "--eval", "12", "--eval", "0"]);
    assert!(out.contains("observed periods: [12, 6, 2, 1, 1]"));
    assert!(out.contains("fixed part: 1/3456*x^4 + 1/108*x^3"));
    assert!(out.contains("periodic part degree: 2"));
    assert!(out.contains("P(12) = 44"));
    assert!(out.contains("P(0) = 1"));
}

#[test]
fn latex_has_one_row_per_residue() {
    let out = stdout(&["--weights", "1 2 3 4 6", "--format", "latex"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("$P_{")).count(), 12);
    assert!(out.contains("$P_{0}(x)$ & $=$ & $\\frac{1}{3456}x^{4}"));
}

#[test]
fn spec_file_and_output_file() {
    let dir = std::env::temp_dir().join(format!("hq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("problem.json");
    let dest = dir.join("out.json");
    std::fs::write(
        &spec,
        r#"{"weights": [1, 2, 3, 4, 6], "ideal": ["x1^3", "[0,1,1,0,0]"], "format": "json"}"#,
    )
    .unwrap();
    let out = run(&["--spec", spec.to_str().unwrap(), "--output", dest.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let doc: SolutionDocument = serde_json::from_str(&std::fs::read_to_string(&dest).unwrap()).unwrap();
    assert_eq!(doc.hvector, vec![1, 0, 0, -1, 0, -1, 0, 0, 1]);
    assert!(doc.structure.is_none());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let parse = run(&["--weights", "1 x"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(!parse.stderr.is_empty());
    assert_eq!(run(&["--weights", "1 2", "--ideal", "x3"]).status.code(), Some(2));
    assert_eq!(run(&["--weights", "1 2", "--ideal", "x1^q"]).status.code(), Some(2));
    assert_eq!(run(&["--weights", "1 0"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    let guard = run(&["--weights", "1 2 3", "--max-n", "10"]);
    assert_eq!(guard.status.code(), Some(3));
    assert!(guard.stdout.is_empty());
}
