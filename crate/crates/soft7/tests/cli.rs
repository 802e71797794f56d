//! End-to-end tests of the command-line binary: flags, output shapes, exit
//! codes (0 success / all-pass, 1 verification failure, 2 usage error).

use soft7::octonion::{structure_constant, Octonion};
use soft7::scalar::{Rational, Scalar};
use soft7::torsion::{torsion_table, Route, Sign};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soft7"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn torsion_json_contains_exact_fractions() {
    let out = run(&[
        "torsion",
        "--point",
        "1,2,3,4,5,6,7,8",
        "--sign",
        "+",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["r2"], "204");
    assert_eq!(v["sign"], "+");
    assert_eq!(v["route"], "closed");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 35);
    let first = &entries[0];
    assert_eq!(
        (
            first["i"].as_u64(),
            first["j"].as_u64(),
            first["k"].as_u64()
        ),
        (Some(1), Some(2), Some(3))
    );
    assert_eq!(first["value"], "-12/17");
}

#[test]
fn torsion_at_pole_gives_the_seven_cycles() {
    let out = run(&[
        "torsion",
        "--point",
        "1,0,0,0,0,0,0,0",
        "--sign",
        "+",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,k,value"));
    let mut count = 0;
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let (i, j, k): (usize, usize, usize) = (
            cols[0].parse().unwrap(),
            cols[1].parse().unwrap(),
            cols[2].parse().unwrap(),
        );
        assert_eq!(
            cols[3],
            structure_constant(i, j, k).to_string(),
            "({i},{j},{k})"
        );
        count += 1;
    }
    assert_eq!(count, 35);
}

#[test]
fn torsion_csv_round_trips_exactly() {
    let out = run(&[
        "torsion",
        "--point",
        "3/2,-1,0,7,0.5,2,-9,4",
        "--sign",
        "-",
        "--route",
        "solve",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let point = Octonion::<Rational>([
        Rational::parse_literal("3/2").unwrap(),
        Rational::from_int(-1),
        Rational::from_int(0),
        Rational::from_int(7),
        Rational::parse_literal("0.5").unwrap(),
        Rational::from_int(2),
        Rational::from_int(-9),
        Rational::from_int(4),
    ]);
    let reference = torsion_table(Sign::Minus, &point, Route::Solve).unwrap();
    for line in stdout(&out).lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let (i, j, k): (usize, usize, usize) = (
            cols[0].parse().unwrap(),
            cols[1].parse().unwrap(),
            cols[2].parse().unwrap(),
        );
        let parsed = Rational::parse_literal(cols[3]).unwrap();
        assert_eq!(parsed, reference.get(i, j, k), "({i},{j},{k})");
    }
}

#[test]
fn zero_point_is_a_usage_error() {
    let out = run(&["torsion", "--point", "0,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero point"));
}

#[test]
fn malformed_point_is_a_usage_error() {
    assert_eq!(run(&["torsion", "--point", "1,2,3"]).status.code(), Some(2));
    assert_eq!(
        run(&["torsion", "--point", "a,2,3,4,5,6,7,8"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn unknown_flags_and_families_exit_2() {
    assert_eq!(run(&["torsion"]).status.code(), Some(2));
    assert_eq!(
        run(&["generators", "--family", "e8"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = run(&["verify", "--model", "exact", "--seed", "5", "--points", "2"]);
    // exit 1: the contracted-jacobi check fails by design (false identity)
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["overall"], "fail");
    assert_eq!(v["model"], "exact");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 29);
    for c in checks {
        let expected = if c["name"] == "contracted-jacobi" {
            "fail"
        } else {
            "pass"
        };
        assert_eq!(c["status"], expected, "{}", c["name"]);
        if c["status"] == "fail" {
            assert!(c["witness"].is_string(), "failures must carry a witness");
        }
    }

    assert_eq!(run(&["verify", "--points", "0"]).status.code(), Some(2));
}

#[test]
fn verify_csv_has_header_and_all_checks() {
    let out = run(&[
        "verify", "--model", "float", "--points", "2", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("name,status,points_tested,max_deviation,witness")
    );
    assert_eq!(lines.count(), 29);
}

#[test]
fn generators_families() {
    let g2 = run(&["generators", "--family", "g2"]);
    assert_eq!(g2.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&g2)).unwrap();
    assert_eq!(v["count"], 21);
    assert_eq!(v["span_dimension"], 14);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 21);

    let gl = run(&["generators", "--family", "gamma-left"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&gl)).unwrap();
    assert_eq!(v["count"], 7);
    assert_eq!(v["hermitian"], true);

    let so8 = run(&["generators", "--family", "so8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&so8)).unwrap();
    assert_eq!(v["count"], 28);
    assert_eq!(v["span_dimension"], 28);
    assert_eq!(v["relation_self_check_residual"], 0.0);

    for family in ["coset-v", "coset-s", "coset-s-bar"] {
        let out = run(&["generators", "--family", family]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["count"], 7, "{family}");
    }
}

#[test]
fn soft_at_pole_equals_torsion() {
    let lambda = "2,1,-3,0,5,7,-1,4";
    let soft = run(&[
        "soft",
        "--point",
        "1,0,0,0,0,0,0,0",
        "--lambda",
        lambda,
        "--sign-pair",
        "++",
        "--format",
        "csv",
    ]);
    let torsion = run(&[
        "torsion", "--point", lambda, "--sign", "+", "--format", "csv",
    ]);
    assert_eq!(soft.status.code(), Some(0));
    assert_eq!(stdout(&soft), stdout(&torsion));
}

#[test]
fn soft_defining_relation_residual_is_zero() {
    for sign_pair in ["++", "--"] {
        let out = run(&[
            "soft",
            "--point",
            "1,2,3,4,5,6,7,8",
            "--sign-pair",
            sign_pair,
        ]);
        assert_eq!(out.status.code(), Some(0), "{sign_pair}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["relation_residual"], 0.0, "{sign_pair}");
        assert_eq!(v["entries"].as_array().unwrap().len(), 35);
    }
}
