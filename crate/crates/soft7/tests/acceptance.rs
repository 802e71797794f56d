//! Acceptance gate: fifteen numbered criteria, one test each, each printing a
//! single "ACCEPTANCE n: PASS/FAIL" line (run with --nocapture to see them).
//!
//! Criteria 1-6 and 8-14 exercise the library directly or through the named
//! suite; 15 drives the compiled binary. Criterion 7 asserts an identity that
//! is demonstrably false (see the failure message), so that test is expected
//! to stay red together with the suite-exit half of 15.

use num::{One, Zero};
use soft7::appendix;
use soft7::octonion::{structure_constant, Octonion};
use soft7::operators::left_op;
use soft7::scalar::{ratio, Rational, Scalar};
use soft7::torsion::{ascending_triples, closed_form, solve, Sign};
use soft7::verify::{run_suite, Report, SuiteConfig, PHI_W_TABLE};
use std::process::Command;
use std::sync::OnceLock;

type Oct = Octonion<Rational>;

fn exact_report() -> &'static Report {
    static REPORT: OnceLock<Report> = OnceLock::new();
    REPORT.get_or_init(|| {
        run_suite::<Rational>(&SuiteConfig {
            seed: 0,
            points: 50,
        })
    })
}

fn float_report() -> &'static Report {
    static REPORT: OnceLock<Report> = OnceLock::new();
    REPORT.get_or_init(|| {
        run_suite::<f64>(&SuiteConfig {
            seed: 0,
            points: 50,
        })
    })
}

fn check<'a>(report: &'a Report, name: &str) -> &'a soft7::verify::CheckResult {
    report
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no check named {name}"))
}

fn verdict(n: usize, ok: bool) {
    println!("ACCEPTANCE {n}: {}", if ok { "PASS" } else { "FAIL" });
}

fn phi_w() -> Oct {
    Oct::from_ints([1, 2, 3, 4, 5, 6, 7, 8])
}

#[test]
fn acceptance_01_pole_reduction() {
    let mut ok = true;
    for pole in [Oct::unit(0), Oct::unit(0).neg()] {
        for (i, j, k) in ascending_triples() {
            let f = Rational::from_int(structure_constant(i, j, k));
            ok &= closed_form(Sign::Plus, i, j, k, &pole).unwrap() == f;
            ok &= closed_form(Sign::Minus, i, j, k, &pole).unwrap() == -f;
        }
    }
    verdict(1, ok);
    assert!(ok);
}

#[test]
fn acceptance_02_witness_point_table() {
    let w = phi_w();
    let wf = Octonion::<f64>::from_ints([1, 2, 3, 4, 5, 6, 7, 8]);
    let mut ok = true;
    for ((i, j, k), p, q) in PHI_W_TABLE {
        let want: Rational = ratio(p, q);
        ok &= closed_form(Sign::Plus, i, j, k, &w).unwrap() == want;
        let wantf = p as f64 / q as f64;
        ok &= (closed_form(Sign::Plus, i, j, k, &wf).unwrap() - wantf).abs() <= 1e-12;
    }
    // spot values called out explicitly
    ok &= closed_form(Sign::Plus, 1, 2, 3, &w).unwrap() == ratio(-12, 17);
    ok &= closed_form(Sign::Plus, 3, 6, 5, &w).unwrap().is_zero();
    ok &= closed_form(Sign::Plus, 4, 2, 6, &w).unwrap() == ratio(3, 17);
    verdict(2, ok);
    assert!(ok);
}

#[test]
fn acceptance_03_witness_commutator_column() {
    // on the unnormalized representative (1,...,8); the normalized column is
    // this divided by r^2 = 204, i.e. sqrt(51) times (-4/51,...,-5/51)
    let got = left_op::<Rational>(1)
        .commutator(&left_op(2))
        .apply(&phi_w());
    let ok = got == Oct::from_ints([-8, -6, 4, 2, 16, -14, 12, -10]);
    verdict(3, ok);
    assert!(ok);
}

#[test]
fn acceptance_04_solved_f12_row() {
    // the solved row f_{12k}, k = 1..7: the linear-solve route against the
    // transcribed polynomial formulas at 20 random rational points
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    let mut ok = true;
    for _ in 0..20 {
        let phi = Octonion(Rational::random_coords(&mut rng));
        let row = solve(Sign::Plus, 1, 2, &phi).unwrap();
        ok &= row[0].is_zero() && row[1].is_zero();
        for k in 3..8 {
            ok &= row[k - 1] == appendix::evaluate(Sign::Plus, 1, 2, k, &phi).unwrap();
        }
    }
    // the frozen values at (1,...,8): (0,0,-12/17,4/17,8/17,8/17,-1/17)
    let row = solve(Sign::Plus, 1, 2, &phi_w()).unwrap();
    let want: [Rational; 7] = [
        ratio(0, 1),
        ratio(0, 1),
        ratio(-12, 17),
        ratio(4, 17),
        ratio(8, 17),
        ratio(8, 17),
        ratio(-1, 17),
    ];
    ok &= row == want;
    verdict(4, ok);
    assert!(ok);
}

#[test]
fn acceptance_05_route_agreement() {
    let exact = exact_report();
    let float = float_report();
    let ok = check(exact, "route-agreement").passed
        && check(exact, "appendix-agreement").passed
        && check(exact, "route-agreement").points_tested >= 50
        && check(float, "route-agreement").passed
        && check(float, "appendix-agreement").passed;
    verdict(5, ok);
    assert!(ok);
}

#[test]
fn acceptance_06_matrix_identities() {
    let report = exact_report();
    let ok = check(report, "anticommutators").passed && check(report, "matrix-jacobi").passed;
    verdict(6, ok);
    assert!(ok);
}

#[test]
fn acceptance_07_contracted_jacobi() {
    let report = exact_report();
    let contracted = check(report, "contracted-jacobi");
    let witness = check(report, "raw-jacobi-witness");
    let ok = contracted.passed && witness.passed;
    verdict(7, ok);
    assert!(
        ok,
        "the contraction sum_t resid_ijk^t E_t phi cannot vanish: the seven vectors E_t phi \
         are mutually orthogonal and nonzero, so it vanishes only where every scalar residual \
         does, and the raw-jacobi-witness check finds nonzero residuals (e.g. 30/17 at the \
         integer witness point). First contraction found: {:?}",
        contracted.witness
    );
}

#[test]
fn acceptance_08_quadratic_identities() {
    let report = exact_report();
    let ok = check(report, "pure-spinor").passed
        && check(report, "mixed-quadratic-zero").passed
        && check(report, "pure-spinor").points_tested >= 50;
    verdict(8, ok);
    assert!(ok);
}

#[test]
fn acceptance_09_left_right_asymmetry() {
    let w = Oct::from_ints([1, 0, 0, 0, 0, 0, 0, 1]);
    let one = Rational::one();
    // confirmed through the independent polynomial transcription as well
    let ok = closed_form(Sign::Plus, 1, 2, 4, &w).unwrap() == one
        && closed_form(Sign::Minus, 1, 2, 4, &w).unwrap() == one
        && appendix::evaluate(Sign::Plus, 1, 2, 4, &w).unwrap() == one
        && appendix::evaluate(Sign::Minus, 1, 2, 4, &w).unwrap() == one
        && check(exact_report(), "left-right-asymmetry-witness").passed;
    verdict(9, ok);
    assert!(ok);
}

#[test]
fn acceptance_10_clifford_and_self_duality() {
    let report = exact_report();
    let ok = check(report, "clifford").passed && check(report, "self-duality").passed;
    verdict(10, ok);
    assert!(ok);
}

#[test]
fn acceptance_11_g2() {
    let report = exact_report();
    let ok = check(report, "g2-constraints").passed
        && check(report, "g2-rank").passed
        && check(report, "g2-fixes-identity").passed
        && check(report, "g2-closure").passed;
    verdict(11, ok);
    assert!(ok);
}

#[test]
fn acceptance_12_so8() {
    let ok = check(exact_report(), "so8-relations").passed;
    verdict(12, ok);
    assert!(ok);
}

#[test]
fn acceptance_13_decompositions() {
    let ok = check(exact_report(), "decompositions").passed;
    verdict(13, ok);
    assert!(ok);
}

#[test]
fn acceptance_14_generalized_torsion() {
    let c = check(exact_report(), "generalized-torsion-relation");
    let ok = c.passed && c.points_tested >= 20;
    verdict(14, ok);
    assert!(ok);
}

#[test]
fn acceptance_15_cli() {
    let bin = env!("CARGO_BIN_EXE_soft7");
    let torsion = Command::new(bin)
        .args([
            "torsion",
            "--point",
            "1,2,3,4,5,6,7,8",
            "--sign",
            "+",
            "--route",
            "closed",
            "--format",
            "json",
        ])
        .output()
        .expect("binary runs");
    let json_ok = torsion.status.code() == Some(0)
        && String::from_utf8_lossy(&torsion.stdout).contains("-12/17");

    let verify = Command::new(bin)
        .args(["verify", "--model", "exact", "--points", "3"])
        .output()
        .expect("binary runs");
    let verify_ok = verify.status.code() == Some(0);

    let ok = json_ok && verify_ok;
    verdict(15, ok);
    assert!(
        ok,
        "json torsion half: {json_ok}; verify exit half: {verify_ok} (exit {:?}) — the suite \
         exits 1 because its contracted-jacobi check fails on a genuinely false identity; see \
         acceptance 7",
        verify.status.code()
    );
}
