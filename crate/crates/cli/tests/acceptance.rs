//! Acceptance gate: one test per release criterion, each pinned to
//! independently derived values and a wall-clock budget.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pommaret_core::bounds::{bezout_classical, bezout_dim, noether_exponent_bound_dim1};
use pommaret_core::invariants::{degree, degree_via_formula, hilbert_series};
use pommaret_core::{
    analyze, buchberger, degree_by_differences, ideal_membership, macaulay_hf,
    monomial_ideal_dimension, parse_ideal, parse_polynomial, polynomial_pommaret_basis,
    restrict_basis, saturation_basis, DegreeSequence, HFTable, IdealInput, Polynomial,
    VariableContext,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn load(name: &str) -> IdealInput {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture readable");
    parse_ideal(&text).expect("fixture parses")
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pommaret"))
}

/// Four monomial generators in three variables: already quasi-stable, the
/// completion adds nothing, and every invariant is read off the basis.
#[test]
fn criterion_1_monomial_fixture_invariants() {
    let start = Instant::now();
    let a = analyze(&load("gin3.ideal"), 0, 8).expect("analysis succeeds");
    assert_eq!(a.transform.tries, 0, "input is quasi-stable as given");

    let mut lts: Vec<Vec<u32>> = a
        .basis
        .elements()
        .iter()
        .map(|e| {
            assert_eq!(e.poly().terms().len(), 1, "basis stays monomial");
            e.leading_monomial().exps().to_vec()
        })
        .collect();
    lts.sort();
    let mut expected = vec![
        vec![0, 3, 0],
        vec![1, 0, 1],
        vec![1, 1, 0],
        vec![2, 0, 0],
    ];
    expected.sort();
    assert_eq!(lts, expected, "basis equals the four input monomials");

    let series = hilbert_series(&a.basis);
    assert_eq!(series.numerator, vec![1, 2]);
    assert_eq!(series.dimension, 1);
    assert_eq!(a.invariants.dimension, 1);
    assert_eq!(a.invariants.degree, 3);
    assert_eq!(a.invariants.regularity, 3);
    assert_eq!(a.invariants.depth, 0);
    assert_eq!(a.invariants.satiety, 2);
    assert_eq!(a.invariants.hilbert_regularity, 1);
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1s");
}

/// Seven-variable monomial fixture where Castelnuovo-Mumford regularity
/// exceeds the Hilbert regularity plus depth lower bound.
#[test]
fn criterion_2_regularity_exceeds_hilbert_regularity() {
    let start = Instant::now();
    let a = analyze(&load("gin7.ideal"), 0, 8).expect("analysis succeeds");
    assert_eq!(a.invariants.regularity, 3);
    assert_eq!(a.invariants.hilbert_regularity, 0);
    assert_eq!(a.invariants.depth, 4);
    let reg = a.invariants.regularity as usize;
    let hilb = a.invariants.hilbert_regularity as usize;
    assert_ne!(reg, hilb + a.invariants.depth);
    assert!(reg < hilb + a.invariants.depth);
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1s");
}

/// Restriction to the last coordinate hyperplanes: the degree stays 1 while
/// two variables survive, then jumps to 6 once the plateau is cut.
#[test]
fn criterion_3_restriction_degrees() {
    let start = Instant::now();
    let a = analyze(&load("quasistable5.ideal"), 0, 8).expect("analysis succeeds");
    assert_eq!(a.transform.tries, 0, "input is quasi-stable as given");
    assert_eq!(a.invariants.dimension, 3);
    assert_eq!(a.invariants.degree, 1);

    let r4 = restrict_basis(&a.basis, 4);
    assert_eq!(degree(&hilbert_series(&r4)), 1);

    let r3 = restrict_basis(&a.basis, 3);
    let s3 = hilbert_series(&r3);
    assert_eq!(s3.numerator, vec![1, 2, 2, 1]);
    assert_eq!(degree(&s3), 6);
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1s");
}

/// Large binomial fixture: the rank oracle and the closed-form degree agree
/// on 24, the dimension-aware product bound tightens 512 to 64, and the
/// random change of coordinates completes within budget.
#[test]
fn criterion_4_binomial_fixture_degree_both_paths() {
    let input = load("eisenbud_sturmfels.ideal");

    let oracle_start = Instant::now();
    let gb = buchberger(&input.generators).expect("groebner basis");
    assert_eq!(monomial_ideal_dimension(&gb.leading_ideal()), 3);
    let values: Vec<u64> = (0..=12).map(|t| macaulay_hf(&input, t)).collect();
    assert_eq!(
        values,
        vec![1, 9, 36, 88, 162, 261, 384, 531, 702, 897, 1116, 1359, 1626],
        "rank-oracle Hilbert function table"
    );
    let table = HFTable::new(values);
    // Window start 8 sits past the degree where the Hilbert function turns
    // polynomial, so third differences are constant.
    assert_eq!(degree_by_differences(&table, 3, 8).expect("finite differences"), 24);
    assert!(oracle_start.elapsed() < Duration::from_secs(30), "oracle budget 30s");

    let ds = DegreeSequence::new(input.degrees(), input.nvars());
    assert_eq!(bezout_classical(&ds), BigInt::from(512));
    assert_eq!(bezout_dim(&ds, 3).expect("dimension-aware bound"), BigInt::from(64));

    let transform_start = Instant::now();
    let a = analyze(&input, 4, 8).expect("coordinate change succeeds");
    assert_eq!(a.transform.tries, 1, "seed 4 lands a quasi-stable change first try");
    assert_eq!(a.invariants.dimension, 3);
    assert_eq!(degree_via_formula(&a.basis, 3), 24);
    assert_eq!(a.invariants.degree, 24);
    assert!(
        transform_start.elapsed() < Duration::from_secs(600),
        "transform-and-complete budget 10min"
    );
}

/// Complete intersection of two quadrics through a line: Hilbert series
/// (1-t^2)^2 / (1-t)^3 and degree 4 attained by the dimension-aware bound.
#[test]
fn criterion_5_complete_intersection_series() {
    let start = Instant::now();
    let input = load("mora_lazard_2_2.ideal");
    let a = analyze(&input, 0, 8).expect("analysis succeeds");
    let series = hilbert_series(&a.basis);
    assert_eq!(series.numerator, vec![1, 2, 1]);
    assert_eq!(series.dimension, 1);

    // (1 + 2t + t^2)(1 - t)^2 = (1 - t^2)^2 recovers the unreduced form.
    let unreduced = poly_mul(&[1, 2, 1], &[1, -2, 1]);
    assert_eq!(unreduced, vec![1, 0, -2, 0, 1]);

    assert_eq!(a.invariants.dimension, 1);
    assert_eq!(a.invariants.degree, 4, "product of the generator degrees");
    let ds = DegreeSequence::new(input.degrees(), input.nvars());
    assert_eq!(
        bezout_dim(&ds, 1).expect("dimension-aware bound"),
        BigInt::from(4),
        "bound is attained exactly"
    );
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1s");
}

/// Binomial pair in two variables: membership of powers of x + y flips
/// between exponents 4 and 5, and the one-dimensional Noether exponent
/// bound covers the flip point.
#[test]
fn criterion_6_membership_and_noether_exponent() {
    let start = Instant::now();
    let input = load("exconj.ideal");
    let gb = buchberger(&input.generators).expect("groebner basis");

    let ctx = &input.context;
    let expected: Vec<Polynomial> = ["x*y^3 + y^4", "x^3 + y^3"]
        .iter()
        .map(|s| parse_polynomial(s, ctx).expect("reference polynomial"))
        .collect();
    assert_eq!(gb.elements(), expected.as_slice());

    let p4 = parse_polynomial("(x + y)^4", ctx).expect("power");
    let p5 = parse_polynomial("(x + y)^5", ctx).expect("power");
    assert!(!ideal_membership(&p4, &gb));
    assert!(ideal_membership(&p5, &gb));

    let ds = DegreeSequence::new(input.degrees(), input.nvars());
    let bound = noether_exponent_bound_dim1(&ds, 0);
    assert_eq!(bound, BigInt::from(6));
    assert!(bound >= BigInt::from(5), "bound covers the true exponent");
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1s");
}

/// Saturation of the worked three-variable example: canonical generators,
/// agreement with the hand-computed restriction at x3 = 0, and degree
/// preserved at 2.
#[test]
fn criterion_7_saturation_canonical_form() {
    let start = Instant::now();
    let input = load("saturation3.ideal");
    let a = analyze(&input, 0, 8).expect("analysis succeeds");
    assert_eq!(a.transform.tries, 0);
    assert_eq!(a.invariants.satiety, 3);
    assert_eq!(a.invariants.degree, 2);

    let satgb = saturation_basis(&a.basis).expect("saturation");
    let ctx = &input.context;
    let expected: Vec<Polynomial> = ["x2^2 + 4/5*x2*x3 + 1/5*x3^2", "x1 + x2"]
        .iter()
        .map(|s| parse_polynomial(s, ctx).expect("reference polynomial"))
        .collect();
    assert_eq!(satgb.elements(), expected.as_slice());
    let lts: Vec<Vec<u32>> = satgb
        .elements()
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").exps().to_vec())
        .collect();
    assert_eq!(lts, vec![vec![0, 2, 0], vec![1, 0, 0]]);

    // The x3 = 0 image of the saturation generates the same plane ideal as
    // the reference quadruple computed by hand for this example.
    let ctx2 = VariableContext::new(vec!["x1".into(), "x2".into()]);
    let reference: Vec<Polynomial> = ["5*x2^2", "2*x1*x2 + 2*x2^2", "x1^2 + x1*x2", "x1 + x2"]
        .iter()
        .map(|s| parse_polynomial(s, &ctx2).expect("reference polynomial"))
        .collect();
    let reference_gb = buchberger(&reference).expect("plane groebner basis");
    let image: Vec<Polynomial> = satgb.elements().iter().map(|g| g.substitute_zero(2)).collect();
    assert_eq!(reference_gb.elements(), image.as_slice());

    let satbasis = polynomial_pommaret_basis(&satgb).expect("saturation is quasi-stable");
    assert_eq!(degree(&hilbert_series(&satbasis)), 2, "saturation preserves degree");
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1s");
}

/// Every fixture passes the full verification battery through the CLI, plus
/// one hundred random quasi-stable monomial ideals, inside five minutes.
#[test]
fn criterion_8_verification_battery() {
    let start = Instant::now();
    let fixtures = [
        ("gin3.ideal", "0"),
        ("gin7.ideal", "0"),
        ("quasistable5.ideal", "0"),
        ("mora_lazard_2_2.ideal", "0"),
        ("exconj.ideal", "0"),
        ("saturation3.ideal", "0"),
        ("eisenbud_sturmfels.ideal", "4"),
    ];
    for (name, seed) in fixtures {
        let out = bin()
            .args(["verify", fixture(name).to_str().unwrap(), "--seed", seed])
            .output()
            .expect("binary runs");
        let report: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("verify emits JSON");
        assert!(
            out.status.success() && report["passed"] == serde_json::json!(true),
            "verification failed for {name}: {report}"
        );
    }

    let out = bin()
        .args(["verify", fixture("gin3.ideal").to_str().unwrap(), "--random", "100"])
        .output()
        .expect("binary runs");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("verify emits JSON");
    assert!(out.status.success() && report["passed"] == serde_json::json!(true));
    assert_eq!(report["targets"].as_array().map(|t| t.len()), Some(101));
    assert!(start.elapsed() < Duration::from_secs(300), "battery budget 5min");
}

/// Repeated CLI invocations are byte-identical across every subcommand.
#[test]
fn criterion_9_deterministic_output() {
    let dir = tempfile::tempdir().expect("tempdir");
    let loose = dir.path().join("loose.ideal");
    std::fs::write(&loose, "ring: x1, x2\npoly: x2^2\n").expect("write");

    let exconj = fixture("exconj.ideal");
    let quasistable5 = fixture("quasistable5.ideal");
    let saturation3 = fixture("saturation3.ideal");
    let gin3 = fixture("gin3.ideal");
    let mora_lazard = fixture("mora_lazard_2_2.ideal");
    let gin7 = fixture("gin7.ideal");
    let runs: Vec<Vec<&str>> = vec![
        vec!["gb", exconj.to_str().unwrap(), "--member", "(x + y)^5"],
        vec!["pommaret", quasistable5.to_str().unwrap()],
        vec!["invariants", saturation3.to_str().unwrap()],
        vec!["hilbert", gin3.to_str().unwrap()],
        vec!["bounds", mora_lazard.to_str().unwrap()],
        vec!["transform", loose.to_str().unwrap()],
        vec!["verify", gin7.to_str().unwrap(), "--random", "5"],
    ];
    for args in &runs {
        let first = bin().args(args).output().expect("binary runs");
        let second = bin().args(args).output().expect("binary runs");
        assert!(first.status.success(), "{args:?} exits 0");
        assert!(!first.stdout.is_empty());
        assert_eq!(first.stdout, second.stdout, "{args:?} repeats byte for byte");
        assert_eq!(first.status.code(), second.status.code());
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
