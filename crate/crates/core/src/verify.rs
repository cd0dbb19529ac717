//! Cross-validation suite: every closed-form invariant is re-derived along an
//! independent route (linear-algebra oracle, combinatorial counts, or a second
//! formula) and the results are compared exactly. One report per ideal.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bounds::{bezout_classical, bezout_dim, bezout_dim_mu, masser_wustholz, DegreeSequence};
use crate::context::VariableContext;
use crate::error::Result;
use crate::groebner::{buchberger, spairs_reduce_to_zero, GroebnerBasis};
use crate::invariants::{
    binom, bound_hilbert_regularity, degree, degree_via_formula, hilbert_function,
    hilbert_polynomial, hilbert_series, numerator_coefficients_direct, volume_function,
};
use crate::monomial::{Exp, Monomial, MonomialIdeal};
use crate::oracle::{
    degree_by_differences, macaulay_hf, monomial_ideal_dimension, monomials_of_degree,
    standard_monomial_count, HFTable,
};
use crate::parse::IdealInput;
use crate::pipeline::{analyze, Analysis};
use crate::pommaret::{
    monomial_pommaret_basis, polynomial_pommaret_basis, restrict_basis, saturation_basis,
};
use crate::poly::Polynomial;

/// One named property verdict. A skipped property counts as passed and says
/// why in the detail.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub target: String,
    pub checks: Vec<PropertyCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Oracle matrices are skipped above this many estimated nonzero cells; the
/// affected checks report the degree range actually covered.
const MACAULAY_CELL_BUDGET: u128 = 3_000_000;
/// Full monomial enumeration is skipped above this many monomials per degree.
const ENUMERATION_BUDGET: u128 = 250_000;
/// S-polynomial pairs checked per basis, and the total dense-term estimate
/// those pairs may cost; smallest lcm degrees run first.
const SPAIR_BUDGET: usize = 2_000;
const SPAIR_CELL_BUDGET: u128 = 150_000;

/// Wrap a monomial ideal as a pipeline input over numbered variables.
pub fn monomial_ideal_input(j: &MonomialIdeal) -> IdealInput {
    let mut generators: Vec<Polynomial> = j
        .gens()
        .iter()
        .map(|m| Polynomial::from_monomial(m.clone()))
        .collect();
    generators.sort_by_key(|g| std::cmp::Reverse(g.homogeneous_degree().unwrap()));
    let source_positions = (1..=generators.len()).collect();
    IdealInput {
        context: VariableContext::numbered(j.nvars()),
        generators,
        source_positions,
    }
}

/// Parse-to-verdict convenience: analyze, then run the property suite.
pub fn verify_input(
    target: &str,
    input: &IdealInput,
    seed: u64,
    max_tries: u32,
    extra_degrees: Exp,
) -> Result<VerifyReport> {
    let analysis = analyze(input, seed, max_tries)?;
    Ok(verify_analysis(target, &analysis, extra_degrees, max_tries))
}

fn push(checks: &mut Vec<PropertyCheck>, name: &'static str, passed: bool, detail: String) {
    checks.push(PropertyCheck {
        name,
        passed,
        detail,
    });
}

fn skip(checks: &mut Vec<PropertyCheck>, name: &'static str, why: &str) {
    push(checks, name, true, format!("skipped ({why})"));
}

/// Estimated nonzero cells of the degree-t Macaulay matrix plus its column
/// count; monotone in t, used to cap oracle work.
fn macaulay_cells(input: &IdealInput, t: Exp) -> u128 {
    let n = input.nvars() as u64;
    let shifts: u128 = input
        .generators
        .iter()
        .filter_map(|g| {
            let dg = g.homogeneous_degree().unwrap();
            (dg <= t).then(|| {
                g.terms().len() as u128 * binom(u64::from(t - dg) + n - 1, n - 1)
            })
        })
        .sum();
    shifts + binom(u64::from(t) + n - 1, n - 1)
}

fn rational(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Run every property against one analysis. `extra_degrees` widens the oracle
/// comparison range beyond the regularity; `max_tries` is reused when the
/// saturated ideal needs its own coordinate search.
pub fn verify_analysis(
    target: &str,
    a: &Analysis,
    extra_degrees: Exp,
    max_tries: u32,
) -> VerifyReport {
    let mut checks = vec![];
    let inv = &a.invariants;
    let basis = &a.basis;
    let n = basis.nvars();
    let dim = inv.dimension;
    let reg = inv.regularity;
    let hilb = inv.hilbert_regularity;
    let series = hilbert_series(basis);
    let hp = hilbert_polynomial(basis);
    let hi = reg + extra_degrees;

    let original_gb: GroebnerBasis = if a.was_transformed() {
        buchberger(&a.input.generators).expect("generators already passed this stage once")
    } else {
        a.gb().clone()
    };
    let lt_original = original_gb.leading_ideal();
    let lt_qs = a.gb().leading_ideal();

    // Numerator two routes: coefficient formula vs synthetic division.
    let direct = numerator_coefficients_direct(basis, dim);
    push(
        &mut checks,
        "numerator-two-routes",
        direct == series.numerator,
        format!("direct {:?} vs division {:?}", direct, series.numerator),
    );

    // Formula Hilbert function vs oracle rank, and the leading-term identity,
    // share the expensive Macaulay ranks per degree.
    {
        let mut formula_ok = true;
        let mut identity_ok = true;
        let mut top: Option<Exp> = None;
        let mut first_bad = String::new();
        for t in 0..=hi {
            if macaulay_cells(&a.input, t) > MACAULAY_CELL_BUDGET {
                break;
            }
            let by_rank = macaulay_hf(&a.input, t);
            let by_formula = hilbert_function(basis, t);
            let by_count = standard_monomial_count(&lt_original, t);
            if by_formula != by_rank && formula_ok {
                formula_ok = false;
                first_bad = format!("t={t}: formula {by_formula} vs rank {by_rank}");
            }
            if by_rank != by_count && identity_ok {
                identity_ok = false;
                first_bad = format!("t={t}: rank {by_rank} vs count {by_count}");
            }
            top = Some(t);
        }
        let range = match top {
            Some(t) if t == hi => format!("t <= {hi}"),
            Some(t) => format!("t <= {t} (budget-capped below {hi})"),
            None => "no degree within budget".to_string(),
        };
        push(
            &mut checks,
            "hilbert-function-formula-vs-oracle",
            formula_ok,
            if formula_ok { range.clone() } else { first_bad.clone() },
        );
        push(
            &mut checks,
            "macaulay-leading-term-identity",
            identity_ok,
            if identity_ok { range } else { first_bad },
        );
    }

    // Hilbert function must not change under the coordinate change.
    if a.was_transformed() {
        let bad = (0..=hi).find(|&t| {
            standard_monomial_count(&lt_original, t) != standard_monomial_count(&lt_qs, t)
        });
        push(
            &mut checks,
            "hilbert-function-transform-invariant",
            bad.is_none(),
            match bad {
                None => format!("t <= {hi}"),
                Some(t) => format!(
                    "t={t}: original {} vs transformed {}",
                    standard_monomial_count(&lt_original, t),
                    standard_monomial_count(&lt_qs, t)
                ),
            },
        );
    } else {
        skip(
            &mut checks,
            "hilbert-function-transform-invariant",
            "identity transform",
        );
    }

    // Degree three routes: series at 1, the alternating-sum formula, and the
    // oracle finite-difference extraction.
    {
        let by_formula = degree_via_formula(basis, dim);
        let by_series = degree(&series);
        let start = hilb as usize;
        let max_t = if dim == 0 {
            start.max(1)
        } else {
            start + dim + 1
        };
        let table = HFTable::new(
            (0..=max_t)
                .map(|t| standard_monomial_count(&lt_qs, t as Exp))
                .collect(),
        );
        let by_oracle = degree_by_differences(&table, dim, if dim == 0 { 0 } else { start });
        let passed = by_formula == inv.degree
            && by_series == inv.degree
            && by_oracle.as_ref().map(|v| *v == inv.degree).unwrap_or(false);
        push(
            &mut checks,
            "degree-three-routes",
            passed,
            format!(
                "series {by_series}, formula {by_formula}, oracle {:?}",
                by_oracle.map_err(|e| e.to_string())
            ),
        );
    }

    // Dimension: pure-power prefix vs vertex cover vs Hilbert polynomial degree.
    {
        let by_cover = monomial_ideal_dimension(&lt_original);
        let hp_ok = if dim == 0 {
            hp.is_zero()
        } else {
            hp.degree() == Some(dim - 1)
        };
        push(
            &mut checks,
            "dimension-consistency",
            by_cover == dim && hp_ok,
            format!(
                "prefix {dim}, vertex cover {by_cover}, HP degree {:?}",
                hp.degree()
            ),
        );
    }

    // HF(t) = HP(t) exactly from the Hilbert regularity on, and not before.
    {
        let top = hilb.max(reg) + extra_degrees;
        let bad = (hilb..=top).find(|&t| rational(hilbert_function(basis, t)) != hp.eval(u64::from(t)));
        let minimal = if hilb > 0 {
            rational(hilbert_function(basis, hilb - 1)) != hp.eval(u64::from(hilb - 1))
        } else {
            true
        };
        push(
            &mut checks,
            "hilbert-polynomial-agreement-threshold",
            bad.is_none() && minimal,
            match bad {
                Some(t) => format!("HF != HP at t={t} >= hilb={hilb}"),
                None if !minimal => format!("HF = HP already at hilb-1 = {}", hilb - 1),
                None => format!("agree on {hilb}..={top}, differ at hilb-1"),
            },
        );
    }

    push(
        &mut checks,
        "hilbert-regularity-within-bound",
        hilb <= bound_hilbert_regularity(basis),
        format!("hilb {hilb} <= bound {}", bound_hilbert_regularity(basis)),
    );

    // When one element attains the maximal degree and the maximal class
    // simultaneously, hilb + depth collapses to max(depth, reg).
    {
        let name = "max-degree-max-class-collapse";
        match basis.elements().iter().map(|e| e.class_index()).max() {
            None => skip(&mut checks, name, "empty basis"),
            Some(max_class) => {
                let hypothesis = basis
                    .elements()
                    .iter()
                    .any(|e| e.degree() == reg && e.class_index() == max_class);
                if hypothesis {
                    let lhs = u64::from(hilb) + inv.depth as u64;
                    let rhs = u64::from(reg).max(inv.depth as u64);
                    push(
                        &mut checks,
                        name,
                        lhs == rhs,
                        format!("hilb + depth = {lhs}, max(depth, reg) = {rhs}"),
                    );
                } else {
                    skip(&mut checks, name, "no element attains both maxima");
                }
            }
        }
    }

    // Restriction to the first n-D+1 variables keeps the degree, and
    // restricting the basis commutes with taking leading terms.
    if dim >= 1 {
        let keep = n - dim + 1;
        let restricted = restrict_basis(basis, keep + 1);
        let rdeg = degree(&hilbert_series(&restricted));
        push(
            &mut checks,
            "restriction-preserves-degree",
            rdeg == inv.degree,
            format!("restricted to {keep} variables: degree {rdeg} vs {}", inv.degree),
        );
        let mono = monomial_pommaret_basis(&lt_qs).expect("leading ideal is quasi-stable here");
        let mut rhs: Vec<Monomial> = mono
            .iter()
            .filter_map(|m| m.substitute_zero_truncate(keep))
            .collect();
        rhs.sort_by(|x, y| x.cmp_degrevlex(y));
        let mut lhs: Vec<Monomial> = restricted
            .elements()
            .iter()
            .map(|e| e.leading_monomial().clone())
            .collect();
        lhs.sort_by(|x, y| x.cmp_degrevlex(y));
        push(
            &mut checks,
            "restriction-commutes-with-leading-terms",
            lhs == rhs,
            format!("{} restricted leading terms", lhs.len()),
        );
    } else {
        skip(&mut checks, "restriction-preserves-degree", "dimension 0");
        skip(
            &mut checks,
            "restriction-commutes-with-leading-terms",
            "dimension 0",
        );
    }

    // Saturation: ideal and saturation agree degreewise from the satiety on,
    // disagree right below it, and share degree and dimension.
    let sat = inv.satiety;
    match saturation_basis(basis) {
        Err(e) => {
            let msg = format!("saturation basis failed: {e}");
            push(&mut checks, "saturation-agrees-from-satiety", false, msg.clone());
            push(&mut checks, "saturation-preserves-degree", false, msg);
        }
        Ok(satgb) => {
            let lt_sat = satgb.leading_ideal();
            let bad = (sat..=sat + 2).find(|&l| {
                standard_monomial_count(&lt_qs, l) != standard_monomial_count(&lt_sat, l)
            });
            let strict = sat == 0
                || standard_monomial_count(&lt_qs, sat - 1)
                    != standard_monomial_count(&lt_sat, sat - 1);
            push(
                &mut checks,
                "saturation-agrees-from-satiety",
                bad.is_none() && strict,
                match bad {
                    Some(l) => format!("dimensions differ at degree {l} >= sat {sat}"),
                    None if !strict => format!("already agree at sat-1 = {}", sat - 1),
                    None => format!("agree from {sat}, differ below"),
                },
            );
            if satgb.is_improper() {
                skip(
                    &mut checks,
                    "saturation-preserves-degree",
                    "saturation is the unit ideal",
                );
            } else {
                // Saturating an ideal in quasi-stable position lands in
                // quasi-stable position again, so the saturation completes
                // directly; fall back to the full pipeline if an edge case
                // breaks that expectation.
                let outcome = match polynomial_pommaret_basis(&satgb) {
                    Ok(satbasis) => {
                        let series = hilbert_series(&satbasis);
                        Ok((degree(&series), series.dimension))
                    }
                    Err(_) => {
                        let mut generators: Vec<Polynomial> = satgb.elements().to_vec();
                        generators.sort_by_key(|g| {
                            std::cmp::Reverse(
                                g.homogeneous_degree().expect("saturation keeps homogeneity"),
                            )
                        });
                        let source_positions = (1..=generators.len()).collect();
                        let satinput = IdealInput {
                            context: a.input.context.clone(),
                            generators,
                            source_positions,
                        };
                        analyze(&satinput, a.transform.seed, max_tries)
                            .map(|sa| (sa.invariants.degree, sa.invariants.dimension))
                    }
                };
                match outcome {
                    Err(e) => push(
                        &mut checks,
                        "saturation-preserves-degree",
                        false,
                        format!("pipeline on saturation failed: {e}"),
                    ),
                    Ok((sat_deg, sat_dim)) => push(
                        &mut checks,
                        "saturation-preserves-degree",
                        sat_deg == inv.degree && sat_dim == dim,
                        format!(
                            "saturation degree {sat_deg} dim {sat_dim} vs {} dim {dim}",
                            inv.degree
                        ),
                    ),
                }
            }
        }
    }

    // Disjoint cones: each leading-ideal monomial has exactly one Pommaret
    // divisor in the basis, and the per-degree counts match the volume formula.
    {
        let mut ok = true;
        let mut top: Option<Exp> = None;
        let mut detail = String::new();
        for t in 0..=hi {
            if binom(u64::from(t) + n as u64 - 1, n as u64 - 1) > ENUMERATION_BUDGET {
                break;
            }
            let mut members = 0u64;
            for m in monomials_of_degree(n, t) {
                if !lt_qs.contains(&m) {
                    continue;
                }
                members += 1;
                let cones = basis
                    .elements()
                    .iter()
                    .filter(|e| e.leading_monomial().pommaret_divides(&m))
                    .count();
                if cones != 1 {
                    ok = false;
                    detail = format!("degree {t}: a monomial lies in {cones} cones");
                }
            }
            let vf = volume_function(basis, t);
            if members != vf {
                ok = false;
                detail = format!("degree {t}: {members} ideal monomials vs volume {vf}");
            }
            top = Some(t);
        }
        if ok {
            detail = match top {
                Some(t) if t == hi => format!("t <= {hi}"),
                Some(t) => format!("t <= {t} (budget-capped below {hi})"),
                None => "no degree within budget".to_string(),
            };
        }
        push(&mut checks, "cones-cover-leading-ideal", ok, detail);
    }

    // Completion stayed under its safety cap.
    {
        let cap = (n as Exp + 1) * lt_qs.max_generator_degree();
        push(
            &mut checks,
            "completion-within-cap",
            reg <= cap,
            format!("basis max degree {reg} <= cap {cap}"),
        );
    }

    // The basis is a Groebner basis: S-polynomials reduce to zero against it.
    {
        let polys: Vec<Polynomial> = basis.elements().iter().map(|e| e.poly().clone()).collect();
        let s = polys.len();
        let total = s * s.saturating_sub(1) / 2;
        let (seen, fail) = spairs_reduce_to_zero(&polys, SPAIR_BUDGET, SPAIR_CELL_BUDGET);
        let (ok, detail) = match fail {
            Some((i, j)) => (false, format!("pair ({i}, {j}) does not reduce to zero")),
            None if seen < total => (true, format!("{seen} of {total} pairs (budget-capped)")),
            None => (true, format!("all {total} pairs")),
        };
        push(&mut checks, "s-polynomials-reduce-to-zero", ok, detail);
    }

    // Bound chain: true degree <= dimension bound <= mu bound <= classical,
    // and dimension bound <= single-degree power bound.
    {
        let ds = DegreeSequence::new(a.input.degrees(), n);
        let truth = BigInt::from(inv.degree);
        let classical = bezout_classical(&ds);
        let mw = masser_wustholz(ds.d1(), n, dim);
        match bezout_dim(&ds, dim) {
            Err(e) => push(&mut checks, "bound-chain", false, e.to_string()),
            Ok(dim_bound) => {
                let mut ok = truth <= dim_bound && dim_bound <= classical && dim_bound <= mw;
                let mut detail = format!(
                    "degree {} <= dim {} <= classical {}, dim <= power {}",
                    truth, dim_bound, classical, mw
                );
                if dim > 0 {
                    match bezout_dim_mu(&ds, dim) {
                        Err(e) => {
                            ok = false;
                            detail = e.to_string();
                        }
                        Ok(mu) => {
                            ok = ok && dim_bound <= mu && mu <= classical;
                            detail.push_str(&format!(", mu {mu}"));
                        }
                    }
                } else {
                    detail.push_str(", mu skipped (dimension 0)");
                }
                push(&mut checks, "bound-chain", ok, detail);
            }
        }
    }

    VerifyReport {
        target: target.to_string(),
        checks,
    }
}
