//! Closed-form invariants read off a Pommaret basis: volume and Hilbert
//! functions, rational Hilbert series, Hilbert polynomial, dimension, depth,
//! regularity, satiety, Hilbert regularity, and degree. Two independent
//! routes to the series numerator are kept and cross-checked.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::groebner::GroebnerBasis;
use crate::monomial::Exp;
use crate::pommaret::PommaretBasis;

/// C(a, b) in u128; zero when b > a.
pub(crate) fn binom(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    num_integer::binomial(a as u128, b as u128)
}

/// Rational Hilbert series N(t) / (1-t)^D in lowest terms with respect to
/// the (1-t) factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficients a_0 .. a_l of the numerator; the last entry is nonzero.
    pub numerator: Vec<i64>,
    /// Krull dimension of the quotient ring.
    pub dimension: usize,
}

/// Krull dimension: n minus the length of the longest prefix x_1 .. x_j
/// whose pure powers all appear in the leading ideal.
pub fn dimension(basis: &PommaretBasis) -> usize {
    let n = basis.nvars();
    let lt = basis.leading_ideal();
    let j = (0..n)
        .take_while(|&i| lt.contains_pure_power(i))
        .count();
    n - j
}

/// n minus the maximal class over the basis; n for the zero ideal.
pub fn depth(basis: &PommaretBasis) -> usize {
    let n = basis.nvars();
    basis
        .elements()
        .iter()
        .map(|e| e.class_index() + 1)
        .max()
        .map_or(n, |maxcls| n - maxcls)
}

/// Castelnuovo-Mumford regularity: the maximal degree in the basis.
pub fn regularity(basis: &PommaretBasis) -> Exp {
    basis.elements().iter().map(|e| e.degree()).max().unwrap_or(0)
}

/// Maximal degree over the elements of class n; 0 when there are none
/// (the ideal is then saturated).
pub fn satiety(basis: &PommaretBasis) -> Exp {
    let n = basis.nvars();
    basis
        .elements()
        .iter()
        .filter(|e| e.class_index() == n - 1)
        .map(|e| e.degree())
        .max()
        .unwrap_or(0)
}

/// Number of degree-t monomials inside the union of cones: the sum over
/// elements of C(t - c + w - 1, t - c), cut off below the element degree.
pub fn volume_function(basis: &PommaretBasis, t: Exp) -> u64 {
    let mut total: u128 = 0;
    for el in basis.elements() {
        let c = el.degree() as u64;
        let w = el.multiplicative_count() as u64;
        if c <= t as u64 {
            total += binom(t as u64 - c + w - 1, t as u64 - c);
        }
    }
    u64::try_from(total).expect("volume function exceeds u64")
}

/// Hilbert function of the quotient: all degree-t monomials minus those in
/// the cones.
pub fn hilbert_function(basis: &PommaretBasis, t: Exp) -> u64 {
    let n = basis.nvars() as u64;
    let ambient = binom(n - 1 + t as u64, t as u64);
    let vf = volume_function(basis, t) as u128;
    assert!(vf <= ambient, "cones exceed the ambient space: this is a bug");
    u64::try_from(ambient - vf).expect("Hilbert function exceeds u64")
}

/// Hilbert series via the cone decomposition: the numerator over (1-t)^n is
/// 1 - sum_h (1-t)^{k_h} t^{c_h} with k_h the non-multiplicative count; the
/// factor (1-t)^{n-D} divides out exactly, leaving N(t) / (1-t)^D.
pub fn hilbert_series(basis: &PommaretBasis) -> HilbertSeries {
    let n = basis.nvars();
    let d = dimension(basis);
    let len = basis
        .elements()
        .iter()
        .map(|e| e.degree() as usize + e.nonmultiplicative_count())
        .max()
        .unwrap_or(0)
        + 1;
    let mut p = vec![0i128; len];
    p[0] = 1;
    for el in basis.elements() {
        let k = el.nonmultiplicative_count();
        let c = el.degree() as usize;
        for j in 0..=k {
            let term = binom(k as u64, j as u64) as i128;
            p[c + j] -= if j % 2 == 0 { term } else { -term };
        }
    }
    // Synthetic division at the root 1, n - D times; a nonzero remainder
    // would contradict the rationality theorem for the cone decomposition.
    for _ in 0..(n - d) {
        let mut acc: i128 = 0;
        for coeff in p.iter_mut() {
            acc += *coeff;
            *coeff = acc;
        }
        let remainder = p.pop().expect("numerator cannot be empty");
        assert_eq!(remainder, 0, "inexact series division: this is a bug");
        if p.is_empty() {
            p.push(0);
        }
    }
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    let numerator: Vec<i64> = p
        .into_iter()
        .map(|c| i64::try_from(c).expect("numerator coefficient exceeds i64"))
        .collect();
    assert_ne!(
        numerator.iter().sum::<i64>(),
        0,
        "numerator vanishes at 1: this is a bug"
    );
    HilbertSeries {
        numerator,
        dimension: d,
    }
}

/// Signed binomial with the boundary convention C(a, b) = 0 for b < 0 or
/// b > a (a itself is never negative at the call sites).
fn binom_i(a: i64, b: i64) -> i128 {
    if b < 0 || b > a {
        return 0;
    }
    binom(a as u64, b as u64) as i128
}

/// Numerator coefficients computed term by term instead of through the
/// series division: a_i is the count of degree-i monomials in n - D
/// variables minus two generator sums split by whether the multiplicative
/// count exceeds D. Must agree with `hilbert_series` exactly.
pub fn numerator_coefficients_direct(basis: &PommaretBasis, d: usize) -> Vec<i64> {
    if basis.elements().is_empty() {
        return vec![1];
    }
    let n = basis.nvars() as i64;
    let d = d as i64;
    let len_bound = basis
        .elements()
        .iter()
        .map(|e| e.degree() as i64 - e.multiplicative_count() as i64 + d)
        .max()
        .unwrap()
        .max(0);
    let mut coeffs = Vec::with_capacity(len_bound as usize + 1);
    for i in 0..=len_bound {
        let mut a: i128 = binom_i(n - d + i - 1, i);
        for el in basis.elements() {
            let c = el.degree() as i64;
            let w = el.multiplicative_count() as i64;
            if c > i {
                continue;
            }
            if w <= d {
                let sign = if (i - c) % 2 == 0 { 1 } else { -1 };
                a -= sign * binom_i(d - w, i - c);
            } else {
                a -= binom_i(w - d + i - c - 1, i - c);
            }
        }
        coeffs.push(i64::try_from(a).expect("numerator coefficient exceeds i64"));
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    coeffs
}

/// Univariate polynomial with exact rational coefficients, used for the
/// Hilbert polynomial. Coefficients ascending; empty means zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coefficients(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: u64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(t));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }
}

/// C(t + shift, k) expanded as a rational polynomial in t (degree k).
fn binomial_poly(shift: i64, k: usize) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::one()];
    let mut kfact = BigInt::one();
    for j in 0..k {
        kfact *= BigInt::from(j as i64 + 1);
        let c = BigRational::from_integer(BigInt::from(shift - j as i64));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (idx, a) in coeffs.iter().enumerate() {
            next[idx] = &next[idx] + &(a * &c);
            next[idx + 1] = &next[idx + 1] + a;
        }
        coeffs = next;
    }
    let kfact = BigRational::from_integer(kfact);
    coeffs.into_iter().map(|a| a / &kfact).collect()
}

/// Hilbert polynomial: the Hilbert function with the degree cutoffs
/// dropped, so each cone contributes its binomial as a genuine polynomial.
/// Agrees with the Hilbert function from degree hilb(I) on.
pub fn hilbert_polynomial(basis: &PommaretBasis) -> HilbertPolynomial {
    let n = basis.nvars();
    let mut coeffs = binomial_poly(n as i64 - 1, n - 1);
    for el in basis.elements() {
        let c = el.degree() as i64;
        let w = el.multiplicative_count();
        let cone = binomial_poly(w as i64 - 1 - c, w - 1);
        if coeffs.len() < cone.len() {
            coeffs.resize(cone.len(), BigRational::zero());
        }
        for (idx, a) in cone.into_iter().enumerate() {
            coeffs[idx] = &coeffs[idx] - &a;
        }
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    HilbertPolynomial { coeffs }
}

/// hilb(I) = max{0, deg N - D + 1}: the degree from which the Hilbert
/// function agrees with the Hilbert polynomial.
pub fn hilbert_regularity(series: &HilbertSeries) -> Exp {
    let num_deg = series.numerator.len() as i64 - 1;
    (num_deg - series.dimension as i64 + 1).max(0) as Exp
}

/// Upper bound max{0, deg(h) - |X_P(h)| + 1} over the basis; always at
/// least the exact Hilbert regularity.
pub fn bound_hilbert_regularity(basis: &PommaretBasis) -> Exp {
    basis
        .elements()
        .iter()
        .map(|e| e.degree() as i64 - e.multiplicative_count() as i64 + 1)
        .max()
        .unwrap_or(0)
        .max(0) as Exp
}

/// Degree as the alternating sum over basis elements with multiplicative
/// count between D and D + deg(h); equals N(1).
pub fn degree_via_formula(basis: &PommaretBasis, d: usize) -> u64 {
    if basis.elements().is_empty() {
        return 1;
    }
    let d = d as i64;
    let mut total: i128 = 0;
    for el in basis.elements() {
        let c = el.degree() as i64;
        let w = el.multiplicative_count() as i64;
        if w < d || w > d + c {
            continue;
        }
        let sign = if (w - d + 1) % 2 == 0 { 1 } else { -1 };
        total += sign * binom_i(c, w - d);
    }
    u64::try_from(total).expect("degree must be positive")
}

/// Degree as the numerator value N(1).
pub fn degree(series: &HilbertSeries) -> u64 {
    let sum: i64 = series.numerator.iter().sum();
    u64::try_from(sum).expect("degree must be positive")
}

/// Noether position test: the leading ideal must contain a pure power of
/// each of the first n - D variables.
pub fn is_noether_position(gb: &GroebnerBasis, d: usize) -> bool {
    let n = gb.nvars();
    let lt = gb.leading_ideal();
    (0..n - d).all(|i| lt.contains_pure_power(i))
}

/// The full invariant record; `gb_degree` is the maximal degree in the
/// reduced Groebner basis of the ideal in its original coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealInvariants {
    pub dimension: usize,
    pub degree: u64,
    pub regularity: Exp,
    pub depth: usize,
    pub satiety: Exp,
    pub hilbert_regularity: Exp,
    pub gb_degree: Exp,
}

pub fn compute_invariants(basis: &PommaretBasis, original_gb: &GroebnerBasis) -> IdealInvariants {
    let series = hilbert_series(basis);
    let d = series.dimension;
    let deg = degree(&series);
    debug_assert_eq!(numerator_coefficients_direct(basis, d), series.numerator);
    debug_assert_eq!(degree_via_formula(basis, d), deg);
    let reg = regularity(basis);
    let sat = satiety(basis);
    let dep = depth(basis);
    let hilb = hilbert_regularity(&series);
    debug_assert!(d <= basis.nvars());
    debug_assert!(dep <= d);
    debug_assert!(sat <= reg);
    debug_assert!(hilb <= bound_hilbert_regularity(basis));
    IdealInvariants {
        dimension: d,
        degree: deg,
        regularity: reg,
        depth: dep,
        satiety: sat,
        hilbert_regularity: hilb,
        gb_degree: original_gb.max_degree(),
    }
}
