//! Quasi-stability, Pommaret completion of monomial ideals, lifting to
//! polynomial bases, involutive reduction, restriction, saturation, and the
//! random change of coordinates that reaches quasi-stable position.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::context::VariableContext;
use crate::error::{Error, QuasiStabilityWitness, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::{DegrevlexOrd, Exp, Monomial, MonomialIdeal};
use crate::parse::IdealInput;
use crate::poly::{Polynomial, Term};
use crate::rng::SplitMix64;

/// Basis element with its cached leading-term combinatorics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    poly: Polynomial,
    class_index: usize,
    degree: Exp,
}

impl BasisElement {
    fn new(poly: Polynomial) -> Self {
        let lm = poly
            .leading_monomial()
            .expect("basis elements are nonzero");
        let class_index = lm
            .class_index()
            .expect("basis elements are nonconstant");
        let degree = lm.total_degree();
        BasisElement {
            poly,
            class_index,
            degree,
        }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn leading_monomial(&self) -> &Monomial {
        self.poly.leading_monomial().unwrap()
    }

    /// 0-based index of the class variable of the leading term.
    pub fn class_index(&self) -> usize {
        self.class_index
    }

    pub fn degree(&self) -> Exp {
        self.degree
    }

    /// |X_P|: multiplicative variables are x_cls .. x_n.
    pub fn multiplicative_count(&self) -> usize {
        self.poly.nvars() - self.class_index
    }

    /// Complementary count; the two always sum to the variable count.
    pub fn nonmultiplicative_count(&self) -> usize {
        self.class_index
    }
}

/// Pommaret basis: monic elements whose leading-term cones are pairwise
/// disjoint and cover the leading ideal. Sorted by descending leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PommaretBasis {
    nvars: usize,
    elements: Vec<BasisElement>,
}

impl PommaretBasis {
    /// Pommaret basis of a quasi-stable monomial ideal, wrapped as a
    /// polynomial basis.
    pub fn of_monomial_ideal(j: &MonomialIdeal) -> Result<Self> {
        Ok(PommaretBasis::from_polys(
            j.nvars(),
            monomial_pommaret_basis(j)?
                .into_iter()
                .map(Polynomial::from_monomial)
                .collect(),
        ))
    }

    fn from_polys(nvars: usize, polys: Vec<Polynomial>) -> Self {
        let mut elements: Vec<BasisElement> = polys.into_iter().map(BasisElement::new).collect();
        elements.sort_by(|a, b| {
            b.leading_monomial()
                .cmp_degrevlex(a.leading_monomial())
        });
        debug_assert!(
            no_mutual_pommaret_division(&elements),
            "leading terms must be involutively autoreduced"
        );
        PommaretBasis { nvars, elements }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Minimal generators of the leading ideal (for membership tests).
    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.elements
                .iter()
                .map(|e| e.leading_monomial().clone())
                .collect(),
        )
    }
}

fn no_mutual_pommaret_division(elements: &[BasisElement]) -> bool {
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if i != j && a.leading_monomial().pommaret_divides(b.leading_monomial()) {
                return false;
            }
        }
    }
    true
}

/// First failing exchange, or None when the ideal is quasi-stable.
///
/// Checking each minimal generator m, each variable x_i actually dividing m
/// with its full power s, and each j < i suffices; a single test exponent
/// t = maxdeg(J) decides the existential, because membership of
/// x_j^t * m / x_i^s is monotone in t and any witness generator uses x_j to
/// a power at most maxdeg(J).
pub fn quasi_stability_witness(j: &MonomialIdeal) -> Option<QuasiStabilityWitness> {
    let n = j.nvars();
    let t = j.max_generator_degree();
    let ctx = VariableContext::numbered(n);
    for m in j.gens() {
        for i in (0..n).rev() {
            let s = m.exp(i);
            if s == 0 {
                continue;
            }
            for jv in 0..i {
                let mut exps = m.exps().to_vec();
                exps[i] = 0;
                exps[jv] += t;
                if !j.contains(&Monomial::from_exps(exps)) {
                    return Some(QuasiStabilityWitness {
                        generator: Polynomial::from_monomial(m.clone())
                            .display(&ctx)
                            .to_string(),
                        var_i: i + 1,
                        var_j: jv + 1,
                    });
                }
            }
        }
    }
    None
}

pub fn is_quasi_stable(j: &MonomialIdeal) -> bool {
    quasi_stability_witness(j).is_none()
}

/// Complete a quasi-stable monomial ideal to its Pommaret basis: repeatedly
/// adjoin non-multiplicative prolongations x_j * m that have no Pommaret
/// divisor yet. Prolongations are processed in ascending degrevlex order
/// (hence degree by degree), which keeps the set involutively autoreduced
/// throughout. Returns the basis in ascending degrevlex order.
pub fn monomial_pommaret_basis(j: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if j.gens().iter().any(|m| m.total_degree() == 0) {
        return Err(Error::ImproperIdeal);
    }
    if let Some(witness) = quasi_stability_witness(j) {
        return Err(Error::NotQuasiStable { witness });
    }
    if j.is_zero() {
        return Ok(vec![]);
    }
    let n = j.nvars();
    // Quasi-stability guarantees termination well below this cap; hitting it
    // means a bug, not bad input.
    let cap = (n as Exp + 1) * j.max_generator_degree();
    let mut basis: Vec<Monomial> = j.gens().to_vec();
    let mut queue: BTreeSet<DegrevlexOrd> = BTreeSet::new();
    for m in &basis {
        for jv in 0..m.nonmultiplicative_count() {
            queue.insert(DegrevlexOrd(m.mul_var(jv)));
        }
    }
    while let Some(DegrevlexOrd(p)) = queue.pop_first() {
        if basis.iter().any(|b| b.pommaret_divides(&p)) {
            continue;
        }
        assert!(
            p.total_degree() <= cap,
            "Pommaret completion exceeded the safety cap: this is a bug"
        );
        for jv in 0..p.nonmultiplicative_count() {
            queue.insert(DegrevlexOrd(p.mul_var(jv)));
        }
        basis.push(p);
    }
    basis.sort_by(|a, b| a.cmp_degrevlex(b));
    Ok(basis)
}

/// Lift the monomial Pommaret basis of LT(I) through a reduced Groebner
/// basis: each cone generator u becomes (u / LT(g)) * g for the basis
/// element g with the degrevlex-largest leading term dividing u.
pub fn polynomial_pommaret_basis(gb: &GroebnerBasis) -> Result<PommaretBasis> {
    if gb.is_improper() {
        return Err(Error::ImproperIdeal);
    }
    let nvars = gb.nvars();
    let monos = monomial_pommaret_basis(&gb.leading_ideal())?;
    let one = BigRational::one();
    let mut polys = Vec::with_capacity(monos.len());
    for u in monos {
        let g = gb
            .elements()
            .iter()
            .filter(|g| g.leading_monomial().unwrap().divides(&u))
            .max_by(|a, b| {
                a.leading_monomial()
                    .unwrap()
                    .cmp_degrevlex(b.leading_monomial().unwrap())
            })
            .expect("completion monomials lie in the leading ideal");
        let q = u.try_div(g.leading_monomial().unwrap()).unwrap();
        polys.push(g.mul_term(&one, &q));
    }
    Ok(PommaretBasis::from_polys(nvars, polys))
}

/// Involutive normal form: a term may only be reduced by the basis element
/// whose leading term Pommaret-divides it. Cones are disjoint, so the
/// reducer, and hence the result, is unique.
pub fn involutive_normal_form(f: &Polynomial, basis: &PommaretBasis) -> Polynomial {
    let nvars = f.nvars();
    assert_eq!(nvars, basis.nvars(), "variable context mismatch");
    let mut remainder: Vec<Term> = vec![];
    let mut work = f.clone();
    'outer: while let Some(lt) = work.leading_term() {
        for el in basis.elements() {
            if el.leading_monomial().pommaret_divides(&lt.mono) {
                let q = lt.mono.try_div(el.leading_monomial()).unwrap();
                let c = lt.coeff.clone();
                work = work.sub(&el.poly().mul_term(&c, &q));
                continue 'outer;
            }
        }
        remainder.push(lt.clone());
        work = Polynomial::from_sorted_terms_unchecked(nvars, work.terms()[1..].to_vec());
    }
    Polynomial::from_sorted_terms_unchecked(nvars, remainder)
}

/// Restrict a Pommaret basis along x_{from_index} = .. = x_n = 0 (from_index
/// is 1-based; n+1 restricts nothing): elements whose leading term involves a
/// killed variable vanish entirely (a degrevlex property of homogeneous
/// polynomials), the rest restrict term by term and form the Pommaret basis
/// of the restricted ideal.
pub fn restrict_basis(basis: &PommaretBasis, from_index: usize) -> PommaretBasis {
    assert!(from_index >= 2 && from_index <= basis.nvars() + 1);
    let keep = from_index - 1;
    let mut polys = vec![];
    for el in basis.elements() {
        let Some(lm) = el.leading_monomial().substitute_zero_truncate(keep) else {
            debug_assert!(el.poly().substitute_zero(keep).is_zero());
            continue;
        };
        let p = el.poly().substitute_zero(keep);
        debug_assert_eq!(p.leading_monomial(), Some(&lm));
        polys.push(p);
    }
    PommaretBasis::from_polys(keep, polys)
}

/// Generators of I : x_n^infinity read off a Pommaret basis: each class-n
/// element is divided by the full x_n power of its leading term (which
/// divides every term, again by the degrevlex homogeneity argument), the
/// others pass through unchanged.
pub fn saturation_generators(basis: &PommaretBasis) -> Vec<Polynomial> {
    let n = basis.nvars();
    basis
        .elements()
        .iter()
        .map(|el| {
            if el.class_index() == n - 1 {
                let s = el.leading_monomial().exp(n - 1);
                let divisor = Monomial::from_exps(
                    (0..n).map(|i| if i == n - 1 { s } else { 0 }).collect(),
                );
                let terms = el
                    .poly()
                    .terms()
                    .iter()
                    .map(|t| {
                        Term::new(
                            t.coeff.clone(),
                            t.mono
                                .try_div(&divisor)
                                .expect("x_n^s divides every term of a class-n element"),
                        )
                    })
                    .collect();
                Polynomial::from_sorted_terms_unchecked(n, terms)
            } else {
                el.poly().clone()
            }
        })
        .collect()
}

/// Reduced Groebner basis of the saturation I : x_n^infinity.
pub fn saturation_basis(basis: &PommaretBasis) -> Result<GroebnerBasis> {
    let gens = saturation_generators(basis);
    if gens.is_empty() {
        return buchberger(&[Polynomial::zero(basis.nvars())]);
    }
    buchberger(&gens)
}

/// Invertible change of coordinates x_i -> sum_j matrix[i][j] * x_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearChange {
    pub matrix: Vec<Vec<i64>>,
}

impl LinearChange {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        LinearChange { matrix }
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearChange::identity(self.matrix.len())
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        apply_matrix(&self.matrix, std::slice::from_ref(f)).pop().unwrap()
    }
}

/// Outcome of the search for quasi-stable position.
#[derive(Debug, Clone)]
pub struct TransformResult {
    /// Identity when the input coordinates were already quasi-stable.
    pub change: LinearChange,
    /// The input with its generators rewritten in the successful coordinates.
    pub input: IdealInput,
    /// Reduced Groebner basis of the rewritten generators.
    pub gb: GroebnerBasis,
    /// Number of random attempts consumed (0 for the identity fast path).
    pub tries: u32,
    pub seed: u64,
}

fn det_bigint(matrix: &[Vec<i64>]) -> BigInt {
    // Fraction-free (Bareiss) elimination; exact for integer entries.
    let n = matrix.len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut denom = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &denom;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        denom = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn sample_matrix(rng: &mut SplitMix64, n: usize, bound: i64) -> Vec<Vec<i64>> {
    loop {
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = rng.range_i64(-bound, bound);
                if i == j {
                    while *entry == 0 {
                        *entry = rng.range_i64(-bound, bound);
                    }
                }
            }
        }
        if !det_bigint(&matrix).is_zero() {
            return matrix;
        }
    }
}

fn apply_matrix(matrix: &[Vec<i64>], gens: &[Polynomial]) -> Vec<Polynomial> {
    let n = matrix.len();
    let forms: Vec<Polynomial> = matrix
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                n,
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| {
                        Term::new(
                            BigRational::from_integer(BigInt::from(c)),
                            Monomial::variable(n, j),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    // Cache powers of each substituted form up to the needed exponent.
    let mut powers: Vec<Vec<Polynomial>> = (0..n)
        .map(|_| vec![Polynomial::constant(n, BigRational::one())])
        .collect();
    let power = |powers: &mut Vec<Vec<Polynomial>>, i: usize, e: usize| {
        while powers[i].len() <= e {
            let next = powers[i].last().unwrap().mul(&forms[i]);
            powers[i].push(next);
        }
        powers[i][e].clone()
    };
    gens.iter()
        .map(|g| {
            let mut acc = Polynomial::zero(n);
            for t in g.terms() {
                let mut prod = Polynomial::constant(n, t.coeff.clone());
                for i in 0..n {
                    let e = t.mono.exp(i) as usize;
                    if e > 0 {
                        prod = prod.mul(&power(&mut powers, i, e));
                    }
                }
                acc = acc.add(&prod);
            }
            acc
        })
        .collect()
}

/// Search for a quasi-stable position. The identity is tried first; then up
/// to `max_tries` dense integer matrices with entries uniform in [-B, B],
/// B doubling from 1 each attempt, diagonal forced nonzero, singular draws
/// rejected. Deterministic for a fixed seed (splitmix64 stream).
pub fn random_linear_transform(
    input: &IdealInput,
    seed: u64,
    max_tries: u32,
) -> Result<TransformResult> {
    let gb0 = buchberger(&input.generators)?;
    if gb0.is_improper() {
        return Err(Error::ImproperIdeal);
    }
    let n = gb0.nvars();
    let mut last_witness = match quasi_stability_witness(&gb0.leading_ideal()) {
        None => {
            return Ok(TransformResult {
                change: LinearChange::identity(n),
                input: input.clone(),
                gb: gb0,
                tries: 0,
                seed,
            })
        }
        Some(w) => w,
    };
    let mut rng = SplitMix64::new(seed);
    for attempt in 1..=max_tries {
        let bound = 1i64 << (attempt - 1).min(20);
        let matrix = sample_matrix(&mut rng, n, bound);
        let tgens = apply_matrix(&matrix, &input.generators);
        let gb = buchberger(&tgens)?;
        if gb.is_improper() {
            return Err(Error::ImproperIdeal);
        }
        match quasi_stability_witness(&gb.leading_ideal()) {
            None => {
                let mut transformed = input.clone();
                transformed.generators = tgens;
                return Ok(TransformResult {
                    change: LinearChange { matrix },
                    input: transformed,
                    gb,
                    tries: attempt,
                    seed,
                })
            }
            Some(w) => last_witness = w,
        }
    }
    Err(Error::TransformExhausted {
        tries: max_tries,
        witness: last_witness,
    })
}
