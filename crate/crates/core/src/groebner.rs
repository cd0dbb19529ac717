//! Buchberger's algorithm with the product and chain criteria, full normal
//! forms, and the unique monic reduced basis.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::monomial::{DegrevlexOrd, Exp, Monomial, MonomialIdeal};
use crate::poly::{Polynomial, Term};

/// Monic reduced Groebner basis, elements sorted by descending leading term.
/// The reduced basis of an ideal is unique, so equality of ideals is
/// equality of these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is {1}, i.e. the ideal is the whole ring.
    pub fn is_improper(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].total_degree() == Some(0)
    }

    /// deg(I, term order): maximal degree of a reduced-basis element.
    pub fn max_degree(&self) -> Exp {
        self.elements
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.elements
                .iter()
                .filter_map(|g| g.leading_monomial().cloned())
                .collect(),
        )
    }
}

/// Fully reduce `f` modulo `reducers`: no term of the result is divisible by
/// any reducer's leading term. Reducer choice is first match in slice order,
/// so the result is deterministic for a fixed slice.
pub fn normal_form(f: &Polynomial, reducers: &[Polynomial]) -> Polynomial {
    let nvars = f.nvars();
    let mut remainder: Vec<Term> = vec![];
    let mut work = f.clone();
    'outer: while let Some(lt) = work.leading_term() {
        for g in reducers {
            let Some(glt) = g.leading_term() else {
                continue;
            };
            if let Some(q) = lt.mono.try_div(&glt.mono) {
                let c = &lt.coeff / &glt.coeff;
                work = work.sub(&g.mul_term(&c, &q));
                continue 'outer;
            }
        }
        remainder.push(lt.clone());
        work = Polynomial::from_sorted_terms_unchecked(nvars, work.terms()[1..].to_vec());
    }
    Polynomial::from_sorted_terms_unchecked(nvars, remainder)
}

fn unit_basis(nvars: usize) -> GroebnerBasis {
    GroebnerBasis {
        nvars,
        elements: vec![Polynomial::constant(nvars, BigRational::one())],
    }
}

/// Fraction-free working form for the basis loop: integer coefficients with
/// content 1 and positive leading coefficient, terms in descending degrevlex
/// order. Keeps the hot path free of per-operation rational normalization.
#[derive(Clone)]
struct ZPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl ZPoly {
    fn from_rational(f: &Polynomial) -> Self {
        let mut denom_lcm = BigInt::one();
        for t in f.terms() {
            denom_lcm = denom_lcm.lcm(t.coeff.denom());
        }
        let terms = f
            .terms()
            .iter()
            .map(|t| {
                let c = t.coeff.numer() * (&denom_lcm / t.coeff.denom());
                (t.mono.clone(), c)
            })
            .collect();
        let mut z = ZPoly { terms };
        z.strip_content();
        z
    }

    fn to_monic(&self, nvars: usize) -> Polynomial {
        let lc = &self.terms[0].1;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Term::new(BigRational::new(c.clone(), lc.clone()), m.clone()))
            .collect();
        Polynomial::from_sorted_terms_unchecked(nvars, terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> (&Monomial, &BigInt) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    fn total_degree(&self) -> Option<Exp> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    /// Divide out the coefficient gcd and force the leading coefficient
    /// positive. Monomials are untouched.
    fn strip_content(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }
}

/// a * x^qf * f - b * x^qg * g, merged in descending degrevlex order.
fn scaled_diff(
    a: &BigInt,
    qf: &Monomial,
    f: &[(Monomial, BigInt)],
    b: &BigInt,
    qg: &Monomial,
    g: &[(Monomial, BigInt)],
) -> Vec<(Monomial, BigInt)> {
    enum Next {
        F,
        G,
        Both,
    }
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut fm = f.first().map(|(m, _)| m.mul(qf));
    let mut gm = g.first().map(|(m, _)| m.mul(qg));
    loop {
        let next = match (&fm, &gm) {
            (None, None) => break,
            (Some(_), None) => Next::F,
            (None, Some(_)) => Next::G,
            (Some(x), Some(y)) => match x.cmp_degrevlex(y) {
                Ordering::Greater => Next::F,
                Ordering::Less => Next::G,
                Ordering::Equal => Next::Both,
            },
        };
        match next {
            Next::F => {
                out.push((fm.take().unwrap(), a * &f[i].1));
                i += 1;
                fm = f.get(i).map(|(m, _)| m.mul(qf));
            }
            Next::G => {
                out.push((gm.take().unwrap(), -(b * &g[j].1)));
                j += 1;
                gm = g.get(j).map(|(m, _)| m.mul(qg));
            }
            Next::Both => {
                let c = a * &f[i].1 - b * &g[j].1;
                if !c.is_zero() {
                    out.push((fm.take().unwrap(), c));
                }
                i += 1;
                fm = f.get(i).map(|(m, _)| m.mul(qf));
                j += 1;
                gm = g.get(j).map(|(m, _)| m.mul(qg));
            }
        }
    }
    out
}

fn zspoly(f: &ZPoly, g: &ZPoly, lcm: &Monomial) -> ZPoly {
    let (fmono, fc) = f.leading();
    let (gmono, gc) = g.leading();
    let d = fc.gcd(gc);
    let qf = lcm.try_div(fmono).unwrap();
    let qg = lcm.try_div(gmono).unwrap();
    let mut s = ZPoly {
        terms: scaled_diff(&(gc / &d), &qf, &f.terms, &(fc / &d), &qg, &g.terms),
    };
    s.strip_content();
    s
}

/// Fraction-free full normal form. Reducer choice is first match in slice
/// order, as in `normal_form`. Terms left of the scan position are already
/// irreducible and each step only rescales them, so the scan never backs up.
fn znormal_form(mut work: ZPoly, reducers: &[ZPoly]) -> ZPoly {
    let mut pos = 0;
    while pos < work.terms.len() {
        let (m, c) = &work.terms[pos];
        let Some(r) = reducers
            .iter()
            .find(|r| !r.is_zero() && r.leading().0.divides(m))
        else {
            pos += 1;
            continue;
        };
        let (rm, rc) = r.leading();
        let d = c.gcd(rc);
        let a = rc / &d;
        let b = c / &d;
        let q = m.try_div(rm).unwrap();
        let unit = Monomial::one(m.nvars());
        work.terms = scaled_diff(&a, &unit, &work.terms, &b, &q, &r.terms);
        work.strip_content();
    }
    work
}

/// Buchberger with normal pair selection (smallest lcm in degrevlex, hence
/// smallest degree first). Pairs with coprime leading terms are skipped, as
/// are pairs eliminated by the chain criterion. Any constant encountered
/// short-circuits to the basis {1}.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    assert!(!gens.is_empty(), "buchberger needs the ambient ring");
    let nvars = gens[0].nvars();
    let mut basis: Vec<ZPoly> = vec![];
    for g in gens {
        assert_eq!(g.nvars(), nvars, "variable context mismatch");
        if g.is_zero() {
            continue;
        }
        if g.total_degree() == Some(0) {
            return Ok(unit_basis(nvars));
        }
        basis.push(ZPoly::from_rational(g));
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            nvars,
            elements: vec![],
        });
    }

    let lm = |basis: &[ZPoly], i: usize| basis[i].leading().0.clone();
    let mut pairs: BTreeSet<(DegrevlexOrd, usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.insert((DegrevlexOrd(lm(&basis, i).lcm(&lm(&basis, j))), i, j));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    while let Some((DegrevlexOrd(lcm), i, j)) = pairs.pop_first() {
        done.insert((i, j));
        let lti = lm(&basis, i);
        let ltj = lm(&basis, j);
        if lti.coprime(&ltj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().0.divides(&lcm)
                && done.contains(&(k.min(i), k.max(i)))
                && done.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }
        let s = zspoly(&basis[i], &basis[j], &lcm);
        let nf = znormal_form(s, &basis);
        if nf.is_zero() {
            continue;
        }
        if nf.total_degree() == Some(0) {
            return Ok(unit_basis(nvars));
        }
        let t = basis.len();
        for k in 0..t {
            pairs.insert((DegrevlexOrd(lm(&basis, k).lcm(nf.leading().0)), k, t));
        }
        basis.push(nf);
    }

    // Minimalize: keep only elements whose leading term no other kept
    // leading term divides. Scanning smallest-first makes the kept set the
    // unique minimal one.
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by(|&a, &b| basis[a].leading().0.cmp_degrevlex(basis[b].leading().0));
    let mut minimal: Vec<ZPoly> = vec![];
    for idx in order {
        let cand = &basis[idx];
        let clm = cand.leading().0;
        if !minimal.iter().any(|m| m.leading().0.divides(clm)) {
            minimal.push(cand.clone());
        }
    }

    // Tail-reduce each element against the others. Leading terms are pairwise
    // non-divisible, so one pass leaves every tail term irreducible.
    let mut reduced: Vec<ZPoly> = minimal.clone();
    for i in 0..reduced.len() {
        let others: Vec<ZPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced[i] = znormal_form(reduced[i].clone(), &others);
    }
    let mut elements: Vec<Polynomial> = reduced.iter().map(|z| z.to_monic(nvars)).collect();
    elements.sort_by(|a, b| {
        b.leading_monomial()
            .unwrap()
            .cmp_degrevlex(a.leading_monomial().unwrap())
    });
    Ok(GroebnerBasis { nvars, elements })
}

/// f lies in the ideal iff its normal form modulo the basis vanishes.
pub fn ideal_membership(f: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form(f, &gb.elements).is_zero()
}

/// Dense term-count bound for degree-d forms in n variables, C(d+n-1, n-1).
fn dense_terms(d: Exp, n: usize) -> u128 {
    let mut acc: u128 = 1;
    for k in 1..n {
        acc = acc.saturating_mul(d as u128 + k as u128) / k as u128;
    }
    acc
}

/// Check that the S-polynomial of each pair among `polys` reduces to zero
/// against the whole set. Pairs are visited in ascending lcm order; each
/// costs its dense term bound against `cell_budget`, and at most
/// `pair_budget` pairs run. Returns the pairs visited and the first failing
/// pair, if any.
pub(crate) fn spairs_reduce_to_zero(
    polys: &[Polynomial],
    pair_budget: usize,
    cell_budget: u128,
) -> (usize, Option<(usize, usize)>) {
    let zs: Vec<ZPoly> = polys.iter().map(ZPoly::from_rational).collect();
    debug_assert!(zs.iter().all(|z| !z.is_zero()));
    let n = polys.first().map_or(0, |p| p.nvars());
    let mut pairs: Vec<(DegrevlexOrd, usize, usize)> = vec![];
    for j in 1..zs.len() {
        for i in 0..j {
            pairs.push((DegrevlexOrd(zs[i].leading().0.lcm(zs[j].leading().0)), i, j));
        }
    }
    pairs.sort();
    let mut seen = 0usize;
    let mut spent: u128 = 0;
    for (DegrevlexOrd(lcm), i, j) in pairs {
        let cost = dense_terms(lcm.total_degree(), n);
        if seen == pair_budget || (seen > 0 && spent + cost > cell_budget) {
            break;
        }
        seen += 1;
        spent += cost;
        let s = zspoly(&zs[i], &zs[j], &lcm);
        if !znormal_form(s, &zs).is_zero() {
            return (seen, Some((i, j)));
        }
    }
    (seen, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VariableContext;
    use crate::parse::parse_polynomial;

    fn ctx2() -> VariableContext {
        VariableContext::new(vec!["x".into(), "y".into()])
    }

    fn polys(ctx: &VariableContext, texts: &[&str]) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| parse_polynomial(t, ctx).unwrap())
            .collect()
    }

    #[test]
    fn coprime_leading_terms_are_already_a_basis() {
        let ctx = VariableContext::numbered(3);
        let gens = polys(&ctx, &["x1^2 - x2*x3", "x2^2"]);
        let gb = buchberger(&gens).unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert_eq!(gb.max_degree(), 2);
        assert_eq!(
            gb.elements()[0].display(&ctx).to_string(),
            "x1^2 - x2*x3"
        );
        assert_eq!(gb.elements()[1].display(&ctx).to_string(), "x2^2");
    }

    #[test]
    fn quartic_cubic_pair() {
        let ctx = ctx2();
        let gens = polys(&ctx, &["x^4 + x^3*y", "x^3 + y^3"]);
        let gb = buchberger(&gens).unwrap();
        let rendered: Vec<String> = gb
            .elements()
            .iter()
            .map(|g| g.display(&ctx).to_string())
            .collect();
        assert_eq!(rendered, vec!["x*y^3 + y^4", "x^3 + y^3"]);
        assert_eq!(gb.max_degree(), 4);
    }

    #[test]
    fn membership_of_binomial_powers() {
        let ctx = ctx2();
        let gens = polys(&ctx, &["x^4 + x^3*y", "x^3 + y^3"]);
        let gb = buchberger(&gens).unwrap();
        let p4 = parse_polynomial("(x + y)^4", &ctx).unwrap();
        let p5 = parse_polynomial("(x + y)^5", &ctx).unwrap();
        assert!(!ideal_membership(&p4, &gb));
        assert!(ideal_membership(&p5, &gb));
    }

    #[test]
    fn monomial_input_echoed() {
        let ctx = VariableContext::numbered(3);
        let gens = polys(&ctx, &["x1*x3", "x1*x2", "x1^2", "x2^3"]);
        let gb = buchberger(&gens).unwrap();
        assert_eq!(gb.elements().len(), 4);
        assert!(gb.elements().iter().all(|g| g.terms().len() == 1));
        assert_eq!(gb.leading_ideal().gens().len(), 4);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let ctx = ctx2();
        let gens = polys(&ctx, &["x^2 - y^2", "x*y - y^2"]);
        let gb = buchberger(&gens).unwrap();
        let f = parse_polynomial("x^3 + 2*x^2*y - y^3 + x*y", &ctx).unwrap();
        let g = parse_polynomial("y^3 - 3*x + y", &ctx).unwrap();
        let nf = |p: &Polynomial| normal_form(p, gb.elements());
        assert_eq!(nf(&nf(&f)), nf(&f));
        assert_eq!(nf(&f.add(&g)), nf(&f).add(&nf(&g)));
        // The difference f - NF(f) is always a member.
        assert!(ideal_membership(&f.sub(&nf(&f)), &gb));
    }

    #[test]
    fn unit_ideal_detected() {
        let ctx = ctx2();
        // x and x - 1 generate 1 (inhomogeneous, library-level input).
        let gens = polys(&ctx, &["x", "x - 1"]);
        let gb = buchberger(&gens).unwrap();
        assert!(gb.is_improper());
        assert_eq!(gb.elements().len(), 1);
    }

    #[test]
    fn generator_order_does_not_matter() {
        let ctx = ctx2();
        let a = buchberger(&polys(&ctx, &["x^4 + x^3*y", "x^3 + y^3"])).unwrap();
        let b = buchberger(&polys(&ctx, &["x^3 + y^3", "x^4 + x^3*y"])).unwrap();
        assert_eq!(a, b);
        // Redundant generators collapse to the same reduced basis.
        let c = buchberger(&polys(
            &ctx,
            &["x^3 + y^3", "x^4 + x^3*y", "x^4 + x^3*y", "2*x^3 + 2*y^3"],
        ))
        .unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn zero_generators_vanish() {
        let ctx = ctx2();
        let zero = Polynomial::zero(2);
        let x = parse_polynomial("x", &ctx).unwrap();
        let gb = buchberger(&[zero.clone(), x]).unwrap();
        assert_eq!(gb.elements().len(), 1);
        let gb0 = buchberger(&[zero]).unwrap();
        assert!(gb0.is_zero_ideal());
        assert_eq!(gb0.max_degree(), 0);
    }
}
