//! Multivariate polynomials with exact rational coefficients, stored as
//! degrevlex-descending term lists.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::context::VariableContext;
use crate::monomial::{Exp, Monomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: BigRational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Invariant: terms strictly descending in degrevlex, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1);
        Polynomial {
            nvars,
            terms: vec![],
        }
    }

    /// Normalizes an arbitrary term list: sorts, merges equal monomials,
    /// drops zeros.
    pub fn from_terms(nvars: usize, mut terms: Vec<Term>) -> Self {
        terms.iter().for_each(|t| assert_eq!(t.mono.nvars(), nvars));
        terms.sort_by(|a, b| b.mono.cmp_degrevlex(&a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Polynomial {
            nvars,
            terms: merged,
        }
    }

    /// Caller guarantees strictly descending monomials and nonzero
    /// coefficients; used by hot loops that maintain the invariant anyway.
    pub(crate) fn from_sorted_terms_unchecked(nvars: usize, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| w[0].mono.cmp_degrevlex(&w[1].mono) == std::cmp::Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Polynomial::from_terms(nvars, vec![Term::new(c, Monomial::one(nvars))])
    }

    pub fn from_monomial(mono: Monomial) -> Self {
        let nvars = mono.nvars();
        Polynomial {
            nvars,
            terms: vec![Term::new(BigRational::one(), mono)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Total degree; None for zero. Degrevlex refines degree, so the leading
    /// term carries the maximum.
    pub fn total_degree(&self) -> Option<Exp> {
        self.terms.first().map(|t| t.mono.total_degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.total_degree();
                self.terms.iter().all(|t| t.mono.total_degree() == d)
            }
        }
    }

    /// Some(d) iff nonzero and homogeneous of degree d.
    pub fn homogeneous_degree(&self) -> Option<Exp> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.total_degree()
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable context mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match a.mono.cmp_degrevlex(&b.mono) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(c, a.mono.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.mono.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// Multiply by the single term c * m; preserves the term order.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable context mismatch");
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(Term::new(&a.coeff * &b.coeff, a.mono.mul(&b.mono)));
            }
        }
        Polynomial::from_terms(self.nvars, products)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) => {
                let inv = lt.coeff.recip();
                self.scale(&inv)
            }
        }
    }

    /// Integer-primitive form: a rational multiple with coprime integer
    /// coefficients and positive leading coefficient. Keeps coefficient
    /// growth in check during basis computations.
    pub fn primitive(&self) -> Polynomial {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for t in &self.terms {
            denom_lcm = denom_lcm.lcm(t.coeff.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for t in &self.terms {
            let scaled = t.coeff.numer() * (&denom_lcm / t.coeff.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        let mut factor = BigRational::new(denom_lcm, numer_gcd);
        if self.terms[0].coeff.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Image under x_{keep+1} = .. = x_n = 0 in the ring of the first `keep`
    /// variables. Homogeneity is preserved.
    pub fn substitute_zero(&self, keep: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                t.mono
                    .substitute_zero_truncate(keep)
                    .map(|m| Term::new(t.coeff.clone(), m))
            })
            .collect();
        // Dropping terms keeps the remaining order strictly descending.
        Polynomial { nvars: keep, terms }
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> PolyDisplay<'a> {
        assert_eq!(self.nvars, ctx.nvars(), "variable context mismatch");
        PolyDisplay { poly: self, ctx }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Canonical rendering, parseable back by the expression parser:
/// terms in degrevlex-descending order, explicit `*`, `^` for exponents,
/// rational coefficients as `a/b`.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, t) in self.poly.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = t.coeff.abs();
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || t.mono.is_one() {
                write!(f, "{}", abs.numer())?;
                if !abs.denom().is_one() {
                    write!(f, "/{}", abs.denom())?;
                }
            }
            let mut wrote_factor = !coeff_is_one || t.mono.is_one();
            for i in 0..t.mono.nvars() {
                let e = t.mono.exp(i);
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                wrote_factor = true;
                write!(f, "{}", self.ctx.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn mono(exps: &[Exp]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    fn poly(terms: &[(i64, &[Exp])]) -> Polynomial {
        let nvars = terms[0].1.len();
        Polynomial::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| Term::new(rat(*c), mono(e)))
                .collect(),
        )
    }

    #[test]
    fn construction_merges_and_orders() {
        let p = Polynomial::from_terms(
            2,
            vec![
                Term::new(rat(1), mono(&[0, 2])),
                Term::new(rat(2), mono(&[1, 0])),
                Term::new(rat(-1), mono(&[0, 2])),
                Term::new(rat(5), mono(&[2, 0])),
            ],
        );
        // x2^2 cancels, x1^2 leads.
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.leading_monomial(), Some(&mono(&[2, 0])));
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn arithmetic_identities() {
        let p = poly(&[(1, &[2, 0]), (-1, &[0, 1])]);
        let q = poly(&[(3, &[1, 1]), (2, &[0, 0])]);
        let r = poly(&[(1, &[0, 2]), (7, &[1, 0])]);
        assert_eq!(&p + &q, &q + &p);
        assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        assert_eq!(&p - &p, Polynomial::zero(2));
        assert_eq!(&p * &q, &q * &p);
        assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        let one = Polynomial::constant(2, rat(1));
        assert_eq!(&p * &one, p);
    }

    #[test]
    fn homogeneity() {
        assert!(poly(&[(1, &[2, 0]), (3, &[1, 1])]).is_homogeneous());
        assert!(!poly(&[(1, &[2, 0]), (3, &[1, 0])]).is_homogeneous());
        assert!(Polynomial::zero(2).is_homogeneous());
        assert_eq!(
            poly(&[(1, &[2, 0]), (3, &[1, 1])]).homogeneous_degree(),
            Some(2)
        );
        assert_eq!(Polynomial::zero(2).homogeneous_degree(), None);
    }

    #[test]
    fn monic_and_primitive() {
        let p = Polynomial::from_terms(
            2,
            vec![
                Term::new(BigRational::new(BigInt::from(-4), BigInt::from(6)), mono(&[1, 0])),
                Term::new(BigRational::new(BigInt::from(2), BigInt::from(9)), mono(&[0, 1])),
            ],
        );
        let m = p.monic();
        assert!(m.leading_term().unwrap().coeff.is_one());
        let prim = p.primitive();
        assert!(prim.leading_term().unwrap().coeff > BigRational::from_integer(BigInt::from(0)));
        for t in prim.terms() {
            assert!(t.coeff.denom().is_one());
        }
        // -2/3 x1 + 2/9 x2 -> primitive 3 x1 - x2 up to the forced sign.
        assert_eq!(prim, poly(&[(3, &[1, 0]), (-1, &[0, 1])]));
    }

    #[test]
    fn substitution_kills_late_variables() {
        let p = poly(&[(1, &[1, 0, 2]), (2, &[0, 3, 0]), (-1, &[3, 0, 0])]);
        let q = p.substitute_zero(2);
        assert_eq!(q.nvars(), 2);
        assert_eq!(q, poly(&[(2, &[0, 3]), (-1, &[3, 0])]));
        // Substitution is a ring homomorphism.
        let a = poly(&[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        let b = poly(&[(2, &[0, 1, 1]), (1, &[2, 0, 0])]);
        assert_eq!(
            (&a * &b).substitute_zero(2),
            &a.substitute_zero(2) * &b.substitute_zero(2)
        );
        assert_eq!(
            (&a + &b).substitute_zero(2),
            &a.substitute_zero(2) + &b.substitute_zero(2)
        );
    }

    #[test]
    fn display_canonical() {
        let ctx = VariableContext::numbered(3);
        let p = Polynomial::from_terms(
            3,
            vec![
                Term::new(rat(1), mono(&[2, 0, 0])),
                Term::new(rat(-3), mono(&[0, 1, 1])),
                Term::new(BigRational::new(BigInt::from(4), BigInt::from(5)), mono(&[0, 0, 2])),
            ],
        );
        assert_eq!(p.display(&ctx).to_string(), "x1^2 - 3*x2*x3 + 4/5*x3^2");
        assert_eq!(Polynomial::zero(3).display(&ctx).to_string(), "0");
        assert_eq!(
            Polynomial::constant(3, rat(-7)).display(&ctx).to_string(),
            "-7"
        );
    }
}
