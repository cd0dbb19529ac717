//! Exponent vectors under the degree reverse lexicographic order, together
//! with the class/multiplicative-variable combinatorics of Pommaret division.
//!
//! Convention: index 0 is x_1, the largest variable; ties in total degree are
//! broken by the *last* differing variable, where the larger exponent loses.

use std::cmp::Ordering;

pub type Exp = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<Exp>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars >= 1);
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exps(exps: Vec<Exp>) -> Self {
        assert!(!exps.is_empty());
        Monomial { exps }
    }

    /// x_{i+1} as a monomial (0-based variable index).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i]
    }

    pub fn total_degree(&self) -> Exp {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable context mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "variable context mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.nvars(), other.nvars(), "variable context mismatch");
        let mut exps = Vec::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable context mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// 0-based index of the last variable with positive exponent.
    /// None for the constant monomial.
    pub fn class_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Number of multiplicative variables {x_cls, .., x_n}; all n for the
    /// constant monomial.
    pub fn multiplicative_count(&self) -> usize {
        self.nvars() - self.class_index().unwrap_or(0)
    }

    /// Number of non-multiplicative variables; multiplicative and
    /// non-multiplicative counts always sum to nvars.
    pub fn nonmultiplicative_count(&self) -> usize {
        self.class_index().unwrap_or(0)
    }

    pub fn is_multiplicative(&self, i: usize) -> bool {
        i >= self.class_index().unwrap_or(0)
    }

    /// self |_P other: self divides other and the quotient involves only
    /// multiplicative variables of self.
    pub fn pommaret_divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "variable context mismatch");
        let c = match self.class_index() {
            None => return true,
            Some(c) => c,
        };
        // Below the class the exponents must agree exactly; above it self is 0.
        for i in 0..c {
            if self.exps[i] != other.exps[i] {
                return false;
            }
        }
        self.exps[c] <= other.exps[c]
    }

    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.exps[i] > 0 && self.exps.iter().enumerate().all(|(j, &e)| j == i || e == 0)
    }

    /// Image under x_{keep+1} = .. = x_n = 0, truncated to the first `keep`
    /// variables; None if the monomial is killed.
    pub fn substitute_zero_truncate(&self, keep: usize) -> Option<Monomial> {
        assert!(keep >= 1 && keep <= self.nvars());
        if self.exps[keep..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial {
            exps: self.exps[..keep].to_vec(),
        })
    }

    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        assert_eq!(self.nvars(), other.nvars(), "variable context mismatch");
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.nvars()).rev() {
            if self.exps[i] != other.exps[i] {
                // Larger exponent in the last differing variable is smaller.
                return if self.exps[i] > other.exps[i] {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

/// Ascending degrevlex key for ordered collections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegrevlexOrd(pub Monomial);

impl PartialOrd for DegrevlexOrd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegrevlexOrd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_degrevlex(&other.0)
    }
}

/// Monomial ideal kept as its unique minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops duplicates and any generator divisible by another; generators
    /// are stored in ascending degrevlex order.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut sorted = gens;
        sorted.iter().for_each(|g| assert_eq!(g.nvars(), nvars));
        sorted.sort_by(|a, b| a.cmp_degrevlex(b));
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            // Earlier entries are degrevlex-smaller, so only they can divide g.
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_generator_degree(&self) -> Exp {
        self.gens
            .iter()
            .map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn contains_pure_power(&self, i: usize) -> bool {
        // A pure power lies in the ideal iff a minimal generator is one.
        self.gens.iter().any(|g| g.is_pure_power_of(i))
    }
}
