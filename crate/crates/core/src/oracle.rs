//! Brute-force cross-checks that share no code with the closed-form route:
//! Hilbert functions from Macaulay-matrix ranks over the rationals, standard
//! monomial counting, degree extraction by finite differences, and a
//! vertex-cover dimension count.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exp, Monomial, MonomialIdeal};
use crate::parse::IdealInput;

/// Hilbert function values for degrees 0, 1, .., max contiguously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFTable {
    values: Vec<u64>,
}

impl HFTable {
    pub fn new(values: Vec<u64>) -> Self {
        assert!(!values.is_empty(), "table needs at least degree 0");
        HFTable { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, t: usize) -> u64 {
        self.values[t]
    }

    pub fn max_degree(&self) -> usize {
        self.values.len() - 1
    }
}

/// All monomials of total degree t in descending degrevlex order.
pub(crate) fn monomials_of_degree(nvars: usize, t: Exp) -> Vec<Monomial> {
    let mut out = vec![];
    let mut partial: Vec<Exp> = Vec::with_capacity(nvars);
    fn rec(nvars: usize, remaining: Exp, partial: &mut Vec<Exp>, out: &mut Vec<Monomial>) {
        if partial.len() == nvars - 1 {
            partial.push(remaining);
            out.push(Monomial::from_exps(partial.clone()));
            partial.pop();
            return;
        }
        for e in 0..=remaining {
            partial.push(e);
            rec(nvars, remaining - e, partial, out);
            partial.pop();
        }
    }
    rec(nvars, t, &mut partial, &mut out);
    out.sort_by(|a, b| b.cmp_degrevlex(a));
    out
}

type SparseRow = Vec<(usize, BigRational)>;

/// Rank by incremental elimination with one normalized pivot row per leading
/// column; rows and pivots stay sparse.
fn sparse_rank(rows: Vec<SparseRow>) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((lead, c)) = row.first().cloned() else {
                break;
            };
            let Some(pivot) = pivots.get(&lead) else {
                let inv = BigRational::one() / &c;
                for (_, v) in row.iter_mut() {
                    *v = &*v * &inv;
                }
                pivots.insert(lead, row);
                break;
            };
            // row -= c * pivot; the leading entries cancel exactly.
            let mut merged: SparseRow = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                match (row.get(i), pivot.get(j)) {
                    (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                        let v = vi - &(&c * vj);
                        if !v.is_zero() {
                            merged.push((*ci, v));
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                        merged.push((*ci, vi.clone()));
                        i += 1;
                    }
                    (Some(_), Some((cj, vj))) => {
                        merged.push((*cj, -(&c * vj)));
                        j += 1;
                    }
                    (Some((ci, vi)), None) => {
                        merged.push((*ci, vi.clone()));
                        i += 1;
                    }
                    (None, Some((cj, vj))) => {
                        merged.push((*cj, -(&c * vj)));
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            row = merged;
        }
    }
    pivots.len()
}

/// Fraction-free integer elimination; exact, suited to small dense matrices.
fn bareiss_rank(rows: Vec<SparseRow>, ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let scale = row
                .iter()
                .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            let mut dense = vec![BigInt::zero(); ncols];
            for (c, v) in row {
                dense[c] = v.numer() * &scale / v.denom();
            }
            dense
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                m[r][c] = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Dense Bareiss for desk-scale matrices, sparse elimination beyond.
fn rank_exact(rows: Vec<SparseRow>, ncols: usize) -> usize {
    if rows.len() <= 400 && ncols <= 400 {
        bareiss_rank(rows, ncols)
    } else {
        sparse_rank(rows)
    }
}

/// Hilbert function at degree t straight from the generators: the count of
/// all degree-t monomials minus the rank of the matrix whose rows are the
/// coefficient vectors of all shifts x^b * f_i of degree t.
pub fn macaulay_hf(input: &IdealInput, t: Exp) -> u64 {
    let n = input.nvars();
    let columns = monomials_of_degree(n, t);
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<SparseRow> = vec![];
    for f in &input.generators {
        let d = f.homogeneous_degree().expect("generators are homogeneous");
        if d > t {
            continue;
        }
        for b in monomials_of_degree(n, t - d) {
            let shifted = f.mul_term(&BigRational::one(), &b);
            let mut row: SparseRow = shifted
                .terms()
                .iter()
                .map(|term| (index[&term.mono], term.coeff.clone()))
                .collect();
            row.sort_by_key(|(c, _)| *c);
            rows.push(row);
        }
    }
    let rank = rank_exact(rows, columns.len());
    columns.len() as u64 - rank as u64
}

/// Count of degree-t monomials outside the monomial ideal. The recursion
/// fixes exponents variable by variable and prunes any subtree already
/// divisible by a generator.
pub fn standard_monomial_count(j: &MonomialIdeal, t: Exp) -> u64 {
    let n = j.nvars();
    let gens = j.gens();
    fn rec(gens: &[Monomial], active: &[usize], n: usize, i: usize, remaining: Exp) -> u64 {
        // A generator with no exponent left to satisfy divides everything
        // below this node.
        if active
            .iter()
            .any(|&g| (i..n).all(|v| gens[g].exp(v) == 0))
        {
            return 0;
        }
        if i == n - 1 {
            let free = active.iter().all(|&g| gens[g].exp(i) > remaining);
            return free as u64;
        }
        let mut total = 0;
        for e in 0..=remaining {
            let next: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&g| gens[g].exp(i) <= e)
                .collect();
            total += rec(gens, &next, n, i + 1, remaining - e);
        }
        total
    }
    if n == 1 {
        let blocked = gens.iter().any(|g| g.exp(0) <= t);
        return !blocked as u64;
    }
    let all: Vec<usize> = (0..gens.len()).collect();
    rec(gens, &all, n, 0, t)
}

/// Degree from a Hilbert function table: for D > 0 the (D-1)-th forward
/// difference, which must be constant across three consecutive windows
/// starting at `start`; for D = 0 the sum of the finite support (the table
/// must end in 0).
pub fn degree_by_differences(table: &HFTable, d: usize, start: usize) -> Result<u64> {
    if d == 0 {
        if *table.values().last().unwrap() != 0 {
            return Err(Error::UnboundedSupport {
                max: table.max_degree() as u32,
            });
        }
        return Ok(table.values().iter().sum());
    }
    assert!(
        start + d + 1 <= table.max_degree(),
        "table must cover start .. start + D + 1"
    );
    let diff_at = |s: usize| -> i128 {
        // (D-1)-th forward difference of HF at s.
        let mut window: Vec<i128> = (s..=s + d - 1).map(|t| table.value(t) as i128).collect();
        while window.len() > 1 {
            window = window.windows(2).map(|w| w[1] - w[0]).collect();
        }
        window[0]
    };
    let v = diff_at(start);
    if diff_at(start + 1) != v || diff_at(start + 2) != v {
        return Err(Error::NonConstantWindow {
            start: start as u32,
        });
    }
    u64::try_from(v).map_err(|_| Error::NonConstantWindow {
        start: start as u32,
    })
}

/// Krull dimension of a monomial ideal as n minus the size of a smallest
/// variable set meeting every generator's support.
pub fn monomial_ideal_dimension(j: &MonomialIdeal) -> usize {
    let n = j.nvars();
    assert!(n <= 20, "subset enumeration needs small n");
    let supports: Vec<u32> = j
        .gens()
        .iter()
        .map(|g| {
            (0..n)
                .filter(|&v| g.exp(v) > 0)
                .fold(0u32, |acc, v| acc | (1 << v))
        })
        .collect();
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if supports.iter().all(|s| s & mask != 0) {
            best = size;
        }
    }
    n - best.min(n)
}
