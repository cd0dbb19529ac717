//! Degree bounds from the generator degrees and the dimension, evaluated in
//! exact arithmetic, plus a report comparing each bound against the computed
//! invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};

use crate::error::{Error, Result};
use crate::invariants::IdealInvariants;

/// Generator degrees d_1 >= ... >= d_k in an ambient ring of n variables.
/// Indices past k read as 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
    n: usize,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u64>, n: usize) -> Self {
        assert!(!degrees.is_empty(), "a degree sequence needs k >= 1");
        assert!(degrees.iter().all(|&d| d >= 1), "degrees are positive");
        assert!(n >= 1, "ambient ring needs a variable");
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees, n }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    /// d_i with 1-based index and the d_i = 1 convention past k.
    pub fn d(&self, i: usize) -> u64 {
        assert!(i >= 1);
        self.degrees.get(i - 1).copied().unwrap_or(1)
    }

    pub fn d1(&self) -> u64 {
        self.degrees[0]
    }

    pub fn min_degree(&self) -> u64 {
        *self.degrees.last().unwrap()
    }

    fn prefix_product(&self, m: usize) -> BigInt {
        (1..=m).map(|i| BigInt::from(self.d(i))).product()
    }

    fn require_min_degree_two(&self, bound: &'static str) -> Result<()> {
        if self.min_degree() < 2 {
            return Err(Error::DegreeHypothesis {
                bound,
                min_degree: self.min_degree(),
            });
        }
        Ok(())
    }
}

/// Product of the first min(k, n) degrees.
pub fn bezout_classical(ds: &DegreeSequence) -> BigInt {
    ds.prefix_product(ds.k().min(ds.n()))
}

/// Product of the first min(k, n - D + 1) degrees; requires D > 0.
pub fn bezout_dim_mu(ds: &DegreeSequence, d: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::DimensionHypothesis {
            bound: "bezout_dim_mu",
            requirement: "a positive dimension".into(),
            actual: 0,
        });
    }
    Ok(ds.prefix_product(ds.k().min(ds.n() - d + 1)))
}

/// Product of the first n - D degrees (with the d_i = 1 padding); requires
/// 0 <= D <= n - 1.
pub fn bezout_dim(ds: &DegreeSequence, d: usize) -> Result<BigInt> {
    if d + 1 > ds.n() {
        return Err(Error::DimensionHypothesis {
            bound: "bezout_dim",
            requirement: format!("dimension at most {}", ds.n() - 1),
            actual: d,
        });
    }
    Ok(ds.prefix_product(ds.n() - d))
}

/// d_1^(n - D).
pub fn masser_wustholz(d1: u64, n: usize, d: usize) -> BigInt {
    assert!(n > d, "needs n - D >= 1");
    BigInt::from(d1).pow((n - d) as u32)
}

/// Case evaluation: product of all degrees when n >= k; d_k when n = 1;
/// d_k times the first n - 1 degrees when k > n > 1.
pub fn nullstellensatz_n(ds: &DegreeSequence) -> BigInt {
    let (n, k) = (ds.n(), ds.k());
    if n >= k {
        ds.prefix_product(k)
    } else if n == 1 {
        BigInt::from(ds.min_degree())
    } else {
        BigInt::from(ds.min_degree()) * ds.prefix_product(n - 1)
    }
}

/// d_1 + ... + d_r - r + 1 with r = n - depth; intended for dimension <= 1
/// in generic position.
pub fn lazard_bound(ds: &DegreeSequence, depth: usize) -> BigInt {
    assert!(depth <= ds.n());
    let r = ds.n() - depth;
    let sum: u64 = (1..=r).map(|i| ds.d(i)).sum();
    BigInt::from(sum) - BigInt::from(r as u64) + BigInt::one()
}

/// max of the product of the first n - 1 degrees and the Lazard bound;
/// bounds the Noether exponent in dimension one, characteristic zero.
pub fn noether_exponent_bound_dim1(ds: &DegreeSequence, depth: usize) -> BigInt {
    ds.prefix_product(ds.n() - 1).max(lazard_bound(ds, depth))
}

/// 3 times the product of the first n - D degrees; requires every degree at
/// least 2.
pub fn representation_bound(ds: &DegreeSequence, d: usize) -> Result<BigInt> {
    ds.require_min_degree_two("representation_bound")?;
    Ok(BigInt::from(3) * ds.prefix_product(ds.n() - d))
}

/// max{deg_f, d_1 + 3(n - D)P} + 3P with P the product of the first n - D
/// degrees; requires every degree at least 2.
pub fn membership_elim_bound(ds: &DegreeSequence, d: usize, deg_f: u64) -> Result<BigInt> {
    ds.require_min_degree_two("membership_elim_bound")?;
    let p = ds.prefix_product(ds.n() - d);
    let second = BigInt::from(ds.d1()) + BigInt::from(3 * (ds.n() - d) as u64) * &p;
    Ok(BigInt::from(deg_f).max(second) + BigInt::from(3) * p)
}

/// deg_f + (k * d_1^D)^(2^(n - D)); n and k may be supplied independently
/// of the sequence to evaluate hypothetical shapes.
pub fn membership_coeff_bound(
    ds: &DegreeSequence,
    d: usize,
    n: usize,
    k: usize,
    deg_f: u64,
) -> BigInt {
    assert!(n >= d);
    let base = BigInt::from(k as u64) * BigInt::from(ds.d1()).pow(d as u32);
    BigInt::from(deg_f) + base.pow(pow2((n - d) as u32))
}

/// c + (d * s)^(2^n).
pub fn hermann_bound(c: u64, d: u64, s: u64, n: usize) -> BigInt {
    BigInt::from(c) + (BigInt::from(d) * BigInt::from(s)).pow(pow2(n as u32))
}

fn pow2(e: u32) -> u32 {
    1u32.checked_shl(e).expect("exponent 2^e exceeds u32")
}

/// 2 * ((P^(n-D) + d_1) / 2)^(2^D) with P the product of the first n - D
/// degrees, kept as an exact rational: the inner half need not be integral.
/// Requires every degree at least 2.
pub fn gb_degree_bound(ds: &DegreeSequence, d: usize) -> Result<BigRational> {
    ds.require_min_degree_two("gb_degree_bound")?;
    let p = ds.prefix_product(ds.n() - d);
    let inner = BigRational::new(p.pow((ds.n() - d) as u32) + BigInt::from(ds.d1()), BigInt::from(2));
    Ok(BigRational::from_integer(BigInt::from(2)) * inner.pow(pow2(d as u32) as i32))
}

/// One evaluated bound. `value` is None when the hypotheses fail, with the
/// reason in `note`. `holds`/`attained` compare against the reference named
/// in `compared_to` (the true degree or the reduced Groebner basis degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: Option<BigRational>,
    pub note: Option<String>,
    pub compared_to: Option<&'static str>,
    pub holds: Option<bool>,
    pub attained: bool,
}

impl BoundEntry {
    fn value(name: &'static str, value: BigInt) -> Self {
        BoundEntry {
            name,
            value: Some(BigRational::from_integer(value)),
            note: None,
            compared_to: None,
            holds: None,
            attained: false,
        }
    }

    fn na(name: &'static str, note: &str) -> Self {
        BoundEntry {
            name,
            value: None,
            note: Some(note.to_string()),
            compared_to: None,
            holds: None,
            attained: false,
        }
    }

    fn noted(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    fn compared(mut self, reference_name: &'static str, reference: u64) -> Self {
        let reference = BigRational::from_integer(BigInt::from(reference));
        let value = self.value.as_ref().expect("comparison needs a value");
        self.compared_to = Some(reference_name);
        self.holds = Some(*value >= reference);
        self.attained = *value == reference;
        self
    }
}

/// All applicable bounds for one ideal, with input echo and comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub degrees: Vec<u64>,
    pub dimension: usize,
    pub depth: usize,
    pub true_degree: u64,
    pub gb_degree: u64,
    pub entries: Vec<BoundEntry>,
}

pub fn bound_report(inv: &IdealInvariants, ds: &DegreeSequence) -> BoundReport {
    let n = ds.n();
    let d = inv.dimension;
    let deg = inv.degree;
    let gb_deg = inv.gb_degree as u64;
    let mut entries = vec![];

    entries.push(
        BoundEntry::value("bezout_classical", bezout_classical(ds)).compared("degree", deg),
    );
    entries.push(match bezout_dim_mu(ds, d) {
        Ok(v) => BoundEntry::value("bezout_dim_mu", v).compared("degree", deg),
        Err(_) => BoundEntry::na("bezout_dim_mu", "n/a (dimension 0)"),
    });
    entries.push(match bezout_dim(ds, d) {
        Ok(v) => BoundEntry::value("bezout_dim", v).compared("degree", deg),
        Err(_) => BoundEntry::na("bezout_dim", "n/a (zero ideal)"),
    });
    entries.push(if n > d {
        BoundEntry::value("masser_wustholz", masser_wustholz(ds.d1(), n, d))
            .compared("degree", deg)
    } else {
        BoundEntry::na("masser_wustholz", "n/a (zero ideal)")
    });
    entries.push(BoundEntry::value("nullstellensatz_degree", nullstellensatz_n(ds)));
    entries.push(if d <= 1 {
        BoundEntry::value("lazard", lazard_bound(ds, inv.depth))
            .compared("gb_degree", gb_deg)
            .noted("assumes generic position")
    } else {
        BoundEntry::na("lazard", "n/a (dimension > 1)")
    });
    entries.push(if d == 1 {
        BoundEntry::value(
            "noether_exponent_dim1",
            noether_exponent_bound_dim1(ds, inv.depth),
        )
        .noted("assumes characteristic zero and generic position")
    } else {
        BoundEntry::na("noether_exponent_dim1", "n/a (dimension != 1)")
    });
    entries.push(match representation_bound(ds, d) {
        Ok(v) => BoundEntry::value("representation", v),
        Err(_) => BoundEntry::na("representation", "n/a (d_k < 2)"),
    });
    entries.push(match gb_degree_bound(ds, d) {
        Ok(v) => BoundEntry {
            name: "gb_degree_bound",
            value: Some(v),
            note: None,
            compared_to: None,
            holds: None,
            attained: false,
        }
        .compared("gb_degree", gb_deg),
        Err(_) => BoundEntry::na("gb_degree_bound", "n/a (d_k < 2)"),
    });

    for e in &entries {
        if let Some(v) = &e.value {
            assert!(v >= &BigRational::one(), "bound values are at least 1");
            assert!(v.is_positive());
        }
    }
    BoundReport {
        n,
        k: ds.k(),
        degrees: ds.degrees().to_vec(),
        dimension: d,
        depth: inv.depth,
        true_degree: deg,
        gb_degree: gb_deg,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(big(v))
    }

    #[test]
    fn classical_bezout() {
        assert_eq!(bezout_classical(&DegreeSequence::new(vec![2; 9], 9)), big(512));
        assert_eq!(bezout_classical(&DegreeSequence::new(vec![5], 3)), big(5));
        assert_eq!(bezout_classical(&DegreeSequence::new(vec![4, 3], 2)), big(12));
        // More generators than variables: only the first n count.
        assert_eq!(
            bezout_classical(&DegreeSequence::new(vec![3, 2, 2], 2)),
            big(6)
        );
    }

    #[test]
    fn dimension_dependent_bezout_with_mu() {
        assert_eq!(
            bezout_dim_mu(&DegreeSequence::new(vec![2; 9], 9), 3).unwrap(),
            big(128)
        );
        assert_eq!(
            bezout_dim_mu(&DegreeSequence::new(vec![7], 4), 3).unwrap(),
            big(7)
        );
        assert_eq!(
            bezout_dim_mu(&DegreeSequence::new(vec![2, 2], 3), 1).unwrap(),
            big(4)
        );
        assert!(matches!(
            bezout_dim_mu(&DegreeSequence::new(vec![2, 2], 3), 0),
            Err(Error::DimensionHypothesis { .. })
        ));
    }

    #[test]
    fn dimension_dependent_bezout() {
        assert_eq!(
            bezout_dim(&DegreeSequence::new(vec![2; 9], 9), 3).unwrap(),
            big(64)
        );
        assert_eq!(
            bezout_dim(&DegreeSequence::new(vec![2, 2], 3), 1).unwrap(),
            big(4)
        );
        assert_eq!(
            bezout_dim(&DegreeSequence::new(vec![6, 5, 4], 4), 3).unwrap(),
            big(6)
        );
        // Padding past k.
        assert_eq!(
            bezout_dim(&DegreeSequence::new(vec![3], 4), 1).unwrap(),
            big(3)
        );
        assert!(matches!(
            bezout_dim(&DegreeSequence::new(vec![2], 3), 3),
            Err(Error::DimensionHypothesis { .. })
        ));
    }

    #[test]
    fn masser_wustholz_power() {
        assert_eq!(masser_wustholz(2, 9, 3), big(64));
        assert_eq!(masser_wustholz(1, 5, 2), big(1));
        assert_eq!(masser_wustholz(4, 2, 1), big(4));
    }

    #[test]
    fn nullstellensatz_cases() {
        assert_eq!(nullstellensatz_n(&DegreeSequence::new(vec![2, 2], 3)), big(4));
        assert_eq!(
            nullstellensatz_n(&DegreeSequence::new(vec![3, 2, 2], 2)),
            big(6)
        );
        assert_eq!(nullstellensatz_n(&DegreeSequence::new(vec![5], 1)), big(5));
        // Coincides with the classical bound when n >= k.
        let ds = DegreeSequence::new(vec![4, 3], 2);
        assert_eq!(nullstellensatz_n(&ds), bezout_classical(&ds));
    }

    #[test]
    fn lazard_and_noether_exponent() {
        assert_eq!(lazard_bound(&DegreeSequence::new(vec![4, 3], 2), 0), big(6));
        assert_eq!(lazard_bound(&DegreeSequence::new(vec![9, 2], 2), 1), big(9));
        assert_eq!(lazard_bound(&DegreeSequence::new(vec![2, 2, 2], 3), 0), big(4));
        assert_eq!(
            noether_exponent_bound_dim1(&DegreeSequence::new(vec![4, 3], 2), 0),
            big(6)
        );
        assert_eq!(
            noether_exponent_bound_dim1(&DegreeSequence::new(vec![2, 2], 2), 0),
            big(3)
        );
        // r = 1 keeps only d_1 in the Lazard part.
        assert_eq!(
            noether_exponent_bound_dim1(&DegreeSequence::new(vec![3, 2, 2], 3), 2),
            big(6)
        );
    }

    #[test]
    fn representation_and_membership() {
        assert_eq!(
            representation_bound(&DegreeSequence::new(vec![2; 9], 9), 3).unwrap(),
            big(192)
        );
        assert_eq!(
            representation_bound(&DegreeSequence::new(vec![2, 2], 3), 1).unwrap(),
            big(12)
        );
        assert!(matches!(
            representation_bound(&DegreeSequence::new(vec![2, 1], 3), 1),
            Err(Error::DegreeHypothesis { .. })
        ));
        assert_eq!(
            membership_elim_bound(&DegreeSequence::new(vec![2, 2], 3), 1, 2).unwrap(),
            big(38)
        );
        assert_eq!(
            membership_elim_bound(&DegreeSequence::new(vec![2; 9], 9), 3, 2).unwrap(),
            big(1346)
        );
        let huge = 1_000_000u64;
        assert_eq!(
            membership_elim_bound(&DegreeSequence::new(vec![2, 2], 3), 1, huge).unwrap(),
            big(huge as i64 + 12)
        );
    }

    #[test]
    fn coefficient_and_hermann_bounds() {
        let ds = DegreeSequence::new(vec![2, 2], 2);
        assert_eq!(membership_coeff_bound(&ds, 1, 2, 2, 5), big(21));
        let ds0 = DegreeSequence::new(vec![3, 3, 2], 2);
        assert_eq!(
            membership_coeff_bound(&ds0, 0, 2, 3, 1),
            big(1) + big(3).pow(4u32)
        );
        let es = DegreeSequence::new(vec![2; 9], 9);
        assert_eq!(
            membership_coeff_bound(&es, 3, 9, 9, 2),
            big(2) + big(72).pow(64u32)
        );
        assert_eq!(hermann_bound(0, 1, 1, 5), big(1));
        assert_eq!(hermann_bound(2, 2, 3, 2), big(1298));
        assert_eq!(hermann_bound(5, 2, 2, 3), big(65541));
    }

    #[test]
    fn groebner_degree_bound() {
        assert_eq!(
            gb_degree_bound(&DegreeSequence::new(vec![2, 2], 3), 1).unwrap(),
            rat(162)
        );
        // D = 0 collapses to (d_1...d_n)^n + d_1.
        assert_eq!(
            gb_degree_bound(&DegreeSequence::new(vec![3, 2], 2), 0).unwrap(),
            rat(39)
        );
        // Odd inner sum with D >= 1 stays rational.
        assert_eq!(
            gb_degree_bound(&DegreeSequence::new(vec![3, 2], 3), 1).unwrap(),
            BigRational::new(big(1521), big(2))
        );
        assert!(gb_degree_bound(&DegreeSequence::new(vec![2, 1], 3), 1).is_err());
    }

    #[test]
    fn report_shape_and_flags() {
        let inv = IdealInvariants {
            dimension: 1,
            degree: 4,
            regularity: 3,
            depth: 1,
            satiety: 0,
            hilbert_regularity: 2,
            gb_degree: 2,
        };
        let ds = DegreeSequence::new(vec![2, 2], 3);
        let report = bound_report(&inv, &ds);
        let by_name = |name: &str| {
            report
                .entries
                .iter()
                .find(|e| e.name == name)
                .unwrap()
                .clone()
        };
        let dim = by_name("bezout_dim");
        assert_eq!(dim.value, Some(rat(4)));
        assert_eq!(dim.holds, Some(true));
        assert!(dim.attained);
        let mu = by_name("bezout_dim_mu");
        assert_eq!(mu.value, Some(rat(4)));
        // k = 2 < n, so even the classical bound collapses to 4 here.
        assert!(by_name("bezout_classical").attained);
        assert_eq!(by_name("lazard").value, Some(rat(3)));
        assert_eq!(by_name("lazard").holds, Some(true));
        assert_eq!(by_name("noether_exponent_dim1").value, Some(rat(4)));
        assert_eq!(by_name("representation").value, Some(rat(12)));
        assert_eq!(by_name("gb_degree_bound").value, Some(rat(162)));
        assert_eq!(report.true_degree, 4);
    }

    #[test]
    fn report_gates() {
        let inv = IdealInvariants {
            dimension: 2,
            degree: 1,
            regularity: 1,
            depth: 2,
            satiety: 0,
            hilbert_regularity: 0,
            gb_degree: 1,
        };
        let ds = DegreeSequence::new(vec![1], 3);
        let report = bound_report(&inv, &ds);
        let by_name = |name: &str| report.entries.iter().find(|e| e.name == name).unwrap();
        assert_eq!(
            by_name("representation").note.as_deref(),
            Some("n/a (d_k < 2)")
        );
        assert!(by_name("gb_degree_bound").value.is_none());
        assert_eq!(by_name("lazard").note.as_deref(), Some("n/a (dimension > 1)"));
        assert!(by_name("noether_exponent_dim1").value.is_none());
        assert_eq!(by_name("bezout_dim_mu").value, Some(rat(1)));
    }

    #[test]
    fn bound_chain_on_example_shapes() {
        for (degrees, n, d) in [
            (vec![2u64; 9], 9usize, 3usize),
            (vec![2, 2], 3, 1),
            (vec![3, 2, 2, 2], 3, 1),
            (vec![4, 3], 2, 1),
            (vec![6, 5, 2], 4, 2),
        ] {
            let ds = DegreeSequence::new(degrees, n);
            let dim = bezout_dim(&ds, d).unwrap();
            let mu = bezout_dim_mu(&ds, d).unwrap();
            let classical = bezout_classical(&ds);
            let mw = masser_wustholz(ds.d1(), n, d);
            assert!(dim <= mu, "{ds:?}");
            assert!(mu <= classical, "{ds:?}");
            assert!(dim <= mw, "{ds:?}");
        }
    }
}
