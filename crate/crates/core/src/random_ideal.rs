//! Seeded sampling of quasi-stable monomial ideals for property suites.
//!
//! Construction: pick a variable prefix x1..xj inside k[x1..xn], throw in a
//! pure power of every prefix variable, then apply a number of exchange moves
//! m -> x_j' * m / x_i with j' < i to random generators. Every generator stays
//! supported in the prefix and the ideal always contains a pure power of each
//! prefix variable, which makes quasi-stability automatic: the exchange
//! x_j'^t * m / x_i^s lands in the ideal for t at least the pure-power
//! exponent of x_j'. The result is asserted quasi-stable anyway.

use crate::monomial::{Exp, Monomial, MonomialIdeal};
use crate::pommaret::is_quasi_stable;
use crate::rng::SplitMix64;

/// Draw one quasi-stable monomial ideal: 1..=max_vars variables, minimal
/// generator degrees 1..=max_degree. Consumes a deterministic number of draws
/// from the stream for a given outcome path, so a fixed seed reproduces the
/// whole sequence of ideals.
pub fn random_quasi_stable_ideal(
    rng: &mut SplitMix64,
    max_vars: usize,
    max_degree: Exp,
) -> MonomialIdeal {
    assert!(max_vars >= 1 && max_degree >= 1);
    let n = 1 + rng.below(max_vars as u64) as usize;
    let prefix = 1 + rng.below(n as u64) as usize;
    let mut pool: Vec<Monomial> = (0..prefix)
        .map(|i| {
            let e = 1 + rng.below(u64::from(max_degree)) as Exp;
            Monomial::from_exps((0..n).map(|v| if v == i { e } else { 0 }).collect())
        })
        .collect();
    let moves = rng.below(2 * prefix as u64 + 3);
    for _ in 0..moves {
        let m = &pool[rng.below(pool.len() as u64) as usize];
        let movable: Vec<usize> = (1..n).filter(|&i| m.exp(i) > 0).collect();
        if movable.is_empty() {
            continue;
        }
        let i = movable[rng.below(movable.len() as u64) as usize];
        let target = rng.below(i as u64) as usize;
        let exps: Vec<Exp> = (0..n)
            .map(|v| {
                let e = m.exp(v);
                if v == i {
                    e - 1
                } else if v == target {
                    e + 1
                } else {
                    e
                }
            })
            .collect();
        pool.push(Monomial::from_exps(exps));
    }
    let ideal = MonomialIdeal::new(n, pool);
    assert!(
        is_quasi_stable(&ideal),
        "sampler is designed to stay quasi-stable"
    );
    ideal
}
