//! Exact computation of Pommaret bases for homogeneous polynomial ideals
//! over the rationals, and of the invariants they expose in closed form:
//! Hilbert series, degree, Castelnuovo-Mumford regularity, depth, satiety.
//! An independent linear-algebra oracle cross-checks every formula.

pub mod bounds;
pub mod context;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod pommaret;
pub mod random_ideal;
pub mod report;
pub mod rng;
pub mod verify;

pub use bounds::{bound_report, BoundEntry, BoundReport, DegreeSequence};
pub use context::VariableContext;
pub use error::{Error, QuasiStabilityWitness, Result};
pub use invariants::{
    compute_invariants, HilbertPolynomial, HilbertSeries, IdealInvariants,
};
pub use groebner::{buchberger, ideal_membership, normal_form, GroebnerBasis};
pub use monomial::{Exp, Monomial, MonomialIdeal};
pub use oracle::{
    degree_by_differences, macaulay_hf, monomial_ideal_dimension, standard_monomial_count,
    HFTable,
};
pub use parse::{parse_ideal, parse_polynomial, IdealInput};
pub use pipeline::{analyze, Analysis};
pub use poly::{Polynomial, Term};
pub use pommaret::{
    involutive_normal_form, is_quasi_stable, monomial_pommaret_basis, polynomial_pommaret_basis,
    quasi_stability_witness, random_linear_transform, restrict_basis, saturation_basis,
    saturation_generators, BasisElement, LinearChange, PommaretBasis, TransformResult,
};
pub use random_ideal::random_quasi_stable_ideal;
pub use report::{render, series_display, ReportFormat};
pub use rng::SplitMix64;
pub use verify::{monomial_ideal_input, verify_analysis, verify_input, PropertyCheck, VerifyReport};
