//! Shared error type for parsing and the mathematical preconditions.

use std::fmt;
use thiserror::Error;

/// Witness of a failed quasi-stability test: for `generator` with maximal
/// x_i power s, no t >= 0 makes x_j^t * generator / x_i^s a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiStabilityWitness {
    /// Rendered generator monomial, e.g. "x1*x3^2".
    pub generator: String,
    /// 1-based index of the variable divided out.
    pub var_i: usize,
    /// 1-based index of the variable multiplied in.
    pub var_j: usize,
}

impl fmt::Display for QuasiStabilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "generator {} fails the exchange of x{} for x{}",
            self.generator, self.var_j, self.var_i
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generator {index} is a nonzero constant")]
    ConstantGenerator { index: usize },
    #[error("no generators given")]
    EmptyGeneratorList,
    #[error("the ideal is the whole ring")]
    ImproperIdeal,
    #[error("leading ideal is not quasi-stable: {witness}")]
    NotQuasiStable { witness: QuasiStabilityWitness },
    #[error("no quasi-stable position found in {tries} tries; last obstruction: {witness}")]
    TransformExhausted {
        tries: u32,
        witness: QuasiStabilityWitness,
    },
    #[error("{bound} requires every generator degree >= 2, but the minimum is {min_degree}")]
    DegreeHypothesis {
        bound: &'static str,
        min_degree: u64,
    },
    #[error("{bound} requires {requirement}, but the dimension is {actual}")]
    DimensionHypothesis {
        bound: &'static str,
        requirement: String,
        actual: usize,
    },
    #[error("difference window starting at degree {start} is not constant; raise the start degree")]
    NonConstantWindow { start: u32 },
    #[error("Hilbert function table ends at degree {max} before reaching zero")]
    UnboundedSupport { max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
