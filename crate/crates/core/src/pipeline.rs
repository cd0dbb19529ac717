//! End-to-end analysis: input ideal -> coordinates in quasi-stable position
//! -> Pommaret basis -> invariants.

use crate::error::Result;
use crate::groebner::GroebnerBasis;
use crate::invariants::{compute_invariants, IdealInvariants};
use crate::parse::IdealInput;
use crate::pommaret::{polynomial_pommaret_basis, random_linear_transform, PommaretBasis, TransformResult};

/// Everything the reporting layer needs about one ideal.
#[derive(Debug, Clone)]
pub struct Analysis {
    /// The input as parsed, in its original coordinates.
    pub input: IdealInput,
    /// Coordinate search outcome; `tries == 0` means the original coordinates
    /// were already quasi-stable and `transform.input == input`.
    pub transform: TransformResult,
    /// Pommaret basis in the successful coordinates.
    pub basis: PommaretBasis,
    pub invariants: IdealInvariants,
}

impl Analysis {
    /// Reduced Groebner basis in the coordinates the invariants were read from.
    pub fn gb(&self) -> &GroebnerBasis {
        &self.transform.gb
    }

    pub fn was_transformed(&self) -> bool {
        self.transform.tries > 0
    }
}

/// Run the full pipeline. Deterministic for fixed (input, seed, max_tries).
pub fn analyze(input: &IdealInput, seed: u64, max_tries: u32) -> Result<Analysis> {
    let transform = random_linear_transform(input, seed, max_tries)?;
    let basis = polynomial_pommaret_basis(&transform.gb)?;
    let invariants = compute_invariants(&basis, &transform.gb);
    Ok(Analysis {
        input: input.clone(),
        transform,
        basis,
        invariants,
    })
}
