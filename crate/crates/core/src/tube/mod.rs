//! Tube algebras of pointed categories, their Morita tower, the comparison
//! with A_C^{C⊠C^rev}, and a fusion-ring obstruction to weak bialgebra
//! structures on tube algebras.

mod algebra;
mod chi;
mod obstruction;
mod pivotal;
mod tower;
pub(crate) mod words;

use thiserror::Error;

use crate::builders::BuildError;
use crate::exactmath::ExactError;

pub use algebra::{AlgebraReport, AlgebraViolation, Bimodule, BimoduleReport, BimoduleViolation, PlainAlgebra};
pub use chi::{chi_iso, chi_matrix, underlying_algebra, ChiReport};
pub use obstruction::{weak_bialgebra_obstruction, Candidate, ObstructionPair, ObstructionReport};
pub use pivotal::{solve_pivotal, tube_vs_tube_prime, PivotalReport};
pub use tower::{
    build_tube, build_tube_bimodule, build_tube_prime, verify_morita_section, MoritaReport, TubeBasis, TubeFamily,
    TubeKind, TubeLabel,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TubeError {
    #[error("tube builders accept only pointed categories")]
    NotPointed,
    #[error("levels start at 1, got {0}")]
    Level(usize),
    #[error("shape: {0}")]
    Shape(String),
    #[error("malformed candidate: {0}")]
    MalformedCandidate(String),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
