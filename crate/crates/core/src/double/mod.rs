//! The pairing between A_C^C and A_C^{C^rev}, the Drinfeld double of
//! A_C^{C^rev} built from it, and the map identifying that double with
//! A_C^{C⊠C^rev}. Pointed input only.
//!
//! The double follows the presentation with `D(A) = B ⊗ A / I`, which agrees
//! with Kassel's convention for Hopf algebras and differs from the
//! Nikshych–Vainerman double by `S* ⊗ id`; only this presentation is built.

mod drinfeld;
mod pairing;
mod sharp;

use thiserror::Error;

use crate::builders::BuildError;
use crate::exactmath::ExactError;
use crate::wha::WhaError;

pub use drinfeld::{build_drinfeld_double, DoubleAlgebra};
pub use pairing::{build_pairing, copairing, snake_failure, PairingForm, PairingLaw, PairingReport};
pub use sharp::{sharp_iso, sharp_matrix, SharpReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleError {
    #[error("the double is only built for pointed categories")]
    NotPointed,
    #[error("shape: {0}")]
    Shape(String),
    #[error("pairing law {law:?} fails at {indices:?}")]
    PairingLaw { law: PairingLaw, indices: Vec<usize> },
    #[error("pairing has rank {rank}, expected {dim}")]
    Degenerate { rank: usize, dim: usize },
    #[error("copairing fails a snake identity at basis element {0}")]
    Copairing(usize),
    #[error("the antipode of A is not invertible")]
    SingularAntipode,
    #[error("quotient has dimension {found}, expected {expected}")]
    QuotientDim { expected: usize, found: usize },
    #[error("no antipode satisfies the weak Hopf identities")]
    NoAntipode,
    #[error("{suite} suite fails: {detail}")]
    Verification { suite: &'static str, detail: String },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Wha(#[from] WhaError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
