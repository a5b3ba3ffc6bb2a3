//! Constructors of weak Hopf algebras.
//!
//! Basis orders are lexicographic in the label tuple, with group elements in
//! their table order:
//! - `f[a|y|x]` for B_G^ω at index `(a·n + y)·n + x`;
//! - `e[a|b|y|x]` for A_G^ω at index `((a·n + b)·n + y)·n + x`;
//! - `(a; y', y; x', x)` for A_M^C, sorted by `(a, y, x, y', x')`;
//! - morphisms of a groupoid in input order;
//! - `b_i ⊗ b_j` for B ⊗ B^op at index `i·m + j`.

mod amc;
mod closed;
mod frobenius;
mod groupoid;

use thiserror::Error;

use crate::groups::GroupError;
use crate::skeleton::SkeletonError;
use crate::wha::WhaError;

pub use amc::{build_a_m_c, build_a_m_c_with};
pub use closed::{build_a_g_omega, build_b_g_omega, closed_form_r_matrix};
pub use frobenius::{build_frobenius_double, standard_frobenius, FrobeniusKind, SeparableFrobenius};
pub use groupoid::{build_groupoid_algebra, Groupoid, Morphism};

/// Structured basis tag; its `Display` form is the label stored in the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// `f[a|y|x]`
    Regular { a: usize, y: usize, x: usize },
    /// `e[a|b|y|x]`
    Double { a: usize, b: usize, y: usize, x: usize },
    /// `m[a|y'|y|x'|x]`
    Tuple { a: usize, y_target: usize, y: usize, x_target: usize, x: usize },
    /// `g[i]`
    Morphism(usize),
    /// `p[i|j]`
    Pair(usize, usize),
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            BasisLabel::Regular { a, y, x } => write!(f, "f[{a}|{y}|{x}]"),
            BasisLabel::Double { a, b, y, x } => write!(f, "e[{a}|{b}|{y}|{x}]"),
            BasisLabel::Tuple { a, y_target, y, x_target, x } => write!(f, "m[{a}|{y_target}|{y}|{x_target}|{x}]"),
            BasisLabel::Morphism(i) => write!(f, "g[{i}]"),
            BasisLabel::Pair(i, j) => write!(f, "p[{i}|{j}]"),
        }
    }
}

impl std::str::FromStr for BasisLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unrecognized basis label {s:?}");
        let (tag, rest) = s.split_once('[').ok_or_else(bad)?;
        let body = rest.strip_suffix(']').ok_or_else(bad)?;
        let nums: Vec<usize> = body
            .split('|')
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        Ok(match (tag, nums.as_slice()) {
            ("f", &[a, y, x]) => BasisLabel::Regular { a, y, x },
            ("e", &[a, b, y, x]) => BasisLabel::Double { a, b, y, x },
            ("m", &[a, y_target, y, x_target, x]) => BasisLabel::Tuple { a, y_target, y, x_target, x },
            ("g", &[i]) => BasisLabel::Morphism(i),
            ("p", &[i, j]) => BasisLabel::Pair(i, j),
            _ => return Err(bad()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("input is not multiplicity-free")]
    NotMultiplicityFree,
    #[error("module is not over the given category")]
    CategoryMismatch,
    #[error("no dual data: {0}")]
    MissingDualData(SkeletonError),
    #[error("groupoid: {0}")]
    Groupoid(String),
    #[error("separable Frobenius algebra: {0}")]
    Frobenius(String),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Wha(#[from] WhaError),
}
