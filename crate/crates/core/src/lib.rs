//! Exact construction and verification of weak Hopf algebras attached to
//! fusion categories and their module categories.

pub mod exactmath;
pub mod groups;
pub mod skeleton;
pub mod wha;
pub mod builders;
pub mod repcat;
pub mod tube;
pub mod double;
