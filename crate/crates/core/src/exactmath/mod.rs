//! Exact scalars (rationals and cyclotomic numbers) and sparse linear algebra.

mod cyclotomic;
pub mod linalg;
mod rational;
mod sparse;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub use cyclotomic::{cyclo_inverse, cyclo_mul, cyclotomic_polynomial, field, CycloField, Cyclotomic};
pub use linalg::{inverse, nullspace, nullspace_dim, rank, rank_factorization, rref, solve_linear, solve_sparse, Rref};
pub use rational::Rational;
pub use sparse::{Accumulator, SparseMatrix, SparseTensor3, SparseVec, TensorEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot embed conductor {from} into conductor {to}")]
    BadEmbedding { from: u32, to: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    #[error("entry {index:?} outside tensor of shape {dims:?}")]
    TensorOutOfBounds {
        index: (usize, usize, usize),
        dims: (usize, usize, usize),
    },
    #[error("malformed scalar: {0}")]
    Parse(String),
}

/// External form of a scalar: `{"conductor": N, "coeffs": [[num, den], ...]}`
/// with exactly N pairs. Integers that do not fit in 64 bits are strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub conductor: u32,
    pub coeffs: Vec<[Value; 2]>,
}

fn int_to_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt, ExactError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| ExactError::Parse(format!("non-integer {n}"))),
        Value::String(s) => s.parse().map_err(|_| ExactError::Parse(format!("bad integer {s:?}"))),
        other => Err(ExactError::Parse(format!("expected integer, got {other}"))),
    }
}

impl From<&Cyclotomic> for ScalarJson {
    fn from(c: &Cyclotomic) -> Self {
        ScalarJson {
            conductor: c.conductor(),
            coeffs: c
                .padded_coeffs()
                .iter()
                .map(|r| [int_to_json(&r.numer()), int_to_json(&r.denom())])
                .collect(),
        }
    }
}

impl TryFrom<&ScalarJson> for Cyclotomic {
    type Error = ExactError;

    /// Accepts any N pairs and reduces them to canonical form.
    fn try_from(s: &ScalarJson) -> Result<Self, ExactError> {
        if s.conductor == 0 {
            return Err(ExactError::Parse("conductor must be positive".into()));
        }
        if s.coeffs.len() != s.conductor as usize {
            return Err(ExactError::Parse(format!(
                "expected {} coefficient pairs, found {}",
                s.conductor,
                s.coeffs.len()
            )));
        }
        let coeffs = s
            .coeffs
            .iter()
            .map(|[n, d]| Rational::new(int_from_json(n)?, int_from_json(d)?))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclotomic::from_power_coeffs(s.conductor, &coeffs))
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = ScalarJson::deserialize(deserializer)?;
        Cyclotomic::try_from(&s).map_err(serde::de::Error::custom)
    }
}

/// Least common multiple, used to pick a common conductor.
pub fn lcm(a: u32, b: u32) -> u32 {
    use num::integer::Integer;
    a.lcm(&b)
}
