//! Associative unital algebras and bimodules given by structure constants.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactmath::{linalg, Accumulator, Cyclotomic, SparseMatrix, SparseTensor3, SparseVec};

use super::TubeError;

/// An algebra with multiplication `b_i b_j = Σ_k mu[i,j,k] b_k` and a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainAlgebra {
    labels: Vec<String>,
    mu: SparseTensor3,
    unit: SparseVec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraViolation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub passed: bool,
    pub checked: usize,
    pub violation: Option<AlgebraViolation>,
}

fn mul_with(mu: &SparseTensor3, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            let ab = a * b;
            for e in mu.pair(*i, *j) {
                acc.add(e.k, &(&ab * &e.value));
            }
        }
    }
    acc.into_vec()
}

impl PlainAlgebra {
    pub fn new(labels: Vec<String>, mu: SparseTensor3, unit: SparseVec) -> Result<Self, TubeError> {
        let d = labels.len();
        if mu.dims() != (d, d, d) {
            return Err(TubeError::Shape(format!("multiplication has shape {:?}, expected dim {d}", mu.dims())));
        }
        if unit.max_index().is_some_and(|m| m >= d) {
            return Err(TubeError::Shape("unit outside the basis".into()));
        }
        Ok(PlainAlgebra { labels, mu, unit })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn conductor(&self) -> u32 {
        self.mu.conductor()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mu(&self) -> &SparseTensor3 {
        &self.mu
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.conductor())
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        mul_with(&self.mu, x, y)
    }

    /// Exhaustive associativity and two-sided unit check on basis elements.
    pub fn verify(&self) -> AlgebraReport {
        let d = self.dim();
        for i in 0..d {
            let b = self.basis(i);
            if self.mul(&self.unit, &b) != b {
                return AlgebraReport { passed: false, checked: i, violation: Some(AlgebraViolation::LeftUnit { i }) };
            }
            if self.mul(&b, &self.unit) != b {
                return AlgebraReport { passed: false, checked: i, violation: Some(AlgebraViolation::RightUnit { i }) };
            }
        }
        let bad = (0..d).into_par_iter().find_map_first(|i| {
            for j in 0..d {
                let ij = self.mu.pair(i, j);
                for k in 0..d {
                    let jk = self.mu.pair(j, k);
                    if ij.is_empty() && jk.is_empty() {
                        continue;
                    }
                    let mut lhs = Accumulator::new();
                    for e in ij {
                        for f in self.mu.pair(e.k, k) {
                            lhs.add(f.k, &(&e.value * &f.value));
                        }
                    }
                    let mut rhs = Accumulator::new();
                    for e in jk {
                        for f in self.mu.pair(i, e.k) {
                            rhs.add(f.k, &(&e.value * &f.value));
                        }
                    }
                    if lhs.into_sorted() != rhs.into_sorted() {
                        return Some(AlgebraViolation::Associativity { i, j, k });
                    }
                }
            }
            None
        });
        AlgebraReport { passed: bad.is_none(), checked: d * d * d + 2 * d, violation: bad }
    }

    pub fn is_commutative(&self) -> bool {
        let products = |i, j| self.mu.pair(i, j).iter().map(|e| (e.k, &e.value)).collect::<Vec<_>>();
        (0..self.dim()).all(|i| (0..i).all(|j| products(i, j) == products(j, i)))
    }

    /// Dimension of the center, from the nullspace of all commutators.
    pub fn center_dim(&self) -> usize {
        let d = self.dim();
        let mut triples = Vec::new();
        for x in 0..d {
            for z in 0..d {
                for e in self.mu.pair(z, x) {
                    triples.push((x * d + e.k, z, e.value.clone()));
                }
                for e in self.mu.pair(x, z) {
                    triples.push((x * d + e.k, z, -&e.value));
                }
            }
        }
        let m = SparseMatrix::from_triples(d * d, d, self.conductor(), triples).expect("in range");
        d - linalg::rank(&m)
    }

    /// First basis pair `(i, j)` with `f(b_i b_j) ≠ f(b_i) f(b_j)`, for the
    /// linear map into `target` whose columns are the `f(b_j)`.
    pub fn multiplicativity_failure(&self, target: &PlainAlgebra, f: &SparseMatrix) -> Option<(usize, usize)> {
        let d = self.dim();
        let image: Vec<SparseVec> = f.columns();
        (0..d).into_par_iter().find_map_first(|i| {
            (0..d).find_map(|j| {
                let lhs = f.mul_vec(&self.mul(&self.basis(i), &self.basis(j)));
                let rhs = target.mul(&image[i], &image[j]);
                (lhs != rhs).then_some((i, j))
            })
        })
    }
}

/// A bimodule with `a·v = Σ left[a,v,v'] v'` and `v·b = Σ right[v,b,v'] v'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub left: PlainAlgebra,
    pub right: PlainAlgebra,
    pub labels: Vec<String>,
    pub left_action: SparseTensor3,
    pub right_action: SparseTensor3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BimoduleViolation {
    LeftAssociativity { a: usize, b: usize, v: usize },
    RightAssociativity { v: usize, a: usize, b: usize },
    Commutation { a: usize, v: usize, b: usize },
    LeftUnit { v: usize },
    RightUnit { v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleReport {
    pub passed: bool,
    pub violation: Option<BimoduleViolation>,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.left.conductor())
    }

    pub fn act_left(&self, a: &SparseVec, v: &SparseVec) -> SparseVec {
        mul_with(&self.left_action, a, v)
    }

    pub fn act_right(&self, v: &SparseVec, b: &SparseVec) -> SparseVec {
        mul_with(&self.right_action, v, b)
    }

    /// Unit laws, associativity of both actions and their commutation, on
    /// all basis triples.
    pub fn verify(&self) -> BimoduleReport {
        let fail = |v| BimoduleReport { passed: false, violation: Some(v) };
        let (dl, dr, dv) = (self.left.dim(), self.right.dim(), self.dim());
        for v in 0..dv {
            let x = self.vector(v);
            if self.act_left(self.left.unit(), &x) != x {
                return fail(BimoduleViolation::LeftUnit { v });
            }
            if self.act_right(&x, self.right.unit()) != x {
                return fail(BimoduleViolation::RightUnit { v });
            }
        }
        let bad = (0..dv).into_par_iter().find_map_first(|v| {
            let x = self.vector(v);
            for a in 0..dl {
                let ax = self.act_left(&self.left.basis(a), &x);
                for b in 0..dl {
                    let lhs = self.act_left(&self.left.mul(&self.left.basis(b), &self.left.basis(a)), &x);
                    if lhs != self.act_left(&self.left.basis(b), &ax) {
                        return Some(BimoduleViolation::LeftAssociativity { a: b, b: a, v });
                    }
                }
                for b in 0..dr {
                    let lhs = self.act_right(&ax, &self.right.basis(b));
                    let rhs = self.act_left(&self.left.basis(a), &self.act_right(&x, &self.right.basis(b)));
                    if lhs != rhs {
                        return Some(BimoduleViolation::Commutation { a, v, b });
                    }
                }
            }
            for a in 0..dr {
                let xa = self.act_right(&x, &self.right.basis(a));
                for b in 0..dr {
                    let lhs = self.act_right(&x, &self.right.mul(&self.right.basis(a), &self.right.basis(b)));
                    if lhs != self.act_right(&xa, &self.right.basis(b)) {
                        return Some(BimoduleViolation::RightAssociativity { v, a, b });
                    }
                }
            }
            None
        });
        BimoduleReport { passed: bad.is_none(), violation: bad }
    }
}

pub(crate) fn root(conductor: u32, e: i64) -> Cyclotomic {
    Cyclotomic::root(conductor, e.rem_euclid(conductor as i64))
}
