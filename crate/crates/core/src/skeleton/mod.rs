//! Skeletal data for multiplicity-free fusion categories and module categories.
//!
//! Hom spaces between a simple and a tensor product of two simples are at most
//! one-dimensional, each spanned by a fixed inclusion `I^{ab}_c: c -> ab` with
//! matching projection `P^{ab}_c`, `P I = 1`. The associator is recorded in the
//! basis of these inclusions:
//!
//! `α (I^{ab}_e ⊗ 1) I^{ec}_d = Σ_f F^{abc}_d[e,f] (1 ⊗ I^{bc}_f) I^{af}_d`
//!
//! and a module associator `L^{abx}_y[e,z]` is defined the same way for
//! `(ab)x -> a(bx)` with module inclusions `J^{ax}_y: y -> ax`.

mod constructors;
mod json;
mod pointed;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{linalg, Cyclotomic, ExactError, SparseMatrix};

pub use constructors::{
    boxtimes_rev_skeleton, dual_data_pointed, fib_fusion_ring, ising_skeleton, left_regular_module, pointed_ring,
    pointed_skeleton, regular_right_module,
};
pub use json::{CategoryJson, ModuleJson, RingJson};
pub use pointed::{pointed_data, Chain, PointedData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("fusion ring: {0}")]
    Ring(String),
    #[error("multiplicity {mult} > 1 for {a} x {b} -> {c}")]
    NotMultiplicityFree { a: usize, b: usize, c: usize, mult: u32 },
    #[error("associator entry {0:?} is not admissible")]
    Inadmissible([usize; 6]),
    #[error("associator block {0:?} has no entries")]
    MissingEntry([usize; 4]),
    #[error("associator block {0:?} is singular")]
    SingularBlock([usize; 4]),
    #[error("label {0} out of range")]
    LabelOutOfRange(usize),
    #[error("category is not pointed")]
    NotPointed,
    #[error("dual data fails a zigzag identity at label {0}")]
    Zigzag(usize),
    #[error(transparent)]
    Scalar(#[from] ExactError),
}

/// Fusion rules on a finite label set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    /// `mult[(a * r + b) * r + c] = N(a, b; c)`.
    mult: Vec<u32>,
    /// Nonzero products: `products[a * r + b]` lists `(c, N(a,b;c))`.
    products: Vec<Vec<(usize, u32)>>,
}

impl FusionRing {
    /// Builds from `(a, b, c, N)` triples; absent triples have N = 0.
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        rules: impl IntoIterator<Item = (usize, usize, usize, u32)>,
    ) -> Result<Self, SkeletonError> {
        let r = labels.len();
        if unit >= r || dual.len() != r || dual.iter().any(|&d| d >= r) {
            return Err(SkeletonError::Ring("unit or dual map out of range".into()));
        }
        let mut mult = vec![0u32; r * r * r];
        for (a, b, c, n) in rules {
            if a >= r || b >= r || c >= r {
                return Err(SkeletonError::LabelOutOfRange(a.max(b).max(c)));
            }
            mult[(a * r + b) * r + c] = n;
        }
        let products = (0..r * r)
            .map(|ab| {
                (0..r)
                    .filter_map(|c| {
                        let n = mult[ab * r + c];
                        (n > 0).then_some((c, n))
                    })
                    .collect()
            })
            .collect();
        Ok(FusionRing {
            labels,
            unit,
            dual,
            mult,
            products,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    #[inline]
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        let r = self.rank();
        self.mult[(a * r + b) * r + c]
    }

    /// Simple summands of `a ⊗ b` with multiplicities.
    #[inline]
    pub fn products(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.products[a * self.rank() + b]
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.mult.iter().all(|&n| n <= 1)
    }

    /// Unit laws, associativity of the fusion rules and duality.
    pub fn validate(&self) -> Result<(), SkeletonError> {
        let r = self.rank();
        let u = self.unit;
        for a in 0..r {
            for b in 0..r {
                let d = u32::from(a == b);
                if self.n(u, a, b) != d || self.n(a, u, b) != d {
                    return Err(SkeletonError::Ring(format!("unit law fails at ({a}, {b})")));
                }
                if self.n(a, b, u) != u32::from(b == self.dual[a]) {
                    return Err(SkeletonError::Ring(format!("duality fails at ({a}, {b})")));
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let lhs: u32 = (0..r).map(|e| self.n(a, b, e) * self.n(e, c, d)).sum();
                        let rhs: u32 = (0..r).map(|f| self.n(b, c, f) * self.n(a, f, d)).sum();
                        if lhs != rhs {
                            return Err(SkeletonError::Ring(format!("associativity fails at ({a}, {b}, {c}; {d})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Expands a product of two formal sums of simples.
    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let r = self.rank();
        let mut out = vec![0u32; r];
        for a in 0..r {
            if x[a] == 0 {
                continue;
            }
            for b in 0..r {
                if y[b] == 0 {
                    continue;
                }
                for &(c, n) in self.products(a, b) {
                    out[c] += x[a] * y[b] * n;
                }
            }
        }
        out
    }
}

/// One associator block for fixed outer labels: a square matrix from the
/// left-bracketed basis (rows) to the right-bracketed basis (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    rows: Vec<usize>,
    cols: Vec<usize>,
    m: Vec<Vec<Cyclotomic>>,
    inv: Vec<Vec<Cyclotomic>>,
}

impl Block {
    fn new(rows: Vec<usize>, cols: Vec<usize>, m: Vec<Vec<Cyclotomic>>, conductor: u32, key: [usize; 4]) -> Result<Self, SkeletonError> {
        if rows.len() != cols.len() {
            return Err(SkeletonError::SingularBlock(key));
        }
        let n = rows.len();
        let sm = SparseMatrix::from_triples(
            n,
            n,
            conductor,
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, m[i][j].clone())),
        )?;
        let inv = linalg::inverse(&sm)?.ok_or(SkeletonError::SingularBlock(key))?;
        let inv = (0..n).map(|i| (0..n).map(|j| inv.get(i, j)).collect()).collect();
        Ok(Block { rows, cols, m, inv })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Entry `[e, f]`, or `None` when either index is not admissible.
    pub fn get(&self, e: usize, f: usize) -> Option<&Cyclotomic> {
        let i = self.rows.iter().position(|&r| r == e)?;
        let j = self.cols.iter().position(|&c| c == f)?;
        Some(&self.m[i][j])
    }

    /// Entry `[f, e]` of the inverse matrix (right basis index first).
    pub fn inv_get(&self, f: usize, e: usize) -> Option<&Cyclotomic> {
        let i = self.cols.iter().position(|&c| c == f)?;
        let j = self.rows.iter().position(|&r| r == e)?;
        Some(&self.inv[i][j])
    }

    fn is_identity_on_matching(&self, pairs: impl Fn(usize, usize) -> bool) -> bool {
        self.rows.iter().enumerate().all(|(i, &e)| {
            self.cols.iter().enumerate().all(|(j, &f)| {
                let v = &self.m[i][j];
                if pairs(e, f) {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

/// A multiplicity-free fusion category in skeletal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletalCategory {
    ring: FusionRing,
    conductor: u32,
    blocks: HashMap<[usize; 4], Block>,
}

impl SkeletalCategory {
    /// Builds from entries `([a, b, c, d, e, f], F^{abc}_d[e,f])`. Entries not
    /// given are zero; every admissible block must be invertible.
    pub fn new(
        ring: FusionRing,
        conductor: u32,
        entries: impl IntoIterator<Item = ([usize; 6], Cyclotomic)>,
    ) -> Result<Self, SkeletonError> {
        ring.validate()?;
        check_multiplicity_free(&ring)?;
        let r = ring.rank();
        let mut given: HashMap<[usize; 6], Cyclotomic> = HashMap::new();
        for (k, v) in entries {
            if k.iter().any(|&i| i >= r) {
                return Err(SkeletonError::LabelOutOfRange(*k.iter().max().unwrap()));
            }
            let [a, b, c, d, e, f] = k;
            if ring.n(a, b, e) * ring.n(e, c, d) * ring.n(b, c, f) * ring.n(a, f, d) == 0 {
                return Err(SkeletonError::Inadmissible(k));
            }
            if v.conductor() != conductor {
                return Err(ExactError::ConductorMismatch {
                    left: conductor,
                    right: v.conductor(),
                }
                .into());
            }
            given.insert(k, v);
        }
        let mut blocks = HashMap::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let rows: Vec<usize> = (0..r).filter(|&e| ring.n(a, b, e) * ring.n(e, c, d) > 0).collect();
                        if rows.is_empty() {
                            continue;
                        }
                        let cols: Vec<usize> = (0..r).filter(|&f| ring.n(b, c, f) * ring.n(a, f, d) > 0).collect();
                        let mut any = false;
                        let m = rows
                            .iter()
                            .map(|&e| {
                                cols.iter()
                                    .map(|&f| match given.get(&[a, b, c, d, e, f]) {
                                        Some(v) => {
                                            any = true;
                                            v.clone()
                                        }
                                        None => Cyclotomic::zero(conductor),
                                    })
                                    .collect()
                            })
                            .collect();
                        if !any {
                            return Err(SkeletonError::MissingEntry([a, b, c, d]));
                        }
                        let key = [a, b, c, d];
                        blocks.insert(key, Block::new(rows, cols, m, conductor, key)?);
                    }
                }
            }
        }
        Ok(SkeletalCategory { ring, conductor, blocks })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn block(&self, a: usize, b: usize, c: usize, d: usize) -> Option<&Block> {
        self.blocks.get(&[a, b, c, d])
    }

    /// `F^{abc}_d[e,f]`, zero when not admissible.
    pub fn f(&self, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Cyclotomic {
        self.block(a, b, c, d)
            .and_then(|bl| bl.get(e, f))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// Entry `[f, e]` of the inverse of `F^{abc}_d`.
    pub fn f_inv(&self, a: usize, b: usize, c: usize, d: usize, f: usize, e: usize) -> Cyclotomic {
        self.block(a, b, c, d)
            .and_then(|bl| bl.inv_get(f, e))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// All stored entries, ordered by index tuple.
    pub fn entries(&self) -> Vec<([usize; 6], Cyclotomic)> {
        let mut out: Vec<([usize; 6], Cyclotomic)> = self
            .blocks
            .iter()
            .flat_map(|(&[a, b, c, d], bl)| {
                bl.rows.iter().enumerate().flat_map(move |(i, &e)| {
                    bl.cols
                        .iter()
                        .enumerate()
                        .filter(move |(j, _)| !bl.m[i][*j].is_zero())
                        .map(move |(j, &f)| ([a, b, c, d, e, f], bl.m[i][j].clone()))
                })
            })
            .collect();
        out.sort_by_key(|x| x.0);
        out
    }

    /// The same category with one associator entry replaced (negative controls).
    pub fn with_entry(&self, key: [usize; 6], value: Cyclotomic) -> Result<Self, SkeletonError> {
        let mut entries = self.entries();
        entries.retain(|(k, _)| *k != key);
        entries.push((key, value));
        SkeletalCategory::new(self.ring.clone(), self.conductor, entries)
    }

    /// Reversed tensor product: `a ⊗' b = b ⊗ a` with associator
    /// `F'^{abc}_d = (F^{cba}_d)^{-1}`.
    pub fn rev(&self) -> SkeletalCategory {
        let r = self.ring.rank();
        let rules = (0..r).flat_map(|a| (0..r).flat_map(move |b| (0..r).map(move |c| (a, b, c))));
        let ring = FusionRing::new(
            self.ring.labels.clone(),
            self.ring.unit,
            self.ring.dual.clone(),
            rules.map(|(a, b, c)| (a, b, c, self.ring.n(b, a, c))),
        )
        .expect("reversed ring");
        let mut entries = Vec::new();
        for (&[c, b, a, d], bl) in &self.blocks {
            // rows of F'^{abc}_d are the column labels of F^{cba}_d, and vice versa
            for &e in &bl.cols {
                for &f in &bl.rows {
                    let v = bl.inv_get(e, f).unwrap().clone();
                    if !v.is_zero() {
                        entries.push(([a, b, c, d, e, f], v));
                    }
                }
            }
        }
        SkeletalCategory::new(ring, self.conductor, entries).expect("reversed category is valid")
    }

    /// Reads off (G, ω) when every product of simples is a single simple.
    pub fn is_pointed(&self) -> bool {
        let r = self.ring.rank();
        (0..r).all(|a| (0..r).all(|b| matches!(self.ring.products(a, b), [(_, 1)])))
    }
}

fn check_multiplicity_free(ring: &FusionRing) -> Result<(), SkeletonError> {
    let r = ring.rank();
    for a in 0..r {
        for b in 0..r {
            for &(c, n) in ring.products(a, b) {
                if n > 1 {
                    return Err(SkeletonError::NotMultiplicityFree { a, b, c, mult: n });
                }
            }
        }
    }
    Ok(())
}

/// A multiplicity-free left module category over a skeletal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletalModule {
    category: SkeletalCategory,
    objects: Vec<String>,
    /// `action[(a * m + x) * m + y] = n(a, x; y)`.
    action: Vec<u32>,
    blocks: HashMap<[usize; 4], Block>,
}

impl SkeletalModule {
    /// Builds from action triples `(a, x, y)` with n = 1 and entries
    /// `([a, b, x, y, e, z], L^{abx}_y[e,z])`.
    pub fn new(
        category: SkeletalCategory,
        objects: Vec<String>,
        action: impl IntoIterator<Item = (usize, usize, usize)>,
        entries: impl IntoIterator<Item = ([usize; 6], Cyclotomic)>,
    ) -> Result<Self, SkeletonError> {
        let r = category.ring.rank();
        let m = objects.len();
        let mut act = vec![0u32; r * m * m];
        for (a, x, y) in action {
            if a >= r || x >= m || y >= m {
                return Err(SkeletonError::LabelOutOfRange(a.max(x).max(y)));
            }
            act[(a * m + x) * m + y] = 1;
        }
        let n = |a: usize, x: usize, y: usize| act[(a * m + x) * m + y];
        let ring = &category.ring;
        let cond = category.conductor;
        let mut given: HashMap<[usize; 6], Cyclotomic> = HashMap::new();
        for (k, v) in entries {
            let [a, b, x, y, e, z] = k;
            if a >= r || b >= r || e >= r || x >= m || y >= m || z >= m {
                return Err(SkeletonError::LabelOutOfRange(*k.iter().max().unwrap()));
            }
            if ring.n(a, b, e) * n(e, x, y) * n(b, x, z) * n(a, z, y) == 0 {
                return Err(SkeletonError::Inadmissible(k));
            }
            given.insert(k, v);
        }
        let mut blocks = HashMap::new();
        for a in 0..r {
            for b in 0..r {
                for x in 0..m {
                    for y in 0..m {
                        let rows: Vec<usize> = (0..r).filter(|&e| ring.n(a, b, e) * n(e, x, y) > 0).collect();
                        if rows.is_empty() {
                            continue;
                        }
                        let cols: Vec<usize> = (0..m).filter(|&z| n(b, x, z) * n(a, z, y) > 0).collect();
                        let mut any = false;
                        let mat = rows
                            .iter()
                            .map(|&e| {
                                cols.iter()
                                    .map(|&z| match given.get(&[a, b, x, y, e, z]) {
                                        Some(v) => {
                                            any = true;
                                            v.clone()
                                        }
                                        None => Cyclotomic::zero(cond),
                                    })
                                    .collect()
                            })
                            .collect();
                        if !any {
                            return Err(SkeletonError::MissingEntry([a, b, x, y]));
                        }
                        let key = [a, b, x, y];
                        blocks.insert(key, Block::new(rows, cols, mat, cond, key)?);
                    }
                }
            }
        }
        Ok(SkeletalModule {
            category,
            objects,
            action: act,
            blocks,
        })
    }

    pub fn category(&self) -> &SkeletalCategory {
        &self.category
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    #[inline]
    pub fn n(&self, a: usize, x: usize, y: usize) -> u32 {
        let m = self.objects.len();
        self.action[(a * m + x) * m + y]
    }

    /// Simple summands of `a ⊙ x`.
    pub fn act(&self, a: usize, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.objects.len()).filter(move |&y| self.n(a, x, y) > 0)
    }

    pub fn block(&self, a: usize, b: usize, x: usize, y: usize) -> Option<&Block> {
        self.blocks.get(&[a, b, x, y])
    }

    /// `L^{abx}_y[e,z]`, zero when not admissible.
    pub fn l(&self, a: usize, b: usize, x: usize, y: usize, e: usize, z: usize) -> Cyclotomic {
        self.block(a, b, x, y)
            .and_then(|bl| bl.get(e, z))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.category.conductor))
    }

    /// Entry `[z, e]` of the inverse of `L^{abx}_y`.
    pub fn l_inv(&self, a: usize, b: usize, x: usize, y: usize, z: usize, e: usize) -> Cyclotomic {
        self.block(a, b, x, y)
            .and_then(|bl| bl.inv_get(z, e))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.category.conductor))
    }

    pub fn action_triples(&self) -> Vec<(usize, usize, usize)> {
        let r = self.category.ring.rank();
        let m = self.objects.len();
        let mut out = Vec::new();
        for a in 0..r {
            for x in 0..m {
                for y in 0..m {
                    if self.n(a, x, y) > 0 {
                        out.push((a, x, y));
                    }
                }
            }
        }
        out
    }

    pub fn entries(&self) -> Vec<([usize; 6], Cyclotomic)> {
        let mut out: Vec<([usize; 6], Cyclotomic)> = self
            .blocks
            .iter()
            .flat_map(|(&[a, b, x, y], bl)| {
                bl.rows.iter().enumerate().flat_map(move |(i, &e)| {
                    bl.cols
                        .iter()
                        .enumerate()
                        .filter(move |(j, _)| !bl.m[i][*j].is_zero())
                        .map(move |(j, &z)| ([a, b, x, y, e, z], bl.m[i][j].clone()))
                })
            })
            .collect();
        out.sort_by_key(|p| p.0);
        out
    }

    /// The same module with one associator entry replaced (negative controls).
    pub fn with_entry(&self, key: [usize; 6], value: Cyclotomic) -> Result<Self, SkeletonError> {
        let mut entries = self.entries();
        entries.retain(|(k, _)| *k != key);
        entries.push((key, value));
        SkeletalModule::new(self.category.clone(), self.objects.clone(), self.action_triples(), entries)
    }
}

/// Evaluation and coevaluation scalars for the duality on simple labels.
///
/// For each label `a` with dual `a*`: `ev_a = ev[a] · P^{a* a}_1` and
/// `coev_a = coev[a] · I^{a a*}_1`. The right dual of `a` is again `a*`, with
/// `ev'_a = ev_{a*}` and `coev'_a = coev_{a*}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualData {
    pub dual: Vec<usize>,
    pub ev: Vec<Cyclotomic>,
    pub coev: Vec<Cyclotomic>,
}

impl DualData {
    /// Fixes `coev = 1` and solves the first zigzag for `ev`, then checks both.
    pub fn standard(c: &SkeletalCategory) -> Result<Self, SkeletonError> {
        let ring = c.ring();
        let u = ring.unit();
        let n = c.conductor();
        let mut ev = Vec::with_capacity(ring.rank());
        for a in 0..ring.rank() {
            let s = ring.dual(a);
            ev.push(c.f(a, s, a, a, u, u).inverse().map_err(|_| SkeletonError::Zigzag(a))?);
        }
        let dd = DualData {
            dual: (0..ring.rank()).map(|a| ring.dual(a)).collect(),
            ev,
            coev: vec![Cyclotomic::one(n); ring.rank()],
        };
        if let Some(a) = dd.zigzag_failure(c) {
            return Err(SkeletonError::Zigzag(a));
        }
        Ok(dd)
    }

    /// First label failing either zigzag identity.
    pub fn zigzag_failure(&self, c: &SkeletalCategory) -> Option<usize> {
        let u = c.ring().unit();
        (0..c.ring().rank()).find(|&a| {
            let s = self.dual[a];
            let k = &self.coev[a] * &self.ev[a];
            // (1 ⊗ ev) α (coev ⊗ 1) = id_a
            let first = &k * &c.f(a, s, a, a, u, u);
            // (ev ⊗ 1) α^{-1} (1 ⊗ coev) = id_{a*}
            let second = &k * &c.f_inv(s, a, s, s, u, u);
            !first.is_one() || !second.is_one()
        })
    }

    pub fn right_ev(&self, a: usize) -> &Cyclotomic {
        &self.ev[self.dual[a]]
    }

    pub fn right_coev(&self, a: usize) -> &Cyclotomic {
        &self.coev[self.dual[a]]
    }
}

/// A failed coherence instance: the index tuple and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceViolation {
    pub kind: String,
    pub indices: Vec<usize>,
    pub lhs: Cyclotomic,
    pub rhs: Cyclotomic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub passed: bool,
    pub checked: usize,
    pub violation: Option<CoherenceViolation>,
}

impl CoherenceReport {
    fn from_results(results: Vec<(usize, Option<CoherenceViolation>)>) -> Self {
        let checked = results.iter().map(|r| r.0).sum();
        let violation = results.into_iter().find_map(|r| r.1);
        CoherenceReport {
            passed: violation.is_none(),
            checked,
            violation,
        }
    }
}

/// Checks unit normalization and every pentagon instance
/// `F^{ecd}_u[f,g] F^{abg}_u[e,h] = Σ_k F^{abc}_f[e,k] F^{akd}_u[f,h] F^{bcd}_h[k,g]`.
pub fn validate_pentagon(c: &SkeletalCategory) -> CoherenceReport {
    let ring = c.ring();
    let r = ring.rank();
    let u = ring.unit();
    for a in 0..r {
        for b in 0..r {
            for d in 0..r {
                for (key, pairs) in [
                    ([u, a, b, d], Box::new(|e: usize, f: usize| e == a && f == d) as Box<dyn Fn(usize, usize) -> bool>),
                    ([a, u, b, d], Box::new(|e: usize, f: usize| e == a && f == b)),
                    ([a, b, u, d], Box::new(|e: usize, f: usize| e == d && f == b)),
                ] {
                    if let Some(bl) = c.block(key[0], key[1], key[2], key[3]) {
                        if !bl.is_identity_on_matching(pairs) {
                            return CoherenceReport {
                                passed: false,
                                checked: 0,
                                violation: Some(CoherenceViolation {
                                    kind: "unit".into(),
                                    indices: key.to_vec(),
                                    lhs: bl.m[0][0].clone(),
                                    rhs: Cyclotomic::one(c.conductor()),
                                }),
                            };
                        }
                    }
                }
            }
        }
    }
    let results: Vec<(usize, Option<CoherenceViolation>)> = (0..r)
        .into_par_iter()
        .map(|a| {
            let mut checked = 0;
            for b in 0..r {
                for cc in 0..r {
                    for d in 0..r {
                        for uu in 0..r {
                            if let Some(v) = pentagon_instance(c, a, b, cc, d, uu, &mut checked) {
                                return (checked, Some(v));
                            }
                        }
                    }
                }
            }
            (checked, None)
        })
        .collect();
    CoherenceReport::from_results(results)
}

fn pentagon_instance(
    cat: &SkeletalCategory,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    u: usize,
    checked: &mut usize,
) -> Option<CoherenceViolation> {
    let ring = cat.ring();
    let r = ring.rank();
    let start: Vec<(usize, usize)> = (0..r)
        .flat_map(|e| (0..r).map(move |f| (e, f)))
        .filter(|&(e, f)| ring.n(a, b, e) * ring.n(e, c, f) * ring.n(f, d, u) > 0)
        .collect();
    if start.is_empty() {
        return None;
    }
    let end: Vec<(usize, usize)> = (0..r)
        .flat_map(|g| (0..r).map(move |h| (g, h)))
        .filter(|&(g, h)| ring.n(c, d, g) * ring.n(b, g, h) * ring.n(a, h, u) > 0)
        .collect();
    for &(e, f) in &start {
        for &(g, h) in &end {
            *checked += 1;
            let lhs = &cat.f(e, c, d, u, f, g) * &cat.f(a, b, g, u, e, h);
            let mut rhs = Cyclotomic::zero(cat.conductor());
            for &(k, _) in ring.products(b, c) {
                let t = cat.f(a, b, c, f, e, k);
                if t.is_zero() {
                    continue;
                }
                rhs += &(&(&t * &cat.f(a, k, d, u, f, h)) * &cat.f(b, c, d, h, k, g));
            }
            if lhs != rhs {
                return Some(CoherenceViolation {
                    kind: "pentagon".into(),
                    indices: vec![a, b, c, d, u, e, f, g, h],
                    lhs,
                    rhs,
                });
            }
        }
    }
    None
}

/// Checks unit normalization and every module pentagon instance
/// `L^{ecx}_y[f,g] L^{abg}_y[e,h] = Σ_k F^{abc}_f[e,k] L^{akx}_y[f,h] L^{bcx}_h[k,g]`.
pub fn validate_module_pentagon(m: &SkeletalModule) -> CoherenceReport {
    let cat = m.category();
    let ring = cat.ring();
    let r = ring.rank();
    let u = ring.unit();
    let mo = m.num_objects();
    for a in 0..r {
        for x in 0..mo {
            for y in 0..mo {
                for (key, pairs) in [
                    ([u, a, x, y], Box::new(|e: usize, z: usize| e == a && z == y) as Box<dyn Fn(usize, usize) -> bool>),
                    ([a, u, x, y], Box::new(|e: usize, z: usize| e == a && z == x)),
                ] {
                    if let Some(bl) = m.block(key[0], key[1], key[2], key[3]) {
                        if !bl.is_identity_on_matching(pairs) {
                            return CoherenceReport {
                                passed: false,
                                checked: 0,
                                violation: Some(CoherenceViolation {
                                    kind: "unit".into(),
                                    indices: key.to_vec(),
                                    lhs: bl.m[0][0].clone(),
                                    rhs: Cyclotomic::one(cat.conductor()),
                                }),
                            };
                        }
                    }
                }
            }
        }
    }
    let results: Vec<(usize, Option<CoherenceViolation>)> = (0..r)
        .into_par_iter()
        .map(|a| {
            let mut checked = 0;
            for b in 0..r {
                for c in 0..r {
                    for x in 0..mo {
                        for y in 0..mo {
                            if let Some(v) = module_pentagon_instance(m, a, b, c, x, y, &mut checked) {
                                return (checked, Some(v));
                            }
                        }
                    }
                }
            }
            (checked, None)
        })
        .collect();
    CoherenceReport::from_results(results)
}

fn module_pentagon_instance(
    m: &SkeletalModule,
    a: usize,
    b: usize,
    c: usize,
    x: usize,
    y: usize,
    checked: &mut usize,
) -> Option<CoherenceViolation> {
    let cat = m.category();
    let ring = cat.ring();
    let r = ring.rank();
    let mo = m.num_objects();
    let start: Vec<(usize, usize)> = (0..r)
        .flat_map(|e| (0..r).map(move |f| (e, f)))
        .filter(|&(e, f)| ring.n(a, b, e) * ring.n(e, c, f) * m.n(f, x, y) > 0)
        .collect();
    if start.is_empty() {
        return None;
    }
    let end: Vec<(usize, usize)> = (0..mo)
        .flat_map(|g| (0..mo).map(move |h| (g, h)))
        .filter(|&(g, h)| m.n(c, x, g) * m.n(b, g, h) * m.n(a, h, y) > 0)
        .collect();
    for &(e, f) in &start {
        for &(g, h) in &end {
            *checked += 1;
            let lhs = &m.l(e, c, x, y, f, g) * &m.l(a, b, g, y, e, h);
            let mut rhs = Cyclotomic::zero(cat.conductor());
            for &(k, _) in ring.products(b, c) {
                let t = cat.f(a, b, c, f, e, k);
                if t.is_zero() {
                    continue;
                }
                rhs += &(&(&t * &m.l(a, k, x, y, f, h)) * &m.l(b, c, x, h, k, g));
            }
            if lhs != rhs {
                return Some(CoherenceViolation {
                    kind: "module pentagon".into(),
                    indices: vec![a, b, c, x, y, e, f, g, h],
                    lhs,
                    rhs,
                });
            }
        }
    }
    None
}
