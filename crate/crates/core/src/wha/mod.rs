//! Finite-dimensional weak Hopf algebras given by sparse structure constants.
//!
//! The coproducts built in this crate are the reverse of those in Kitaev and
//! Kong's construction of the same algebras; only the convention used here is
//! implemented, and no conversion between the two is provided.

mod base;
mod quasi;
mod verify;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{linalg, Cyclotomic, ExactError, SparseMatrix, SparseTensor3, SparseVec, TensorEntry};

pub use base::{base_algebras, center_dim, is_cocommutative, BaseAlgebraReport};
pub use quasi::{find_rbar, verify_quasitriangular, verify_yang_baxter, RMatrixCandidate};
pub use verify::{verify_antipode, verify_weak_bialgebra, verify_weak_bialgebra_with, Law, Report, Sweep, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhaError {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    Shape { what: &'static str, expected: usize, found: usize },
    #[error("antipode is singular")]
    SingularAntipode,
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error(transparent)]
    Scalar(#[from] ExactError),
}

/// An element of `A ⊗ A` as sorted, zero-free `((i, j), c)` terms.
pub type Tensor2 = Vec<((usize, usize), Cyclotomic)>;

/// An element of `A ⊗ A ⊗ A`.
pub type Tensor3 = Vec<((usize, usize, usize), Cyclotomic)>;

/// Structure constants of an algebra with coalgebra structure and antipode.
/// Nothing beyond shapes is checked at construction.
#[derive(Debug, Clone)]
pub struct WeakHopfAlgebra {
    labels: Vec<String>,
    conductor: u32,
    mu: SparseTensor3,
    unit: SparseVec,
    delta: SparseTensor3,
    counit: SparseVec,
    /// Column `j` is `S(b_j)`.
    antipode: SparseMatrix,
    s_images: Vec<SparseVec>,
    right_partners: Vec<Vec<usize>>,
    left_partners: Vec<Vec<usize>>,
    delta_one: OnceLock<Tensor2>,
    s_inverse: OnceLock<Option<SparseMatrix>>,
}

impl PartialEq for WeakHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.conductor == other.conductor
            && self.mu == other.mu
            && self.unit == other.unit
            && self.delta == other.delta
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl Eq for WeakHopfAlgebra {}

impl WeakHopfAlgebra {
    pub fn new(
        labels: Vec<String>,
        conductor: u32,
        mu: SparseTensor3,
        unit: SparseVec,
        delta: SparseTensor3,
        counit: SparseVec,
        antipode: SparseMatrix,
    ) -> Result<Self, WhaError> {
        let d = labels.len();
        let check = |what, found| {
            if found == d {
                Ok(())
            } else {
                Err(WhaError::Shape { what, expected: d, found })
            }
        };
        let (m0, m1, m2) = mu.dims();
        check("mu", m0)?;
        check("mu", m1)?;
        check("mu", m2)?;
        let (d0, d1, d2) = delta.dims();
        check("delta", d0)?;
        check("delta", d1)?;
        check("delta", d2)?;
        check("antipode", antipode.rows())?;
        check("antipode", antipode.cols())?;
        for (what, v) in [("unit", &unit), ("counit", &counit)] {
            if let Some(m) = v.max_index() {
                if m >= d {
                    return Err(WhaError::Shape { what, expected: d, found: m + 1 });
                }
            }
        }
        for t in [&mu, &delta] {
            if t.conductor() != conductor {
                return Err(ExactError::ConductorMismatch {
                    left: conductor,
                    right: t.conductor(),
                }
                .into());
            }
        }
        let mut right_partners = vec![Vec::new(); d];
        let mut left_partners = vec![Vec::new(); d];
        for i in 0..d {
            let mut last = None;
            for e in mu.slice(i) {
                if last != Some(e.j) {
                    right_partners[i].push(e.j);
                    left_partners[e.j].push(i);
                    last = Some(e.j);
                }
            }
        }
        let s_images = antipode.columns();
        Ok(WeakHopfAlgebra {
            labels,
            conductor,
            mu,
            unit,
            delta,
            counit,
            antipode,
            s_images,
            right_partners,
            left_partners,
            delta_one: OnceLock::new(),
            s_inverse: OnceLock::new(),
        })
    }

    /// Builds from coordinate lists, summing repeated entries.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        labels: Vec<String>,
        conductor: u32,
        mu: impl IntoIterator<Item = (usize, usize, usize, Cyclotomic)>,
        unit: impl IntoIterator<Item = (usize, Cyclotomic)>,
        delta: impl IntoIterator<Item = (usize, usize, usize, Cyclotomic)>,
        counit: impl IntoIterator<Item = (usize, Cyclotomic)>,
        antipode: impl IntoIterator<Item = (usize, usize, Cyclotomic)>,
    ) -> Result<Self, WhaError> {
        let d = labels.len();
        let mu = SparseTensor3::from_triples((d, d, d), conductor, mu)?;
        let delta = SparseTensor3::from_triples((d, d, d), conductor, delta)?;
        let antipode = SparseMatrix::from_triples(d, d, conductor, antipode)?;
        WeakHopfAlgebra::new(labels, conductor, mu, sum_vec(unit), delta, sum_vec(counit), antipode)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mu(&self) -> &SparseTensor3 {
        &self.mu
    }

    pub fn delta(&self) -> &SparseTensor3 {
        &self.delta
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit(&self) -> &SparseVec {
        &self.counit
    }

    pub fn antipode(&self) -> &SparseMatrix {
        &self.antipode
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.conductor)
    }

    /// `b_i b_j` as `(k, c)` entries.
    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &[TensorEntry] {
        self.mu.pair(i, j)
    }

    /// Basis indices `j` with `b_i b_j != 0`.
    pub fn right_partners(&self, i: usize) -> &[usize] {
        &self.right_partners[i]
    }

    /// Basis indices `i` with `b_i b_j != 0`.
    pub fn left_partners(&self, j: usize) -> &[usize] {
        &self.left_partners[j]
    }

    /// `Δ(b_i)` as `(j, k, c)` entries.
    #[inline]
    pub fn coproduct(&self, i: usize) -> &[TensorEntry] {
        self.delta.slice(i)
    }

    #[inline]
    pub fn s_image(&self, i: usize) -> &SparseVec {
        &self.s_images[i]
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.conductor)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Small::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for e in self.mul_basis(*i, *j) {
                    acc.add(e.k, &(&ab * &e.value));
                }
            }
        }
        acc.into_vec()
    }

    pub fn add(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        x.add_scaled(y, &Cyclotomic::one(self.conductor))
    }

    pub fn counit_of(&self, x: &SparseVec) -> Cyclotomic {
        x.dot(&self.counit).unwrap_or_else(|| self.zero())
    }

    pub fn counit_basis(&self, i: usize) -> Cyclotomic {
        self.counit.get(i).cloned().unwrap_or_else(|| self.zero())
    }

    /// `ε(b_i b_j)`.
    pub fn counit_of_product(&self, i: usize, j: usize) -> Cyclotomic {
        let mut s = self.zero();
        for e in self.mul_basis(i, j) {
            if let Some(c) = self.counit.get(e.k) {
                s += &(&e.value * c);
            }
        }
        s
    }

    pub fn apply_s(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Small::new();
        for (i, a) in x.iter() {
            for (k, c) in self.s_images[*i].iter() {
                acc.add(*k, &(a * c));
            }
        }
        acc.into_vec()
    }

    pub fn coproduct_of(&self, x: &SparseVec) -> Tensor2 {
        let mut acc = Small::new();
        for (i, a) in x.iter() {
            for e in self.coproduct(*i) {
                acc.add((e.j, e.k), &(a * &e.value));
            }
        }
        acc.into_sorted()
    }

    /// `Δ(1)`, cached.
    pub fn delta_one(&self) -> &Tensor2 {
        self.delta_one.get_or_init(|| self.coproduct_of(&self.unit))
    }

    /// Product in `A ⊗ A`.
    pub fn mul2(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let y = sorted(y);
        let mut acc = Small::new();
        for ((i1, i2), a) in x {
            for &j1 in self.right_partners(*i1) {
                let lo = y.partition_point(|t| t.0 .0 < j1);
                let hi = y.partition_point(|t| t.0 .0 <= j1);
                let left = self.mul_basis(*i1, j1);
                for ((_, j2), b) in &y[lo..hi] {
                    let right = self.mul_basis(*i2, *j2);
                    if right.is_empty() {
                        continue;
                    }
                    let ab = a * b;
                    for l in left {
                        let abl = &ab * &l.value;
                        for r in right {
                            acc.add((l.k, r.k), &(&abl * &r.value));
                        }
                    }
                }
            }
        }
        acc.into_sorted()
    }

    /// Product in `A ⊗ A ⊗ A`.
    pub fn mul3(&self, x: &Tensor3, y: &Tensor3) -> Tensor3 {
        let y = sorted(y);
        let mut acc = Small::new();
        for ((i1, i2, i3), a) in x {
            for &j1 in self.right_partners(*i1) {
                let lo = y.partition_point(|t| t.0 .0 < j1);
                let hi = y.partition_point(|t| t.0 .0 <= j1);
                let p1 = self.mul_basis(*i1, j1);
                for ((_, j2, j3), b) in &y[lo..hi] {
                    let p2 = self.mul_basis(*i2, *j2);
                    if p2.is_empty() {
                        continue;
                    }
                    let p3 = self.mul_basis(*i3, *j3);
                    if p3.is_empty() {
                        continue;
                    }
                    let ab = a * b;
                    for e1 in p1 {
                        let c1 = &ab * &e1.value;
                        for e2 in p2 {
                            let c2 = &c1 * &e2.value;
                            for e3 in p3 {
                                acc.add((e1.k, e2.k, e3.k), &(&c2 * &e3.value));
                            }
                        }
                    }
                }
            }
        }
        acc.into_sorted()
    }

    /// The inverse antipode, if S is invertible.
    pub fn antipode_inverse(&self) -> Option<&SparseMatrix> {
        self.s_inverse
            .get_or_init(|| linalg::inverse(&self.antipode).ok().flatten())
            .as_ref()
    }

    /// Reversed multiplication, antipode `S⁻¹`.
    pub fn opposite(&self) -> Result<WeakHopfAlgebra, WhaError> {
        let sinv = self.antipode_inverse().ok_or(WhaError::SingularAntipode)?.clone();
        let mu = self.mu.swap_first_two();
        WeakHopfAlgebra::new(
            self.labels.clone(),
            self.conductor,
            mu,
            self.unit.clone(),
            self.delta.clone(),
            self.counit.clone(),
            sinv,
        )
    }

    /// Reversed comultiplication, antipode `S⁻¹`.
    pub fn coopposite(&self) -> Result<WeakHopfAlgebra, WhaError> {
        let sinv = self.antipode_inverse().ok_or(WhaError::SingularAntipode)?.clone();
        WeakHopfAlgebra::new(
            self.labels.clone(),
            self.conductor,
            self.mu.clone(),
            self.unit.clone(),
            self.delta.swap_last(),
            self.counit.clone(),
            sinv,
        )
    }

    /// Same algebra with a different antipode (for negative controls).
    pub fn with_antipode(&self, antipode: SparseMatrix) -> Result<WeakHopfAlgebra, WhaError> {
        WeakHopfAlgebra::new(
            self.labels.clone(),
            self.conductor,
            self.mu.clone(),
            self.unit.clone(),
            self.delta.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    /// Same structure with a different counit (for negative controls).
    pub fn with_counit(&self, counit: SparseVec) -> Result<WeakHopfAlgebra, WhaError> {
        WeakHopfAlgebra::new(
            self.labels.clone(),
            self.conductor,
            self.mu.clone(),
            self.unit.clone(),
            self.delta.clone(),
            counit,
            self.antipode.clone(),
        )
    }

    /// Same structure with a different multiplication (for negative controls).
    pub fn with_mu(&self, mu: SparseTensor3) -> Result<WeakHopfAlgebra, WhaError> {
        WeakHopfAlgebra::new(
            self.labels.clone(),
            self.conductor,
            mu,
            self.unit.clone(),
            self.delta.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
    }

    /// Same structure with a different comultiplication (for negative controls).
    pub fn with_delta(&self, delta: SparseTensor3) -> Result<WeakHopfAlgebra, WhaError> {
        WeakHopfAlgebra::new(
            self.labels.clone(),
            self.conductor,
            self.mu.clone(),
            self.unit.clone(),
            delta,
            self.counit.clone(),
            self.antipode.clone(),
        )
    }

    pub fn to_json(&self) -> WhaJson {
        WhaJson {
            dim: self.dim(),
            conductor: self.conductor,
            labels: self.labels.clone(),
            mu: self.mu.entries().map(|(i, e)| (i, e.j, e.k, e.value.clone())).collect(),
            unit: self.unit.entries().to_vec(),
            delta: self.delta.entries().map(|(i, e)| (i, e.j, e.k, e.value.clone())).collect(),
            counit: self.counit.entries().to_vec(),
            antipode: self.antipode.triples().map(|(i, j, v)| (i, j, v.clone())).collect(),
        }
    }

    pub fn from_json(js: &WhaJson) -> Result<Self, WhaError> {
        if js.labels.len() != js.dim {
            return Err(WhaError::Shape {
                what: "labels",
                expected: js.dim,
                found: js.labels.len(),
            });
        }
        let n = js.conductor;
        let lift = |v: &Cyclotomic| v.embed(n);
        WeakHopfAlgebra::from_parts(
            js.labels.clone(),
            n,
            js.mu.iter().map(|(i, j, k, v)| Ok((*i, *j, *k, lift(v)?))).collect::<Result<Vec<_>, ExactError>>()?,
            js.unit.iter().map(|(i, v)| Ok((*i, lift(v)?))).collect::<Result<Vec<_>, ExactError>>()?,
            js.delta.iter().map(|(i, j, k, v)| Ok((*i, *j, *k, lift(v)?))).collect::<Result<Vec<_>, ExactError>>()?,
            js.counit.iter().map(|(i, v)| Ok((*i, lift(v)?))).collect::<Result<Vec<_>, ExactError>>()?,
            js.antipode.iter().map(|(i, j, v)| Ok((*i, *j, lift(v)?))).collect::<Result<Vec<_>, ExactError>>()?,
        )
    }

    /// Structure constants expressed over a multiple of the conductor.
    pub fn embed(&self, conductor: u32) -> Result<WeakHopfAlgebra, WhaError> {
        if conductor == self.conductor {
            return Ok(self.clone());
        }
        let mut js = self.to_json();
        js.conductor = conductor;
        WeakHopfAlgebra::from_json(&js)
    }
}

/// External form; sparse entries are `[i, j, k, scalar]` and friends.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhaJson {
    pub dim: usize,
    pub conductor: u32,
    pub labels: Vec<String>,
    pub mu: Vec<(usize, usize, usize, Cyclotomic)>,
    pub unit: Vec<(usize, Cyclotomic)>,
    pub delta: Vec<(usize, usize, usize, Cyclotomic)>,
    pub counit: Vec<(usize, Cyclotomic)>,
    pub antipode: Vec<(usize, usize, Cyclotomic)>,
}

fn sum_vec(it: impl IntoIterator<Item = (usize, Cyclotomic)>) -> SparseVec {
    let mut acc = Small::new();
    for (i, c) in it {
        acc.add(i, &c);
    }
    acc.into_vec()
}

/// Linear-scan accumulator for the handful of terms typical of basis products.
#[derive(Debug, Clone, Default)]
pub(crate) struct Small<K> {
    terms: Vec<(K, Cyclotomic)>,
}

impl<K: Copy + Ord> Small<K> {
    pub(crate) fn new() -> Self {
        Small { terms: Vec::new() }
    }

    pub(crate) fn add(&mut self, k: K, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        if self.terms.len() > 32 {
            // switch to binary search once the term list is sizable
            self.terms.sort_unstable_by_key(|a| a.0);
            match self.terms.binary_search_by(|t| t.0.cmp(&k)) {
                Ok(p) => self.terms[p].1 += c,
                Err(p) => self.terms.insert(p, (k, c.clone())),
            }
            return;
        }
        match self.terms.iter_mut().find(|t| t.0 == k) {
            Some(t) => t.1 += c,
            None => self.terms.push((k, c.clone())),
        }
    }

    pub(crate) fn into_sorted(mut self) -> Vec<(K, Cyclotomic)> {
        self.terms.retain(|t| !t.1.is_zero());
        self.terms.sort_unstable_by_key(|a| a.0);
        self.terms
    }
}

impl Small<usize> {
    pub(crate) fn into_vec(self) -> SparseVec {
        SparseVec::from_entries(self.into_sorted())
    }
}

fn sorted<K: Ord + Copy>(t: &[(K, Cyclotomic)]) -> std::borrow::Cow<'_, [(K, Cyclotomic)]> {
    if t.windows(2).all(|w| w[0].0 <= w[1].0) {
        std::borrow::Cow::Borrowed(t)
    } else {
        let mut v = t.to_vec();
        v.sort_by_key(|a| a.0);
        std::borrow::Cow::Owned(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The group algebra of Z2 as a Hopf algebra.
    pub(crate) fn z2_group_algebra() -> WeakHopfAlgebra {
        let one = || Cyclotomic::one(1);
        WeakHopfAlgebra::from_parts(
            vec!["e".into(), "g".into()],
            1,
            (0..2).flat_map(|i| (0..2).map(move |j| (i, j, (i + j) % 2, Cyclotomic::one(1)))),
            [(0, one())],
            (0..2).map(|i| (i, i, i, Cyclotomic::one(1))),
            [(0, one()), (1, one())],
            [(0, 0, one()), (1, 1, one())],
        )
        .unwrap()
    }

    #[test]
    fn json_roundtrip() {
        let a = z2_group_algebra();
        let s = serde_json::to_string(&a.to_json()).unwrap();
        let back = WeakHopfAlgebra::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn partners_and_products() {
        let a = z2_group_algebra();
        assert_eq!(a.right_partners(1), &[0, 1]);
        let g = a.basis(1);
        assert_eq!(a.mul(&g, &g), a.basis(0));
        assert_eq!(a.delta_one(), &vec![((0, 0), Cyclotomic::one(1))]);
    }

    #[test]
    fn shape_errors_are_reported() {
        let r = WeakHopfAlgebra::from_parts(
            vec!["e".into()],
            1,
            [],
            [(3, Cyclotomic::one(1))],
            [],
            [],
            [],
        );
        assert!(matches!(r, Err(WhaError::Shape { what: "unit", .. })));
    }
}
