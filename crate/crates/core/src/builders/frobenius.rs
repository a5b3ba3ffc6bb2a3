//! Separable Frobenius algebras and the weak Hopf algebra B ⊗ B^op.

use crate::exactmath::{Accumulator, Cyclotomic, Rational, SparseTensor3, SparseVec};
use crate::wha::{Tensor2, WeakHopfAlgebra};

use super::{BasisLabel, BuildError};

/// A finite-dimensional algebra with a bimodule section `s` of the
/// multiplication and a counit `δ` for `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparableFrobenius {
    conductor: u32,
    mu: SparseTensor3,
    unit: SparseVec,
    comult: SparseTensor3,
    counit: SparseVec,
}

/// The two standard families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusKind {
    /// `k^n` with `s(e_i) = e_i ⊗ e_i`, `δ(e_i) = 1`.
    Diagonal(usize),
    /// `M_n` with `p = (1/n) Σ E_ij ⊗ E_ji`, `δ = n·tr`.
    Matrix(usize),
}

impl SeparableFrobenius {
    /// Checks every invariant and fails with the first one violated.
    pub fn new(
        conductor: u32,
        mu: SparseTensor3,
        unit: SparseVec,
        comult: SparseTensor3,
        counit: SparseVec,
    ) -> Result<Self, BuildError> {
        let b = SeparableFrobenius {
            conductor,
            mu,
            unit,
            comult,
            counit,
        };
        let d = b.dim();
        if b.mu.dims() != (d, d, d) || b.comult.dims() != (d, d, d) {
            return Err(BuildError::Frobenius("structure tensors have inconsistent shapes".into()));
        }
        match b.failures().into_iter().next() {
            Some(f) => Err(BuildError::Frobenius(f)),
            None => Ok(b),
        }
    }

    pub fn dim(&self) -> usize {
        self.mu.dims().0
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn mu(&self) -> &SparseTensor3 {
        &self.mu
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn comult(&self) -> &SparseTensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &SparseVec {
        &self.counit
    }

    fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for e in self.mu.pair(*i, *j) {
                    acc.add(e.k, &(&ab * &e.value));
                }
            }
        }
        acc.into_vec()
    }

    fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.conductor)
    }

    fn delta_of(&self, x: &SparseVec) -> Cyclotomic {
        x.dot(&self.counit).unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    fn s_of(&self, x: &SparseVec) -> Tensor2 {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for e in self.comult.slice(*i) {
                acc.add((e.j, e.k), &(a * &e.value));
            }
        }
        acc.into_sorted()
    }

    /// Applies `f ⊗ g` to a two-leg tensor with linear maps on basis vectors.
    fn map2(&self, t: &Tensor2, f: impl Fn(usize) -> SparseVec, g: impl Fn(usize) -> SparseVec) -> Tensor2 {
        let mut acc = Accumulator::new();
        for ((i, j), c) in t {
            let (fi, gj) = (f(*i), g(*j));
            for (k, a) in fi.iter() {
                for (l, b) in gj.iter() {
                    acc.add((*k, *l), &(&(c * a) * b));
                }
            }
        }
        acc.into_sorted()
    }

    /// The separability idempotent `p = s(1)`.
    pub fn p(&self) -> Tensor2 {
        self.s_of(&self.unit)
    }

    /// The Nakayama map `τ(x) = δ(x p⁽²⁾) p⁽¹⁾`.
    pub fn nakayama(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for ((i, j), c) in self.p() {
            let v = self.delta_of(&self.mul(x, &self.basis(j)));
            acc.add(i, &(&c * &v));
        }
        acc.into_vec()
    }

    /// Names of all violated invariants.
    pub fn failures(&self) -> Vec<String> {
        let d = self.dim();
        let mut out = Vec::new();
        let b = |i| self.basis(i);
        let assoc = (0..d).all(|i| {
            (0..d).all(|j| (0..d).all(|k| self.mul(&self.mul(&b(i), &b(j)), &b(k)) == self.mul(&b(i), &self.mul(&b(j), &b(k)))))
        });
        if !assoc {
            out.push("multiplication associative".into());
        }
        if !(0..d).all(|i| self.mul(&self.unit, &b(i)) == b(i) && self.mul(&b(i), &self.unit) == b(i)) {
            out.push("unit".into());
        }
        let m_of = |t: &Tensor2| {
            let mut acc = Accumulator::new();
            for ((i, j), c) in t {
                for e in self.mu.pair(*i, *j) {
                    acc.add(e.k, &(c * &e.value));
                }
            }
            acc.into_vec()
        };
        if !(0..d).all(|i| m_of(&self.s_of(&b(i))) == b(i)) {
            out.push("m∘s = id".into());
        }
        let bimodule = (0..d).all(|x| {
            (0..d).all(|y| {
                let sxy = self.s_of(&self.mul(&b(x), &b(y)));
                let right = self.map2(&self.s_of(&b(x)), &b, |k| self.mul(&b(k), &b(y)));
                let left = self.map2(&self.s_of(&b(y)), |i| self.mul(&b(x), &b(i)), &b);
                right == sxy && left == sxy
            })
        });
        if !bimodule {
            out.push("s is a bimodule map".into());
        }
        let counital = (0..d).all(|x| {
            let sx = self.s_of(&b(x));
            let mut first = Accumulator::new();
            let mut second = Accumulator::new();
            for ((i, j), c) in &sx {
                first.add(*j, &(c * &self.delta_of(&b(*i))));
                second.add(*i, &(c * &self.delta_of(&b(*j))));
            }
            first.into_vec() == b(x) && second.into_vec() == b(x)
        });
        if !counital {
            out.push("δ is a counit for s".into());
        }
        let p = self.p();
        let balanced = (0..d).all(|x| {
            self.map2(&p, |i| self.mul(&b(x), &b(i)), &b) == self.map2(&p, &b, |k| self.mul(&b(k), &b(x)))
        });
        if !balanced {
            out.push("p balanced".into());
        }
        if m_of(&p) != self.unit {
            out.push("p multiplies to 1".into());
        }
        // p·p in B ⊗ B^op
        let mut sq = Accumulator::new();
        for ((i1, j1), c1) in &p {
            for ((i2, j2), c2) in &p {
                let c = c1 * c2;
                let first = self.mul(&b(*i1), &b(*i2));
                let second = self.mul(&b(*j2), &b(*j1));
                for (k, u) in first.iter() {
                    for (l, v) in second.iter() {
                        sq.add((*k, *l), &(&(&c * u) * v));
                    }
                }
            }
        }
        if sq.into_sorted() != p {
            out.push("p idempotent".into());
        }
        out
    }
}

/// The standard separable Frobenius structure on `k^n` or `M_n`.
pub fn standard_frobenius(kind: FrobeniusKind) -> SeparableFrobenius {
    let one = || Cyclotomic::one(1);
    let (mu, unit, comult, counit) = match kind {
        FrobeniusKind::Diagonal(n) => (
            (0..n).map(|i| (i, i, i, one())).collect::<Vec<_>>(),
            (0..n).map(|i| (i, one())).collect::<Vec<_>>(),
            (0..n).map(|i| (i, i, i, one())).collect::<Vec<_>>(),
            (0..n).map(|i| (i, one())).collect::<Vec<_>>(),
        ),
        FrobeniusKind::Matrix(n) => {
            let e = |i: usize, j: usize| i * n + j;
            let inv_n = Cyclotomic::from_rational(1, Rational::from_pair(1, n as i64).expect("n ≥ 1"));
            let mut mu = Vec::new();
            let mut comult = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        mu.push((e(i, j), e(j, k), e(i, k), one()));
                        comult.push((e(i, k), e(i, j), e(j, k), inv_n.clone()));
                    }
                }
            }
            let unit = (0..n).map(|i| (e(i, i), one())).collect();
            let counit = (0..n).map(|i| (e(i, i), Cyclotomic::from_int(1, n as i64))).collect();
            (mu, unit, comult, counit)
        }
    };
    let d = match kind {
        FrobeniusKind::Diagonal(n) => n,
        FrobeniusKind::Matrix(n) => n * n,
    };
    let mu = SparseTensor3::from_triples((d, d, d), 1, mu).expect("in range");
    let comult = SparseTensor3::from_triples((d, d, d), 1, comult).expect("in range");
    SeparableFrobenius::new(1, mu, SparseVec::from_entries(unit), comult, SparseVec::from_entries(counit))
        .expect("standard structure")
}

/// `B ⊗ B^op` on `p[i|j]` (index `i·m + j`) with `Δ(a⊗b) = a⊗p⁽¹⁾ ⊗ p⁽²⁾⊗b`,
/// `ε(a⊗b) = δ(ab)` and `S(a⊗b) = b⊗τ(a)`.
pub fn build_frobenius_double(b: &SeparableFrobenius) -> Result<WeakHopfAlgebra, BuildError> {
    if let Some(f) = b.failures().into_iter().next() {
        return Err(BuildError::Frobenius(f));
    }
    let m = b.dim();
    let n = b.conductor;
    let pair = |i: usize, j: usize| i * m + j;
    let labels = (0..m * m).map(|q| BasisLabel::Pair(q / m, q % m).to_string()).collect();
    let p = b.p();
    let mut mu = Vec::new();
    let mut delta = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for i in 0..m {
        let tau = b.nakayama(&b.basis(i));
        for j in 0..m {
            let q = pair(i, j);
            for ((p1, p2), c) in &p {
                delta.push((q, pair(i, *p1), pair(*p2, j), c.clone()));
            }
            counit.push((q, b.delta_of(&b.mul(&b.basis(i), &b.basis(j)))));
            for (k, c) in tau.iter() {
                antipode.push((pair(j, *k), q, c.clone()));
            }
        }
    }
    // (a⊗b)(a'⊗b') = aa' ⊗ b'b
    for (i, e) in b.mu.entries() {
        // a = b_i, a' = b_{e.j}, aa' = b_{e.k}
        for (j2, f) in b.mu.entries() {
            // b' = b_{j2}, b = b_{f.j}, b'b = b_{f.k}
            mu.push((pair(i, f.j), pair(e.j, j2), pair(e.k, f.k), &e.value * &f.value));
        }
    }
    let unit: Vec<_> = b
        .unit
        .iter()
        .flat_map(|(i, u)| b.unit.iter().map(move |(j, v)| (pair(*i, *j), u * v)))
        .collect();
    Ok(WeakHopfAlgebra::from_parts(labels, n, mu, unit, delta, counit, antipode)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wha::{base_algebras, center_dim, verify_antipode, verify_weak_bialgebra};

    #[test]
    fn standard_structures_pass() {
        for kind in [FrobeniusKind::Diagonal(1), FrobeniusKind::Diagonal(3), FrobeniusKind::Matrix(2)] {
            let b = standard_frobenius(kind);
            assert!(b.failures().is_empty());
            let mut acc = Accumulator::new();
            for ((i, j), c) in b.p() {
                for e in b.mu.pair(i, j) {
                    acc.add(e.k, &(&c * &e.value));
                }
            }
            assert_eq!(&acc.into_vec(), b.unit());
        }
    }

    #[test]
    fn diagonal_nakayama_is_identity() {
        let b = standard_frobenius(FrobeniusKind::Diagonal(2));
        for i in 0..2 {
            assert_eq!(b.nakayama(&b.basis(i)), b.basis(i));
        }
    }

    #[test]
    fn wrong_normalization_rejected() {
        let b = standard_frobenius(FrobeniusKind::Matrix(2));
        let mu = b.mu.clone();
        let comult = SparseTensor3::from_triples(
            (4, 4, 4),
            1,
            b.comult.entries().map(|(i, e)| (i, e.j, e.k, &e.value * &Cyclotomic::from_int(1, 2))),
        )
        .unwrap();
        let r = SeparableFrobenius::new(1, mu, b.unit.clone(), comult, b.counit.clone());
        assert!(matches!(r, Err(BuildError::Frobenius(_))));
    }

    #[test]
    fn doubles_pass() {
        let a = build_frobenius_double(&standard_frobenius(FrobeniusKind::Diagonal(2))).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(verify_weak_bialgebra(&a).passed);
        assert!(verify_antipode(&a).passed);

        let b = standard_frobenius(FrobeniusKind::Matrix(2));
        let a = build_frobenius_double(&b).unwrap();
        assert_eq!(a.dim(), 16);
        let rep = verify_weak_bialgebra(&a);
        assert!(rep.passed, "{:?}", rep.violation);
        let rep = verify_antipode(&a);
        assert!(rep.passed, "{:?}", rep.violation);
        assert_eq!(center_dim(&a), 1);
        assert_eq!(a.counit_of(a.unit()), b.delta_of(b.unit()));
    }

    #[test]
    fn eps_lr_on_matrix_double() {
        // ε^lr(a⊗b) = ab ⊗ 1
        let b = standard_frobenius(FrobeniusKind::Matrix(2));
        let a = build_frobenius_double(&b).unwrap();
        let rep = base_algebras(&a);
        assert!(rep.passed, "{:?}", rep.failures);
        let m = b.dim();
        for i in 0..m {
            for j in 0..m {
                let ab = b.mul(&b.basis(i), &b.basis(j));
                let mut expect = Accumulator::new();
                for (k, c) in ab.iter() {
                    for (u, v) in b.unit().iter() {
                        expect.add(k * m + u, &(c * v));
                    }
                }
                assert_eq!(a.eps_lr(&a.basis(i * m + j)), expect.into_vec());
            }
        }
    }
}
