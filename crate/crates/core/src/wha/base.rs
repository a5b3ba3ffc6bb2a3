//! Base algebras, center and cocommutativity.

use std::collections::HashMap;

use serde::Serialize;

use crate::exactmath::{linalg, Cyclotomic, SparseMatrix, SparseVec};

use super::{Small, Tensor2, WeakHopfAlgebra};

/// The counital maps, bases of their images and the separability idempotent,
/// with the outcome of each structural check.
#[derive(Debug, Clone, Serialize)]
pub struct BaseAlgebraReport {
    #[serde(skip)]
    pub eps_lr: SparseMatrix,
    #[serde(skip)]
    pub eps_rr: SparseMatrix,
    #[serde(skip)]
    pub left_basis: Vec<SparseVec>,
    #[serde(skip)]
    pub right_basis: Vec<SparseVec>,
    #[serde(skip)]
    pub p: Tensor2,
    pub dim_left: usize,
    pub dim_right: usize,
    pub passed: bool,
    /// Names of the failed sub-checks.
    pub failures: Vec<String>,
}

fn image_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let (c, _) = linalg::rank_factorization(m);
    c.columns()
}

fn apply(m: &[SparseVec], x: &SparseVec) -> SparseVec {
    let mut acc = Small::new();
    for (i, a) in x.iter() {
        for (k, c) in m[*i].iter() {
            acc.add(*k, &(a * c));
        }
    }
    acc.into_vec()
}

/// Computes `ε^lr`, `ε^rr`, the base algebras and `p = (ε^lr⊗id)Δ(1)`, and
/// checks idempotence, closure, commutation, the mutual inverse property and
/// the separability identities for `p`.
pub fn base_algebras(a: &WeakHopfAlgebra) -> BaseAlgebraReport {
    let d = a.dim();
    let n = a.conductor();
    let lr: Vec<SparseVec> = (0..d).map(|i| a.eps_lr(&a.basis(i))).collect();
    let rr: Vec<SparseVec> = (0..d).map(|i| a.eps_rr(&a.basis(i))).collect();
    let eps_lr = SparseMatrix::from_columns(d, n, &lr);
    let eps_rr = SparseMatrix::from_columns(d, n, &rr);
    let left_basis = image_basis(&eps_lr);
    let right_basis = image_basis(&eps_rr);
    let mut failures = Vec::new();
    let mut fail = |name: &str| failures.push(name.to_string());

    if (0..d).any(|i| apply(&lr, &lr[i]) != lr[i]) {
        fail("eps_lr idempotent");
    }
    if (0..d).any(|i| apply(&rr, &rr[i]) != rr[i]) {
        fail("eps_rr idempotent");
    }
    for (name, basis, proj) in [("left", &left_basis, &lr), ("right", &right_basis, &rr)] {
        if &apply(proj, a.unit()) != a.unit() {
            fail(&format!("{name} base algebra unital"));
        }
        let closed = basis.iter().all(|u| {
            basis.iter().all(|v| {
                let uv = a.mul(u, v);
                apply(proj, &uv) == uv
            })
        });
        if !closed {
            fail(&format!("{name} base algebra closed"));
        }
    }
    let commute = left_basis
        .iter()
        .all(|u| right_basis.iter().all(|v| a.mul(u, v) == a.mul(v, u)));
    if !commute {
        fail("base algebras commute");
    }
    let inverse = right_basis.iter().all(|v| &apply(&rr, &apply(&lr, v)) == v)
        && left_basis.iter().all(|u| &apply(&lr, &apply(&rr, u)) == u);
    if !inverse {
        fail("eps_lr and eps_rr mutually inverse");
    }
    let anti = right_basis.iter().all(|v| {
        right_basis
            .iter()
            .all(|w| apply(&lr, &a.mul(v, w)) == a.mul(&apply(&lr, w), &apply(&lr, v)))
    });
    if !anti {
        fail("eps_lr anti-multiplicative on the right base algebra");
    }

    // p = (ε^lr ⊗ id) Δ(1)
    let mut acc = Small::new();
    for ((i, j), c) in a.delta_one() {
        for (k, v) in lr[*i].iter() {
            acc.add((*k, *j), &(c * v));
        }
    }
    let p: Tensor2 = acc.into_sorted();
    let left_mul = |x: &SparseVec, t: &Tensor2| -> Tensor2 {
        let mut acc = Small::new();
        for ((i, j), c) in t {
            for (k, v) in a.mul(x, &a.basis(*i)).iter() {
                acc.add((*k, *j), &(c * v));
            }
        }
        acc.into_sorted()
    };
    let right_mul = |t: &Tensor2, x: &SparseVec| -> Tensor2 {
        let mut acc = Small::new();
        for ((i, j), c) in t {
            for (k, v) in a.mul(&a.basis(*j), x).iter() {
                acc.add((*i, *k), &(c * v));
            }
        }
        acc.into_sorted()
    };
    if !left_basis.iter().all(|x| left_mul(x, &p) == right_mul(&p, x)) {
        fail("p balanced over the left base algebra");
    }
    let mut prod = Small::new();
    for ((i, j), c) in &p {
        for e in a.mul_basis(*i, *j) {
            prod.add(e.k, &(c * &e.value));
        }
    }
    if &prod.into_vec() != a.unit() {
        fail("p multiplies to 1");
    }
    // p·p in A^l ⊗ (A^l)^op
    let mut sq = Small::new();
    for ((i1, j1), c1) in &p {
        for ((i2, j2), c2) in &p {
            let first = a.mul_basis(*i1, *i2);
            if first.is_empty() {
                continue;
            }
            let second = a.mul_basis(*j2, *j1);
            let c = c1 * c2;
            for e in first {
                for f in second {
                    sq.add((e.k, f.k), &(&(&c * &e.value) * &f.value));
                }
            }
        }
    }
    if sq.into_sorted() != p {
        fail("p idempotent");
    }
    BaseAlgebraReport {
        dim_left: left_basis.len(),
        dim_right: right_basis.len(),
        passed: failures.is_empty(),
        failures,
        eps_lr,
        eps_rr,
        left_basis,
        right_basis,
        p,
    }
}

/// Dimension of `{z : zx = xz for all x}`, from the nullspace of the stacked
/// commutator maps.
pub fn center_dim(a: &WeakHopfAlgebra) -> usize {
    let d = a.dim();
    let n = a.conductor();
    let mut rows: HashMap<(usize, usize), usize> = HashMap::new();
    let mut triples: Vec<(usize, usize, Cyclotomic)> = Vec::new();
    for z in 0..d {
        for &x in a.right_partners(z) {
            for e in a.mul_basis(z, x) {
                let len = rows.len();
                let r = *rows.entry((x, e.k)).or_insert(len);
                triples.push((r, z, e.value.clone()));
            }
        }
        for &x in a.left_partners(z) {
            for e in a.mul_basis(x, z) {
                let len = rows.len();
                let r = *rows.entry((x, e.k)).or_insert(len);
                triples.push((r, z, -&e.value));
            }
        }
    }
    let m = SparseMatrix::from_triples(rows.len(), d, n, triples).expect("indices in range");
    d - linalg::rank(&m)
}

/// Whether `Δ = τ∘Δ` entrywise.
pub fn is_cocommutative(a: &WeakHopfAlgebra) -> bool {
    a.delta() == &a.delta().swap_last()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> WeakHopfAlgebra {
        crate::wha::tests::z2_group_algebra()
    }

    #[test]
    fn hopf_algebra_has_trivial_base() {
        let rep = base_algebras(&z2());
        assert!(rep.passed, "{:?}", rep.failures);
        assert_eq!((rep.dim_left, rep.dim_right), (1, 1));
    }

    #[test]
    fn commutative_center_is_everything() {
        assert_eq!(center_dim(&z2()), 2);
        assert!(is_cocommutative(&z2()));
    }
}
