//! Quasi-triangular structures and the Yang-Baxter identity.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::exactmath::{linalg, Cyclotomic, SparseMatrix, SparseVec};

use super::verify::{fmt_terms, sweep, violation, Law, Report, Violation};
use super::{Small, Tensor2, Tensor3, WeakHopfAlgebra};

/// A proposed R-matrix, optionally with its weak inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixCandidate {
    pub r: Tensor2,
    pub rbar: Option<Tensor2>,
}

impl RMatrixCandidate {
    pub fn new(r: Tensor2) -> Self {
        RMatrixCandidate { r, rbar: None }
    }

    /// The candidate with its two tensor legs exchanged.
    pub fn flipped(&self) -> Self {
        RMatrixCandidate {
            r: flip(&self.r),
            rbar: self.rbar.as_ref().map(flip),
        }
    }
}

pub(crate) fn flip(t: &Tensor2) -> Tensor2 {
    let mut v: Tensor2 = t.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect();
    v.sort_by_key(|a| a.0);
    v
}

fn normalize2(t: &Tensor2) -> Tensor2 {
    let mut acc = Small::new();
    for (k, c) in t {
        acc.add(*k, c);
    }
    acc.into_sorted()
}

/// Places a two-leg tensor into legs `(p, q)` of a three-leg tensor, with the
/// unit in the remaining leg.
fn pad(a: &WeakHopfAlgebra, t: &Tensor2, legs: (usize, usize)) -> Tensor3 {
    let mut acc = Small::new();
    for ((i, j), c) in t {
        for (u, cu) in a.unit().iter() {
            let key = match legs {
                (0, 1) => (*i, *j, *u),
                (0, 2) => (*i, *u, *j),
                (1, 2) => (*u, *i, *j),
                _ => unreachable!("legs are increasing pairs below 3"),
            };
            acc.add(key, &(c * cu));
        }
    }
    acc.into_sorted()
}

fn delta_first(a: &WeakHopfAlgebra, t: &Tensor2) -> Tensor3 {
    let mut acc = Small::new();
    for ((i, j), c) in t {
        for e in a.coproduct(*i) {
            acc.add((e.j, e.k, *j), &(c * &e.value));
        }
    }
    acc.into_sorted()
}

fn delta_second(a: &WeakHopfAlgebra, t: &Tensor2) -> Tensor3 {
    let mut acc = Small::new();
    for ((i, j), c) in t {
        for e in a.coproduct(*j) {
            acc.add((*i, e.j, e.k), &(c * &e.value));
        }
    }
    acc.into_sorted()
}

fn is_rbar(a: &WeakHopfAlgebra, r: &Tensor2, rbar: &Tensor2) -> Option<Violation> {
    let one = a.delta_one();
    let one_cop = flip(one);
    let rbar = normalize2(rbar);
    let checks = [
        (a.mul2(r, &rbar), one_cop.clone(), 0),
        (a.mul2(&rbar, r), one.clone(), 1),
        (a.mul2(&rbar, &one_cop), rbar.clone(), 2),
    ];
    for (lhs, rhs, which) in checks {
        if lhs != rhs {
            return Some(violation(Law::RBarExists, vec![which], &lhs, &rhs));
        }
    }
    None
}

/// Finds the weak inverse of R: first tries `(S⊗id)R` and `(id⊗S⁻¹)R`, then
/// solves the three defining linear equations when the dimension allows.
pub fn find_rbar(a: &WeakHopfAlgebra, r: &Tensor2) -> Option<Tensor2> {
    let mut s_first = Small::new();
    for ((i, j), c) in r {
        for (k, v) in a.s_image(*i).iter() {
            s_first.add((*k, *j), &(c * v));
        }
    }
    let cand = s_first.into_sorted();
    if is_rbar(a, r, &cand).is_none() {
        return Some(cand);
    }
    if let Some(sinv) = a.antipode_inverse() {
        let cols = sinv.columns();
        let mut acc = Small::new();
        for ((i, j), c) in r {
            for (k, v) in cols[*j].iter() {
                acc.add((*i, *k), &(c * v));
            }
        }
        let cand = acc.into_sorted();
        if is_rbar(a, r, &cand).is_none() {
            return Some(cand);
        }
    }
    solve_rbar(a, r)
}

/// Largest dimension for which the unknown `R̄` is solved for directly.
const SOLVE_LIMIT: usize = 64;

fn solve_rbar(a: &WeakHopfAlgebra, r: &Tensor2) -> Option<Tensor2> {
    let d = a.dim();
    if d > SOLVE_LIMIT {
        return None;
    }
    let n = a.conductor();
    let one = a.delta_one().clone();
    let one_cop = flip(&one);
    // rows: (block, i, j); columns: unknown coefficient of b_p ⊗ b_q
    let mut rows: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut triples = Vec::new();
    let row_of = |key: (usize, usize, usize), rows: &mut HashMap<_, _>| {
        let len = rows.len();
        *rows.entry(key).or_insert(len)
    };
    for p in 0..d {
        for q in 0..d {
            let col = p * d + q;
            let x: Tensor2 = vec![((p, q), Cyclotomic::one(n))];
            for ((i, j), c) in a.mul2(r, &x) {
                triples.push((row_of((0, i, j), &mut rows), col, c));
            }
            for ((i, j), c) in a.mul2(&x, r) {
                triples.push((row_of((1, i, j), &mut rows), col, c));
            }
            let mut third = Small::new();
            for (k, c) in a.mul2(&x, &one_cop) {
                third.add(k, &c);
            }
            third.add((p, q), &Cyclotomic::from_int(n, -1));
            for ((i, j), c) in third.into_sorted() {
                triples.push((row_of((2, i, j), &mut rows), col, c));
            }
        }
    }
    let mut rhs = Vec::new();
    for ((i, j), c) in &one_cop {
        rhs.push((row_of((0, *i, *j), &mut rows), c.clone()));
    }
    for ((i, j), c) in &one {
        rhs.push((row_of((1, *i, *j), &mut rows), c.clone()));
    }
    let m = SparseMatrix::from_triples(rows.len(), d * d, n, triples).ok()?;
    let mut b = Small::new();
    for (i, c) in rhs {
        b.add(i, &c);
    }
    let sol: SparseVec = linalg::solve_sparse(&m, &b.into_vec())?;
    Some(sol.iter().map(|(col, c)| ((col / d, col % d), c.clone())).collect())
}

/// Checks `R Δ(1) = R`, `R Δ(x) = Δcop(x) R`, both coproduct laws, the weak
/// inverse `R̄` (supplied or solved for), and the Yang-Baxter identity.
pub fn verify_quasitriangular(a: &WeakHopfAlgebra, cand: &RMatrixCandidate) -> Report {
    let mut rep = Report::new();
    let r = normalize2(&cand.r);
    let rd = a.mul2(&r, a.delta_one());
    rep.checked += 1;
    if rd != r {
        rep.passed = false;
        rep.violation = Some(violation(Law::RAbsorbsDeltaOne, vec![], &rd, &r));
        return rep;
    }
    let intertwine = sweep(a.dim(), |x, n| {
        *n += 1;
        let dx = a.delta_tensor(x);
        let lhs = a.mul2(&r, &dx);
        let rhs = a.mul2(&flip(&dx), &r);
        (lhs != rhs).then(|| violation(Law::RIntertwines, vec![x], &lhs, &rhs))
    });
    if !rep.absorb(intertwine) {
        return rep;
    }
    let r12 = pad(a, &r, (0, 1));
    let r13 = pad(a, &r, (0, 2));
    let r23 = pad(a, &r, (1, 2));
    for (law, lhs, rhs) in [
        (Law::RCoproductFirst, delta_first(a, &r), a.mul3(&r13, &r23)),
        (Law::RCoproductSecond, delta_second(a, &r), a.mul3(&r13, &r12)),
    ] {
        rep.checked += 1;
        if lhs != rhs {
            rep.passed = false;
            rep.violation = Some(violation(law, vec![], &lhs, &rhs));
            return rep;
        }
    }
    rep.checked += 1;
    let rbar_failure = match &cand.rbar {
        Some(rbar) => is_rbar(a, &r, rbar),
        None => find_rbar(a, &r).is_none().then(|| Violation {
            law: Law::RBarExists,
            indices: vec![],
            lhs: "no solution".into(),
            rhs: fmt_terms(&flip(a.delta_one())),
        }),
    };
    if let Some(v) = rbar_failure {
        rep.passed = false;
        rep.violation = Some(v);
        return rep;
    }
    let ybe = verify_yang_baxter(a, &r);
    rep.checked += ybe.checked;
    if !ybe.passed {
        rep.passed = false;
        rep.violation = ybe.violation;
    }
    rep
}

/// `R12 R13 R23 = R23 R13 R12`.
pub fn verify_yang_baxter(a: &WeakHopfAlgebra, r: &Tensor2) -> Report {
    let r = normalize2(r);
    let r12 = pad(a, &r, (0, 1));
    let r13 = pad(a, &r, (0, 2));
    let r23 = pad(a, &r, (1, 2));
    let (lhs, rhs) = rayon::join(
        || a.mul3(&a.mul3(&r12, &r13), &r23),
        || a.mul3(&a.mul3(&r23, &r13), &r12),
    );
    let passed = lhs == rhs;
    Report {
        passed,
        checked: 1,
        violation: (!passed).then(|| violation(Law::YangBaxter, vec![], &lhs, &rhs)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> WeakHopfAlgebra {
        crate::wha::tests::z2_group_algebra()
    }

    #[test]
    fn trivial_r_on_cocommutative_algebra() {
        let a = z2();
        let r = vec![((0, 0), Cyclotomic::one(1))];
        let rep = verify_quasitriangular(&a, &RMatrixCandidate::new(r));
        assert!(rep.passed, "{:?}", rep.violation);
    }

    #[test]
    fn non_invertible_r_fails() {
        let a = z2();
        // R = e⊗e + e⊗g is not invertible
        let r = vec![((0, 0), Cyclotomic::one(1)), ((0, 1), Cyclotomic::one(1))];
        let rep = verify_quasitriangular(&a, &RMatrixCandidate::new(r));
        assert!(!rep.passed);
    }
}
