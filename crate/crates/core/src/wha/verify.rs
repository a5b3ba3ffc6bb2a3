//! Exact checks of the weak bialgebra and antipode axioms on basis tuples.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactmath::{Cyclotomic, SparseVec};

use super::{Small, Tensor2, Tensor3, WeakHopfAlgebra};

/// Which basis tuples a multilinear law is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sweep {
    /// Only tuples where some intermediate product is nonzero.
    #[default]
    Pruned,
    /// Every basis tuple.
    Exhaustive,
}

/// Named identities checked by the verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Law {
    Unit,
    Associativity,
    Counit,
    Coassociativity,
    Multiplicativity,
    CounitFirstLeg,
    CounitSecondLeg,
    UnitLeftNested,
    UnitRightNested,
    AntipodeTarget,
    AntipodeSource,
    AntipodeTriple,
    AntipodeInvertible,
    AntipodeAntiMultiplicative,
    AntipodeAntiComultiplicative,
    AntipodeUnit,
    AntipodeCounit,
    RAbsorbsDeltaOne,
    RIntertwines,
    RCoproductFirst,
    RCoproductSecond,
    RBarExists,
    YangBaxter,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Unit => "1x = x = x1",
            Law::Associativity => "(xy)z = x(yz)",
            Law::Counit => "(ε⊗id)Δ = id = (id⊗ε)Δ",
            Law::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            Law::Multiplicativity => "Δ(x)Δ(y) = Δ(xy)",
            Law::CounitFirstLeg => "ε(x y(1)) ε(y(2) z) = ε(xyz)",
            Law::CounitSecondLeg => "ε(x y(2)) ε(y(1) z) = ε(xyz)",
            Law::UnitLeftNested => "1(1) ⊗ 1(2)1(1') ⊗ 1(2') = Δ²(1)",
            Law::UnitRightNested => "1(1) ⊗ 1(1')1(2) ⊗ 1(2') = Δ²(1)",
            Law::AntipodeTarget => "x(1) S(x(2)) = ε(1(1) x) 1(2)",
            Law::AntipodeSource => "S(x(1)) x(2) = 1(1) ε(x 1(2))",
            Law::AntipodeTriple => "S(x(1)) x(2) S(x(3)) = S(x)",
            Law::AntipodeInvertible => "S invertible",
            Law::AntipodeAntiMultiplicative => "S(xy) = S(y)S(x)",
            Law::AntipodeAntiComultiplicative => "Δ(S(x)) = S(x(2)) ⊗ S(x(1))",
            Law::AntipodeUnit => "S(1) = 1",
            Law::AntipodeCounit => "ε∘S = ε",
            Law::RAbsorbsDeltaOne => "R Δ(1) = R",
            Law::RIntertwines => "R Δ(x) = Δcop(x) R",
            Law::RCoproductFirst => "(Δ⊗id)R = R13 R23",
            Law::RCoproductSecond => "(id⊗Δ)R = R13 R12",
            Law::RBarExists => "R R̄ = Δcop(1), R̄ R = Δ(1), R̄ Δcop(1) = R̄",
            Law::YangBaxter => "R12 R13 R23 = R23 R13 R12",
        };
        f.write_str(s)
    }
}

/// The first failing instance of a law: basis indices and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: Law,
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}: {} != {}", self.law, self.indices, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub passed: bool,
    /// Number of basis instances evaluated.
    pub checked: usize,
    pub violation: Option<Violation>,
}

impl Report {
    pub(crate) fn new() -> Self {
        Report {
            passed: true,
            checked: 0,
            violation: None,
        }
    }

    /// Adds one law's result; stops at the first failure.
    pub(crate) fn absorb(&mut self, (checked, violation): (usize, Option<Violation>)) -> bool {
        self.checked += checked;
        if let Some(v) = violation {
            self.passed = false;
            self.violation = Some(v);
            return false;
        }
        true
    }
}

pub(crate) fn fmt_terms<K: fmt::Debug>(t: &[(K, Cyclotomic)]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter().map(|(k, c)| format!("({c})·{k:?}")).collect::<Vec<_>>().join(" + ")
}

pub(crate) fn violation<K: fmt::Debug>(law: Law, indices: Vec<usize>, lhs: &[(K, Cyclotomic)], rhs: &[(K, Cyclotomic)]) -> Violation {
    Violation {
        law,
        indices,
        lhs: fmt_terms(lhs),
        rhs: fmt_terms(rhs),
    }
}

/// Runs `f` over `0..n` in parallel and keeps the failure with smallest index.
pub(crate) fn sweep<F>(n: usize, f: F) -> (usize, Option<Violation>)
where
    F: Fn(usize, &mut usize) -> Option<Violation> + Sync,
{
    let results: Vec<(usize, Option<Violation>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut checked = 0;
            let v = f(i, &mut checked);
            (checked, v)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    (checked, results.into_iter().find_map(|r| r.1))
}

impl WeakHopfAlgebra {
    pub(crate) fn delta_tensor(&self, i: usize) -> Tensor2 {
        self.coproduct(i).iter().map(|e| ((e.j, e.k), e.value.clone())).collect()
    }

    /// `(Δ⊗id)Δ(b_i)`.
    pub(crate) fn delta2_basis(&self, i: usize) -> Tensor3 {
        let mut acc = Small::new();
        for e in self.coproduct(i) {
            for f in self.coproduct(e.j) {
                acc.add((f.j, f.k, e.k), &(&e.value * &f.value));
            }
        }
        acc.into_sorted()
    }

    /// `(id⊗Δ)Δ(b_i)`.
    fn delta2_basis_right(&self, i: usize) -> Tensor3 {
        let mut acc = Small::new();
        for e in self.coproduct(i) {
            for f in self.coproduct(e.k) {
                acc.add((e.j, f.j, f.k), &(&e.value * &f.value));
            }
        }
        acc.into_sorted()
    }

    /// `ε(1(1) x) 1(2)`.
    pub fn eps_lr(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Small::new();
        for ((i, j), c) in self.delta_one() {
            let e = self.counit_of(&self.mul(&self.basis(*i), x));
            if !e.is_zero() {
                acc.add(*j, &(c * &e));
            }
        }
        acc.into_vec()
    }

    /// `1(1) ε(1(2) x)`.
    pub fn eps_rr(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Small::new();
        for ((i, j), c) in self.delta_one() {
            let e = self.counit_of(&self.mul(&self.basis(*j), x));
            if !e.is_zero() {
                acc.add(*i, &(c * &e));
            }
        }
        acc.into_vec()
    }

    /// `1(1) ε(x 1(2))`, the right-hand side of the second antipode identity.
    pub fn eps_source(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Small::new();
        for ((i, j), c) in self.delta_one() {
            let e = self.counit_of(&self.mul(x, &self.basis(*j)));
            if !e.is_zero() {
                acc.add(*i, &(c * &e));
            }
        }
        acc.into_vec()
    }
}

fn check_unit(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    sweep(a.dim(), |i, n| {
        *n += 1;
        let b = a.basis(i);
        for (lhs, side) in [(a.mul(a.unit(), &b), 0), (a.mul(&b, a.unit()), 1)] {
            if lhs != b {
                return Some(violation(Law::Unit, vec![i, side], lhs.entries(), b.entries()));
            }
        }
        None
    })
}

fn triple_products(a: &WeakHopfAlgebra, x: usize, y: usize, z: usize) -> (Vec<(usize, Cyclotomic)>, Vec<(usize, Cyclotomic)>) {
    let mut lhs = Small::new();
    for e in a.mul_basis(x, y) {
        for f in a.mul_basis(e.k, z) {
            lhs.add(f.k, &(&e.value * &f.value));
        }
    }
    let mut rhs = Small::new();
    for e in a.mul_basis(y, z) {
        for f in a.mul_basis(x, e.k) {
            rhs.add(f.k, &(&e.value * &f.value));
        }
    }
    (lhs.into_sorted(), rhs.into_sorted())
}

fn check_associativity(a: &WeakHopfAlgebra, mode: Sweep) -> (usize, Option<Violation>) {
    let d = a.dim();
    let test = |x, y, z, n: &mut usize| {
        *n += 1;
        let (l, r) = triple_products(a, x, y, z);
        (l != r).then(|| violation(Law::Associativity, vec![x, y, z], &l, &r))
    };
    if mode == Sweep::Exhaustive {
        return sweep(d, |x, n| {
            for y in 0..d {
                for z in 0..d {
                    if let Some(v) = test(x, y, z, n) {
                        return Some(v);
                    }
                }
            }
            None
        });
    }
    // triples with (xy)z possibly nonzero
    let first = sweep(d, |x, n| {
        for &y in a.right_partners(x) {
            let mut zs: Vec<usize> = a.mul_basis(x, y).iter().flat_map(|e| a.right_partners(e.k).iter().copied()).collect();
            zs.sort_unstable();
            zs.dedup();
            for z in zs {
                if let Some(v) = test(x, y, z, n) {
                    return Some(v);
                }
            }
        }
        None
    });
    if first.1.is_some() {
        return first;
    }
    // triples with x(yz) possibly nonzero
    let second = sweep(d, |y, n| {
        for &z in a.right_partners(y) {
            let mut xs: Vec<usize> = a.mul_basis(y, z).iter().flat_map(|e| a.left_partners(e.k).iter().copied()).collect();
            xs.sort_unstable();
            xs.dedup();
            for x in xs {
                if let Some(v) = test(x, y, z, n) {
                    return Some(v);
                }
            }
        }
        None
    });
    (first.0 + second.0, second.1)
}

fn check_counit(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    sweep(a.dim(), |i, n| {
        *n += 1;
        let b = a.basis(i);
        let mut left = Small::new();
        let mut right = Small::new();
        for e in a.coproduct(i) {
            left.add(e.k, &(&a.counit_basis(e.j) * &e.value));
            right.add(e.j, &(&a.counit_basis(e.k) * &e.value));
        }
        for (side, got) in [(0, left.into_sorted()), (1, right.into_sorted())] {
            if got != b.entries() {
                return Some(violation(Law::Counit, vec![i, side], &got, b.entries()));
            }
        }
        None
    })
}

fn check_coassociativity(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    sweep(a.dim(), |i, n| {
        *n += 1;
        let l = a.delta2_basis(i);
        let r = a.delta2_basis_right(i);
        (l != r).then(|| violation(Law::Coassociativity, vec![i], &l, &r))
    })
}

fn check_multiplicativity(a: &WeakHopfAlgebra, mode: Sweep) -> (usize, Option<Violation>) {
    let d = a.dim();
    // first-leg parents: y with b_t in the first leg of Δ(b_y)
    let mut parents = vec![Vec::new(); d];
    for y in 0..d {
        for e in a.coproduct(y) {
            if parents[e.j].last() != Some(&y) {
                parents[e.j].push(y);
            }
        }
    }
    sweep(d, |x, n| {
        let ys: Vec<usize> = match mode {
            Sweep::Exhaustive => (0..d).collect(),
            Sweep::Pruned => {
                let mut ys: Vec<usize> = a.right_partners(x).to_vec();
                for e in a.coproduct(x) {
                    for &t in a.right_partners(e.j) {
                        ys.extend(parents[t].iter().copied());
                    }
                }
                ys.sort_unstable();
                ys.dedup();
                ys
            }
        };
        let dx = a.delta_tensor(x);
        for y in ys {
            *n += 1;
            let lhs = a.mul2(&dx, &a.delta_tensor(y));
            let mut rhs = Small::new();
            for e in a.mul_basis(x, y) {
                for f in a.coproduct(e.k) {
                    rhs.add((f.j, f.k), &(&e.value * &f.value));
                }
            }
            let rhs = rhs.into_sorted();
            if lhs != rhs {
                return Some(violation(Law::Multiplicativity, vec![x, y], &lhs, &rhs));
            }
        }
        None
    })
}

fn check_counit_axiom(a: &WeakHopfAlgebra, mode: Sweep) -> (usize, Option<Violation>) {
    let d = a.dim();
    // rho[k](z) = ε(b_k b_z), lambda[k](x) = ε(b_x b_k)
    let rho: Vec<Vec<(usize, Cyclotomic)>> = (0..d)
        .map(|k| {
            a.right_partners(k)
                .iter()
                .map(|&z| (z, a.counit_of_product(k, z)))
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect();
    let lambda: Vec<Vec<(usize, Cyclotomic)>> = (0..d)
        .map(|k| {
            a.left_partners(k)
                .iter()
                .map(|&x| (x, a.counit_of_product(x, k)))
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect();
    let form = |y: usize, swap: bool| {
        let mut acc = Small::new();
        for e in a.coproduct(y) {
            let (l, r) = if swap { (e.k, e.j) } else { (e.j, e.k) };
            for (x, cx) in &lambda[l] {
                let c = &e.value * cx;
                for (z, cz) in &rho[r] {
                    acc.add((*x, *z), &(&c * cz));
                }
            }
        }
        acc.into_sorted()
    };
    match mode {
        Sweep::Pruned => sweep(d, |y, n| {
            *n += 1;
            let mut full = Small::new();
            for &x in a.left_partners(y) {
                for e in a.mul_basis(x, y) {
                    for (z, cz) in &rho[e.k] {
                        full.add((x, *z), &(&e.value * cz));
                    }
                }
            }
            let full = full.into_sorted();
            for (law, swap) in [(Law::CounitFirstLeg, false), (Law::CounitSecondLeg, true)] {
                let split = form(y, swap);
                if split != full {
                    let (x, z) = first_difference(&split, &full);
                    return Some(Violation {
                        law,
                        indices: vec![x, y, z],
                        lhs: fmt_terms(&split),
                        rhs: fmt_terms(&full),
                    });
                }
            }
            None
        }),
        Sweep::Exhaustive => sweep(d, |x, n| {
            for y in 0..d {
                for z in 0..d {
                    *n += 1;
                    let xyz = a.counit_of(&a.mul(&a.mul(&a.basis(x), &a.basis(y)), &a.basis(z)));
                    for (law, swap) in [(Law::CounitFirstLeg, false), (Law::CounitSecondLeg, true)] {
                        let mut s = a.zero();
                        for e in a.coproduct(y) {
                            let (l, r) = if swap { (e.k, e.j) } else { (e.j, e.k) };
                            s += &(&(&e.value * &a.counit_of_product(x, l)) * &a.counit_of_product(r, z));
                        }
                        if s != xyz {
                            return Some(Violation {
                                law,
                                indices: vec![x, y, z],
                                lhs: s.to_string(),
                                rhs: xyz.to_string(),
                            });
                        }
                    }
                }
            }
            None
        }),
    }
}

fn first_difference(a: &[((usize, usize), Cyclotomic)], b: &[((usize, usize), Cyclotomic)]) -> (usize, usize) {
    let mut keys: Vec<(usize, usize)> = a.iter().chain(b).map(|t| t.0).collect();
    keys.sort_unstable();
    keys.dedup();
    let get = |t: &[((usize, usize), Cyclotomic)], k| t.iter().find(|e| e.0 == k).map(|e| e.1.clone());
    keys.into_iter().find(|&k| get(a, k) != get(b, k)).unwrap_or((0, 0))
}

fn check_unit_axiom(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    let one = a.delta_one();
    let nested = {
        let mut acc = Small::new();
        for (i, c) in a.unit().iter() {
            for (k, v) in a.delta2_basis(*i) {
                acc.add(k, &(c * &v));
            }
        }
        acc.into_sorted()
    };
    let mut checked = 0;
    for (law, left) in [(Law::UnitLeftNested, true), (Law::UnitRightNested, false)] {
        let mut acc = Small::new();
        for ((i, j), c) in one {
            for ((k, l), c2) in one {
                checked += 1;
                let prod = if left { a.mul_basis(*j, *k) } else { a.mul_basis(*k, *j) };
                let cc = c * c2;
                for e in prod {
                    acc.add((*i, e.k, *l), &(&cc * &e.value));
                }
            }
        }
        let got = acc.into_sorted();
        if got != nested {
            return (checked, Some(violation(law, vec![], &got, &nested)));
        }
    }
    (checked, None)
}

/// Checks the algebra, coalgebra and weak bialgebra axioms with pruned sweeps.
pub fn verify_weak_bialgebra(a: &WeakHopfAlgebra) -> Report {
    verify_weak_bialgebra_with(a, Sweep::Pruned)
}

pub fn verify_weak_bialgebra_with(a: &WeakHopfAlgebra, mode: Sweep) -> Report {
    let mut r = Report::new();
    let _ = r.absorb(check_unit(a))
        && r.absorb(check_associativity(a, mode))
        && r.absorb(check_counit(a))
        && r.absorb(check_coassociativity(a))
        && r.absorb(check_multiplicativity(a, mode))
        && r.absorb(check_counit_axiom(a, mode))
        && r.absorb(check_unit_axiom(a));
    r
}

fn check_antipode_identities(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    sweep(a.dim(), |x, n| {
        *n += 1;
        let bx = a.basis(x);
        let mut target = Small::new();
        let mut source = Small::new();
        for e in a.coproduct(x) {
            for t in a.mul(&a.basis(e.j), a.s_image(e.k)).iter() {
                target.add(t.0, &(&e.value * &t.1));
            }
            for t in a.mul(a.s_image(e.j), &a.basis(e.k)).iter() {
                source.add(t.0, &(&e.value * &t.1));
            }
        }
        let target = target.into_vec();
        let want = a.eps_lr(&bx);
        if target != want {
            return Some(violation(Law::AntipodeTarget, vec![x], target.entries(), want.entries()));
        }
        let source = source.into_vec();
        let want = a.eps_source(&bx);
        if source != want {
            return Some(violation(Law::AntipodeSource, vec![x], source.entries(), want.entries()));
        }
        let mut triple = Small::new();
        for ((p, q, r), c) in a.delta2_basis(x) {
            let sq = a.mul(a.s_image(p), &a.basis(q));
            for t in a.mul(&sq, a.s_image(r)).iter() {
                triple.add(t.0, &(&c * &t.1));
            }
        }
        let triple = triple.into_vec();
        if &triple != a.s_image(x) {
            return Some(violation(Law::AntipodeTriple, vec![x], triple.entries(), a.s_image(x).entries()));
        }
        None
    })
}

fn check_anti_multiplicative(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    let d = a.dim();
    let mut preimage = vec![Vec::new(); d];
    for x in 0..d {
        for (t, _) in a.s_image(x).iter() {
            preimage[*t].push(x);
        }
    }
    sweep(d, |y, n| {
        let mut xs: Vec<usize> = a.left_partners(y).to_vec();
        for (s, _) in a.s_image(y).iter() {
            for &t in a.right_partners(*s) {
                xs.extend(preimage[t].iter().copied());
            }
        }
        xs.sort_unstable();
        xs.dedup();
        for x in xs {
            *n += 1;
            let lhs = a.apply_s(&a.mul(&a.basis(x), &a.basis(y)));
            let rhs = a.mul(a.s_image(y), a.s_image(x));
            if lhs != rhs {
                return Some(violation(Law::AntipodeAntiMultiplicative, vec![x, y], lhs.entries(), rhs.entries()));
            }
        }
        None
    })
}

fn check_anti_comultiplicative(a: &WeakHopfAlgebra) -> (usize, Option<Violation>) {
    sweep(a.dim(), |x, n| {
        *n += 1;
        let lhs = a.coproduct_of(a.s_image(x));
        let mut rhs = Small::new();
        for e in a.coproduct(x) {
            for (p, cp) in a.s_image(e.k).iter() {
                let c = &e.value * cp;
                for (q, cq) in a.s_image(e.j).iter() {
                    rhs.add((*p, *q), &(&c * cq));
                }
            }
        }
        let rhs = rhs.into_sorted();
        if lhs != rhs {
            return Some(violation(Law::AntipodeAntiComultiplicative, vec![x], &lhs, &rhs));
        }
        let e1 = a.counit_of(a.s_image(x));
        let e2 = a.counit_basis(x);
        (e1 != e2).then(|| Violation {
            law: Law::AntipodeCounit,
            indices: vec![x],
            lhs: e1.to_string(),
            rhs: e2.to_string(),
        })
    })
}

/// Checks the three antipode identities on every basis element, invertibility
/// of S, and that S reverses both products and coproducts.
pub fn verify_antipode(a: &WeakHopfAlgebra) -> Report {
    let mut r = Report::new();
    if !r.absorb(check_antipode_identities(a)) {
        return r;
    }
    let invertible = a.antipode_inverse().is_some();
    r.checked += 1;
    if !invertible {
        r.passed = false;
        r.violation = Some(Violation {
            law: Law::AntipodeInvertible,
            indices: vec![],
            lhs: "singular".into(),
            rhs: "invertible".into(),
        });
        return r;
    }
    let s1 = a.apply_s(a.unit());
    r.checked += 1;
    if &s1 != a.unit() {
        r.passed = false;
        r.violation = Some(violation(Law::AntipodeUnit, vec![], s1.entries(), a.unit().entries()));
        return r;
    }
    let _ = r.absorb(check_anti_multiplicative(a)) && r.absorb(check_anti_comultiplicative(a));
    r
}
