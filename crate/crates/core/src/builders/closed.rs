//! Closed-form weak Hopf algebras attached to Vec_G^ω.

use crate::exactmath::Cyclotomic;
use crate::groups::{validate_cocycle, ThreeCocycle};
use crate::wha::{RMatrixCandidate, Tensor2, WeakHopfAlgebra};

use super::{BasisLabel, BuildError};

fn check(omega: &ThreeCocycle) -> Result<(), BuildError> {
    let rep = validate_cocycle(omega);
    match rep.violation {
        None => Ok(()),
        Some(v) => Err(BuildError::InvalidCocycle(v.to_string())),
    }
}

fn root(n: u32, e: i64) -> Cyclotomic {
    Cyclotomic::root(n, e)
}

/// B_G^ω on `f[a|y|x]`, dimension |G|³.
pub fn build_b_g_omega(omega: &ThreeCocycle) -> Result<WeakHopfAlgebra, BuildError> {
    check(omega)?;
    let g = omega.group();
    let n = g.order();
    let cond = omega.conductor();
    let w = |a, b, c| omega.exponent(a, b, c) as i64;
    let idx = |a: usize, y: usize, x: usize| (a * n + y) * n + x;
    let labels = (0..n * n * n)
        .map(|i| BasisLabel::Regular { a: i / (n * n), y: (i / n) % n, x: i % n }.to_string())
        .collect();

    let mut mu = Vec::with_capacity(n.pow(4));
    let mut delta = Vec::with_capacity(n.pow(4));
    let mut antipode = Vec::with_capacity(n.pow(3));
    for a in g.elements() {
        for y in g.elements() {
            for x in g.elements() {
                let right = idx(a, y, x);
                // left factor f[a'|ya|xa]
                for a1 in g.elements() {
                    let left = idx(a1, g.mul(y, a), g.mul(x, a));
                    let e = w(y, a, a1) - w(x, a, a1);
                    mu.push((left, right, idx(g.mul(a, a1), y, x), root(cond, e)));
                }
                for z in g.elements() {
                    delta.push((right, idx(a, y, z), idx(a, z, x), Cyclotomic::one(cond)));
                }
                let ai = g.inv(a);
                let e = w(y, a, ai) - w(x, a, ai);
                antipode.push((idx(ai, g.mul(x, a), g.mul(y, a)), right, root(cond, e)));
            }
        }
    }
    let one = g.identity();
    let unit = g
        .elements()
        .flat_map(|y| g.elements().map(move |x| (idx(one, y, x), Cyclotomic::one(cond))));
    let counit = g
        .elements()
        .flat_map(|a| g.elements().map(move |y| (idx(a, y, y), Cyclotomic::one(cond))));
    Ok(WeakHopfAlgebra::from_parts(labels, cond, mu, unit, delta, counit, antipode)?)
}

/// A_G^ω on `e[a|b|y|x]`, dimension |G|⁴, with its R-matrix.
pub fn build_a_g_omega(omega: &ThreeCocycle) -> Result<(WeakHopfAlgebra, RMatrixCandidate), BuildError> {
    check(omega)?;
    let g = omega.group();
    let n = g.order();
    let cond = omega.conductor();
    let w = |a, b, c| omega.exponent(a, b, c) as i64;
    let m = |a, b| g.mul(a, b);
    let idx = |a: usize, b: usize, y: usize, x: usize| ((a * n + b) * n + y) * n + x;
    let labels = (0..n.pow(4))
        .map(|i| {
            let (a, b, y, x) = (i / n.pow(3), (i / (n * n)) % n, (i / n) % n, i % n);
            BasisLabel::Double { a, b, y, x }.to_string()
        })
        .collect();

    let mut mu = Vec::with_capacity(n.pow(6));
    let mut delta = Vec::with_capacity(n.pow(5));
    let mut antipode = Vec::with_capacity(n.pow(4));
    for a in g.elements() {
        for b in g.elements() {
            for y in g.elements() {
                for x in g.elements() {
                    let right = idx(a, b, y, x);
                    let ayb = m(m(a, y), b);
                    let axb = m(m(a, x), b);
                    let (ay, ax) = (m(a, y), m(a, x));
                    for a1 in g.elements() {
                        for b1 in g.elements() {
                            let left = idx(a1, b1, ayb, axb);
                            let e = w(a1, a, x) - w(a1, a, y) + w(a1, ax, b) - w(a1, ay, b) + w(m(a1, ay), b, b1)
                                - w(m(a1, ax), b, b1);
                            mu.push((left, right, idx(m(a1, a), m(b, b1), y, x), root(cond, e)));
                        }
                    }
                    for z in g.elements() {
                        delta.push((right, idx(a, b, y, z), idx(a, b, z, x), Cyclotomic::one(cond)));
                    }
                    let (ai, bi) = (g.inv(a), g.inv(b));
                    let e = w(y, b, bi) - w(x, b, bi) + w(a, y, b) - w(a, x, b) + w(a, ai, axb) - w(a, ai, ayb);
                    antipode.push((idx(ai, bi, axb, ayb), right, root(cond, e)));
                }
            }
        }
    }
    let one = g.identity();
    let unit = g
        .elements()
        .flat_map(|y| g.elements().map(move |x| (idx(one, one, y, x), Cyclotomic::one(cond))));
    let counit = (0..n * n).flat_map(|ab| g.elements().map(move |y| (ab * n * n + y * n + y, Cyclotomic::one(cond))));
    let a = WeakHopfAlgebra::from_parts(labels, cond, mu, unit, delta, counit, antipode)?;
    Ok((a, RMatrixCandidate::new(closed_form_r_matrix(omega))))
}

/// `R = Σ_{a,b,z} ω(a,z,b)⁻¹ e[1|b|az|z] ⊗ e[a|1|z|zb]`, with |G|³ terms.
pub fn closed_form_r_matrix(omega: &ThreeCocycle) -> Tensor2 {
    let g = omega.group();
    let n = g.order();
    let cond = omega.conductor();
    let one = g.identity();
    let idx = |a: usize, b: usize, y: usize, x: usize| ((a * n + b) * n + y) * n + x;
    let mut r: Tensor2 = Vec::with_capacity(n.pow(3));
    for a in g.elements() {
        for b in g.elements() {
            for z in g.elements() {
                let left = idx(one, b, g.mul(a, z), z);
                let right = idx(a, one, z, g.mul(z, b));
                r.push(((left, right), root(cond, -(omega.exponent(a, z, b) as i64))));
            }
        }
    }
    r.sort_by_key(|p| p.0);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{standard_cocycle, FiniteGroup};
    use crate::wha::{verify_antipode, verify_weak_bialgebra};

    #[test]
    fn z2_trivial_product_example() {
        let a = build_b_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(a.dim(), 8);
        let l = a.label_index("f[1|1|0]").unwrap();
        let r = a.label_index("f[1|0|1]").unwrap();
        let prod = a.mul(&a.basis(l), &a.basis(r));
        assert_eq!(prod, a.basis(a.label_index("f[0|0|1]").unwrap()));
    }

    #[test]
    fn b_z3_passes() {
        let a = build_b_g_omega(&standard_cocycle(3, 1).unwrap()).unwrap();
        assert!(verify_weak_bialgebra(&a).passed);
        let rep = verify_antipode(&a);
        assert!(rep.passed, "{:?}", rep.violation);
    }

    #[test]
    fn a_z2_passes() {
        let (a, r) = build_a_g_omega(&standard_cocycle(2, 1).unwrap()).unwrap();
        assert_eq!(a.dim(), 16);
        assert_eq!(r.r.len(), 8);
        let rep = verify_weak_bialgebra(&a);
        assert!(rep.passed, "{:?}", rep.violation);
        let rep = verify_antipode(&a);
        assert!(rep.passed, "{:?}", rep.violation);
    }

    #[test]
    fn invalid_cocycle_rejected() {
        let w = standard_cocycle(3, 1).unwrap().with_exponent(1, 1, 1, 2);
        assert!(matches!(build_b_g_omega(&w), Err(BuildError::InvalidCocycle(_))));
    }
}
