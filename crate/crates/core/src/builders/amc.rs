//! The weak Hopf algebra A_M^C of a multiplicity-free module category.

use std::collections::HashMap;

use crate::exactmath::Cyclotomic;
use crate::skeleton::{DualData, SkeletalCategory, SkeletalModule};
use crate::wha::WeakHopfAlgebra;

use super::{BasisLabel, BuildError};

/// An admissible tuple `(a; y', y; x', x)` with `y' ∈ a⊙y`, `x' ∈ a⊙x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Tuple {
    a: usize,
    y: usize,
    x: usize,
    y_target: usize,
    x_target: usize,
}

fn admissible(m: &SkeletalModule) -> Vec<Tuple> {
    let r = m.category().ring().rank();
    let k = m.num_objects();
    let mut out = Vec::new();
    for a in 0..r {
        for y in 0..k {
            for x in 0..k {
                for y_target in m.act(a, y) {
                    for x_target in m.act(a, x) {
                        out.push(Tuple { a, y, x, y_target, x_target });
                    }
                }
            }
        }
    }
    // already in (a, y, x, y', x') order
    out
}

/// Builds A_M^C with the standard dual data of `c`.
pub fn build_a_m_c(c: &SkeletalCategory, m: &SkeletalModule) -> Result<WeakHopfAlgebra, BuildError> {
    let duals = DualData::standard(c).map_err(BuildError::MissingDualData)?;
    build_a_m_c_with(c, m, &duals)
}

/// Builds A_M^C; the basis is ordered by `(a, y, x, y', x')` and labelled
/// `m[a|y'|y|x'|x]`.
pub fn build_a_m_c_with(c: &SkeletalCategory, m: &SkeletalModule, duals: &DualData) -> Result<WeakHopfAlgebra, BuildError> {
    if m.category() != c {
        return Err(BuildError::CategoryMismatch);
    }
    let ring = c.ring();
    if !ring.is_multiplicity_free() {
        return Err(BuildError::NotMultiplicityFree);
    }
    if duals.dual.len() != ring.rank() {
        return Err(BuildError::MissingDualData(crate::skeleton::SkeletonError::LabelOutOfRange(
            duals.dual.len(),
        )));
    }
    let cond = c.conductor();
    let one = ring.unit();
    let basis = admissible(m);
    let index: HashMap<Tuple, usize> = basis.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let mut by_source: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, t) in basis.iter().enumerate() {
        by_source.entry((t.y, t.x)).or_default().push(i);
    }
    let labels = basis
        .iter()
        .map(|t| {
            BasisLabel::Tuple { a: t.a, y_target: t.y_target, y: t.y, x_target: t.x_target, x: t.x }.to_string()
        })
        .collect();

    let mut mu = Vec::new();
    let mut delta = Vec::new();
    let mut antipode = Vec::new();
    let empty = Vec::new();
    for (j, t) in basis.iter().enumerate() {
        let a = t.a;
        // left factors (b; y'', y'; x'', x') composable with t
        for &i in by_source.get(&(t.y_target, t.x_target)).unwrap_or(&empty) {
            let s = &basis[i];
            let b = s.a;
            for &(c_label, _) in ring.products(b, a) {
                let key = Tuple { a: c_label, y: t.y, x: t.x, y_target: s.y_target, x_target: s.x_target };
                let Some(&k) = index.get(&key) else { continue };
                let coeff = &m.l_inv(b, a, t.y, s.y_target, t.y_target, c_label)
                    * &m.l(b, a, t.x, s.x_target, c_label, t.x_target);
                if !coeff.is_zero() {
                    mu.push((i, j, k, coeff));
                }
            }
        }
        for z in 0..m.num_objects() {
            for z_target in m.act(a, z) {
                let first = index[&Tuple { a, y: t.y, x: z, y_target: t.y_target, x_target: z_target }];
                let second = index[&Tuple { a, y: z, x: t.x, y_target: z_target, x_target: t.x_target }];
                delta.push((j, first, second, Cyclotomic::one(cond)));
            }
        }
        let ad = duals.dual[a];
        let image = Tuple { a: ad, y: t.x_target, x: t.y_target, y_target: t.x, x_target: t.y };
        let k = *index.get(&image).ok_or(BuildError::NotMultiplicityFree)?;
        let coeff = &(&(&duals.coev[ad] * &duals.ev[ad]) * &m.l(ad, a, t.x, t.x, one, t.x_target))
            * &m.l_inv(a, ad, t.y_target, t.y_target, t.y, one);
        antipode.push((k, j, coeff));
    }
    let unit = basis
        .iter()
        .enumerate()
        .filter(|(_, t)| t.a == one && t.y_target == t.y && t.x_target == t.x)
        .map(|(i, _)| (i, Cyclotomic::one(cond)))
        .collect::<Vec<_>>();
    let counit = basis
        .iter()
        .enumerate()
        .filter(|(_, t)| t.y == t.x && t.y_target == t.x_target)
        .map(|(i, _)| (i, Cyclotomic::one(cond)))
        .collect::<Vec<_>>();
    Ok(WeakHopfAlgebra::from_parts(labels, cond, mu, unit, delta, counit, antipode)?)
}
