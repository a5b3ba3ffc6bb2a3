//! Braidings from R-matrices and the reduced R-matrix roundtrip.

use serde::{Deserialize, Serialize};

use crate::exactmath::{linalg, Accumulator, Cyclotomic, SparseMatrix, SparseVec};
use crate::wha::{Tensor2, WeakHopfAlgebra};

use super::{act2, coherence::{left_unitor, right_unitor}, intertwiner_space, is_module_map, mat_mul, regular_module, retract, tensor_maps, tensor_product, tensor_unit, WhaModule};

/// The flip `V ⊗ W → W ⊗ V`.
fn swap(v: &WhaModule, w: &WhaModule) -> SparseMatrix {
    let (dv, dw) = (v.dim(), w.dim());
    let n = v.conductor();
    let t = (0..dv).flat_map(|i| (0..dw).map(move |j| (j * dv + i, i * dw + j, Cyclotomic::one(n))));
    SparseMatrix::from_triples(dv * dw, dv * dw, n, t).expect("in range")
}

/// `v ⊗ w ↦ R⁽²⁾.w ⊗ R⁽¹⁾.v` on the full tensor product.
fn raw_braiding(r: &Tensor2, v: &WhaModule, w: &WhaModule) -> SparseMatrix {
    mat_mul(&swap(v, w), &act2(v, w, r))
}

/// `c_{V,W} = r_{W,V} ∘ c̃ ∘ i_{V,W}`.
pub fn braiding_from_r(a: &WeakHopfAlgebra, r: &Tensor2, v: &WhaModule, w: &WhaModule) -> SparseMatrix {
    let (_, _, i_vw) = retract(a, v, w);
    let (_, r_wv, _) = retract(a, w, v);
    mat_mul(&mat_mul(&r_wv, &raw_braiding(r, v, w)), &i_vw)
}

fn identity(v: &WhaModule) -> SparseMatrix {
    SparseMatrix::identity(v.dim(), v.conductor())
}

/// `(c⊗1)(1⊗c)(c⊗1) = (1⊗c)(c⊗1)(1⊗c)` on the image of the threefold
/// idempotent of `V ⊗ W ⊗ U`, where every bracketing of the triple product
/// is canonically identified.
pub fn braid_relation(a: &WeakHopfAlgebra, r: &Tensor2, v: &WhaModule, w: &WhaModule, u: &WhaModule) -> bool {
    let c = |x: &WhaModule, y: &WhaModule| raw_braiding(r, x, y);
    let (iv, iw, iu) = (identity(v), identity(w), identity(u));
    // threefold idempotent Σ 1(1) ⊗ 1(2) ⊗ 1(3)
    let mut e3 = SparseMatrix::zero(v.dim() * w.dim() * u.dim(), v.dim() * w.dim() * u.dim(), v.conductor());
    for ((p, q), k) in a.delta_one() {
        let dp: Tensor2 = a.coproduct(*p).iter().map(|t| ((t.j, t.k), t.value.clone())).collect();
        e3 = e3.add(&act2(v, w, &dp).kron(u.rho(*q)).scale(k));
    }
    let lhs = [c(v, w).kron(&iu), iw.kron(&c(v, u)), c(w, u).kron(&iv)]
        .iter()
        .fold(e3.clone(), |acc, m| mat_mul(m, &acc));
    let rhs = [iv.kron(&c(w, u)), c(v, u).kron(&iw), iu.kron(&c(v, w))]
        .iter()
        .fold(e3, |acc, m| mat_mul(m, &acc));
    lhs == rhs
}

/// `r_V ∘ c_{1,V} = l_V` as maps `1 ⊠ V → V`.
pub fn unit_compatible(a: &WeakHopfAlgebra, r: &Tensor2, v: &WhaModule) -> bool {
    let one = tensor_unit(a);
    mat_mul(&right_unitor(a, v), &braiding_from_r(a, r, &one, v)) == left_unitor(a, v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingReport {
    pub passed: bool,
    pub module_map: bool,
    pub invertible: bool,
    pub natural: bool,
    pub braid_relation: bool,
    pub unit_compatible: bool,
}

/// Checks that `c_{V,W}` is an invertible module map, natural against every
/// basis endomorphism of `V` and of `W`, and satisfies the braid relation on
/// `(V, W, V)`, and that `c_{1,V}` is the unitor composite.
pub fn check_braiding(a: &WeakHopfAlgebra, r: &Tensor2, v: &WhaModule, w: &WhaModule) -> BraidingReport {
    let vw = tensor_product(a, v, w);
    let wv = tensor_product(a, w, v);
    let c = braiding_from_r(a, r, v, w);
    let module_map = is_module_map(a, &vw.module, &wv.module, &c);
    let invertible = vw.module.dim() == wv.module.dim() && linalg::rank(&c) == vw.module.dim();
    let natural_v = intertwiner_space(a, v, v).iter().all(|t| {
        mat_mul(&c, &tensor_maps(&vw, &vw, t, &identity(w))) == mat_mul(&tensor_maps(&wv, &wv, &identity(w), t), &c)
    });
    let natural_w = intertwiner_space(a, w, w).iter().all(|t| {
        mat_mul(&c, &tensor_maps(&vw, &vw, &identity(v), t)) == mat_mul(&tensor_maps(&wv, &wv, t, &identity(v)), &c)
    });
    let braid = braid_relation(a, r, v, w, v);
    let unit = unit_compatible(a, r, v);
    BraidingReport {
        passed: module_map && invertible && natural_v && natural_w && braid && unit,
        unit_compatible: unit,
        module_map,
        invertible,
        natural: natural_v && natural_w,
        braid_relation: braid,
    }
}

/// Recovers `τ i_{A,A} c_{A,A} r_{A,A}(1 ⊗ 1)` on the regular module and
/// compares it with `R`. That composite is linear in `R`, so the braiding is
/// also required to be compatible with the unit on the regular module.
pub fn reduced_r_roundtrip(a: &WeakHopfAlgebra, r: &Tensor2) -> bool {
    let d = a.dim();
    let reg = regular_module(a);
    let (_, ret, sec) = retract(a, &reg, &reg);
    let c = mat_mul(&mat_mul(&ret, &raw_braiding(r, &reg, &reg)), &sec);
    let mut one = Accumulator::new();
    for (i, x) in a.unit().iter() {
        for (j, y) in a.unit().iter() {
            one.add(i * d + j, &(x * y));
        }
    }
    let one: SparseVec = one.into_vec();
    let reduced = c.mul_vec(&ret.mul_vec(&one));
    let full = sec.mul_vec(&reduced);
    let mut back = Accumulator::new();
    for (k, v) in full.iter() {
        back.add((k % d, k / d), v);
    }
    let mut expected = Accumulator::new();
    for (k, v) in r {
        expected.add(*k, v);
    }
    back.into_sorted() == expected.into_sorted() && unit_compatible(a, r, &reg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_a_g_omega;
    use crate::groups::standard_cocycle;

    #[test]
    fn roundtrip_a_z2() {
        let (a, r) = build_a_g_omega(&standard_cocycle(2, 1).unwrap()).unwrap();
        assert!(reduced_r_roundtrip(&a, &r.r));
        let scaled: Tensor2 = r.r.iter().map(|(k, v)| (*k, v * &Cyclotomic::from_int(2, 2))).collect();
        assert!(!reduced_r_roundtrip(&a, &scaled));
    }

    #[test]
    fn roundtrip_a_z3() {
        let (a, r) = build_a_g_omega(&standard_cocycle(3, 1).unwrap()).unwrap();
        assert!(reduced_r_roundtrip(&a, &r.r));
        assert!(!reduced_r_roundtrip(&a, &crate::wha::RMatrixCandidate::new(r.r.clone()).flipped().r));
    }

    #[test]
    fn braiding_on_regular_a_z2() {
        let (a, r) = build_a_g_omega(&standard_cocycle(2, 0).unwrap()).unwrap();
        let v = regular_module(&a);
        let rep = check_braiding(&a, &r.r, &v, &v);
        assert!(rep.passed, "{rep:?}");
    }
}
