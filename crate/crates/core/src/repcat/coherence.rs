//! Associators, unitors and the pentagon and triangle identities.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactmath::{linalg, SparseMatrix};
use crate::wha::WeakHopfAlgebra;

use super::{is_module_map, mat_mul, tensor_product, tensor_unit, unit_embedding, TensorProductResult, WhaModule};

fn identity(v: &WhaModule) -> SparseMatrix {
    SparseMatrix::identity(v.dim(), v.conductor())
}

/// `f ⊠ g = r_dst (f ⊗ g) i_src` for module maps `f`, `g`.
pub fn tensor_maps(src: &TensorProductResult, dst: &TensorProductResult, f: &SparseMatrix, g: &SparseMatrix) -> SparseMatrix {
    mat_mul(&mat_mul(&dst.r, &f.kron(g)), &src.i)
}

/// The canonical map `(V ⊠ W) ⊠ U → V ⊠ (W ⊠ U)` through `V ⊗ W ⊗ U`.
pub fn associator(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule, u: &WhaModule) -> SparseMatrix {
    let vw = tensor_product(a, v, w);
    let vw_u = tensor_product(a, &vw.module, u);
    let wu = tensor_product(a, w, u);
    let v_wu = tensor_product(a, v, &wu.module);
    let embed = mat_mul(&vw.i.kron(&identity(u)), &vw_u.i);
    let retract = mat_mul(&v_wu.r, &identity(v).kron(&wu.r));
    mat_mul(&retract, &embed)
}

/// `l_V : 1 ⊠ V → V`, `y ⊗ v ↦ y.v`.
pub fn left_unitor(a: &WeakHopfAlgebra, v: &WhaModule) -> SparseMatrix {
    let (section, _) = unit_embedding(a);
    let one = tensor_unit(a);
    let t = tensor_product(a, &one, v);
    let k = one.dim();
    let mut m = SparseMatrix::zero(v.dim(), k * v.dim(), v.conductor());
    for (j, y) in section.columns().iter().enumerate() {
        m = m.add(&unit_row(k, j, v.conductor()).kron(&v.act(y)));
    }
    mat_mul(&m, &t.i)
}

/// `r_V : V ⊠ 1 → V`, `v ⊗ y ↦ ε^rr(y).v`.
pub fn right_unitor(a: &WeakHopfAlgebra, v: &WhaModule) -> SparseMatrix {
    let (section, _) = unit_embedding(a);
    let one = tensor_unit(a);
    let t = tensor_product(a, v, &one);
    let k = one.dim();
    let mut m = SparseMatrix::zero(v.dim(), v.dim() * k, v.conductor());
    for (j, y) in section.columns().iter().enumerate() {
        m = m.add(&v.act(&a.eps_rr(y)).kron(&unit_row(k, j, v.conductor())));
    }
    mat_mul(&m, &t.i)
}

fn unit_row(k: usize, j: usize, n: u32) -> SparseMatrix {
    SparseMatrix::from_triples(1, k, n, [(0, j, crate::exactmath::Cyclotomic::one(n))]).expect("in range")
}

/// `(1 ⊠ a_{W,U,X}) a_{V,W⊠U,X} (a_{V,W,U} ⊠ 1) = a_{V,W,U⊠X} a_{V⊠W,U,X}`.
pub fn pentagon_holds(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule, u: &WhaModule, x: &WhaModule) -> bool {
    let tp = |p: &WhaModule, q: &WhaModule| tensor_product(a, p, q);
    let vw = tp(v, w);
    let vw_u = tp(&vw.module, u);
    let wu = tp(w, u);
    let v_wu = tp(v, &wu.module);
    let ux = tp(u, x);
    let wu_x = tp(&wu.module, x);
    let w_ux = tp(w, &ux.module);

    let a1 = associator(a, v, w, u);
    let a1x = tensor_maps(&tp(&vw_u.module, x), &tp(&v_wu.module, x), &a1, &identity(x));
    let a2 = associator(a, v, &wu.module, x);
    let a3 = associator(a, w, u, x);
    let va3 = tensor_maps(&tp(v, &wu_x.module), &tp(v, &w_ux.module), &identity(v), &a3);
    let lhs = mat_mul(&va3, &mat_mul(&a2, &a1x));

    let a4 = associator(a, &vw.module, u, x);
    let a5 = associator(a, v, w, &ux.module);
    let rhs = mat_mul(&a5, &a4);
    lhs == rhs
}

/// `(1 ⊠ l_W) a_{V,1,W} = r_V ⊠ 1` as maps `(V ⊠ 1) ⊠ W → V ⊠ W`.
pub fn triangle_holds(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule) -> bool {
    let one = tensor_unit(a);
    let vw = tensor_product(a, v, w);
    let one_w = tensor_product(a, &one, w);
    let v_one = tensor_product(a, v, &one);
    let lhs = mat_mul(
        &tensor_maps(&tensor_product(a, v, &one_w.module), &vw, &identity(v), &left_unitor(a, w)),
        &associator(a, v, &one, w),
    );
    let rhs = tensor_maps(&tensor_product(a, &v_one.module, w), &vw, &right_unitor(a, v), &identity(w));
    lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub passed: bool,
    pub checked: usize,
    /// Names of the failed instances.
    pub failures: Vec<String>,
}

fn iso_between(a: &WeakHopfAlgebra, src: &WhaModule, dst: &WhaModule, m: &SparseMatrix) -> bool {
    src.dim() == dst.dim() && linalg::rank(m) == src.dim() && is_module_map(a, src, dst, m)
}

/// Checks that the associator of `(V, W, U)` and the unitors of each module
/// are invertible module maps, the triangle identity on `(V, W)` and
/// `(W, U)`, and the pentagon on `(V, W, U, 1)`.
pub fn coherence_check(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule, u: &WhaModule) -> CoherenceReport {
    type Check<'a> = (String, Box<dyn Fn() -> bool + Sync + Send + 'a>);
    let mut checks: Vec<Check> = Vec::new();
    checks.push((
        "associator".into(),
        Box::new(move || {
            let vw = tensor_product(a, v, w);
            let wu = tensor_product(a, w, u);
            let src = tensor_product(a, &vw.module, u).module;
            let dst = tensor_product(a, v, &wu.module).module;
            iso_between(a, &src, &dst, &associator(a, v, w, u))
        }),
    ));
    for (name, m) in [("V", v), ("W", w), ("U", u)] {
        checks.push((
            format!("left unitor {name}"),
            Box::new(move || {
                let src = tensor_product(a, &tensor_unit(a), m).module;
                iso_between(a, &src, m, &left_unitor(a, m))
            }),
        ));
        checks.push((
            format!("right unitor {name}"),
            Box::new(move || {
                let src = tensor_product(a, m, &tensor_unit(a)).module;
                iso_between(a, &src, m, &right_unitor(a, m))
            }),
        ));
    }
    checks.push(("triangle (V, W)".into(), Box::new(move || triangle_holds(a, v, w))));
    checks.push(("triangle (W, U)".into(), Box::new(move || triangle_holds(a, w, u))));
    checks.push(("pentagon (V, W, U, 1)".into(), Box::new(move || pentagon_holds(a, v, w, u, &tensor_unit(a)))));
    let failures: Vec<String> = checks
        .par_iter()
        .filter(|(_, f)| !f())
        .map(|(name, _)| name.clone())
        .collect();
    CoherenceReport {
        passed: failures.is_empty(),
        checked: checks.len(),
        failures,
    }
}
