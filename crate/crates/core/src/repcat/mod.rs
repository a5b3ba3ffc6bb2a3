//! Finite-dimensional modules over a weak Hopf algebra, their tensor
//! products, unit, duals, coherence maps and braidings.
//!
//! A module is stored as one matrix per basis element of the algebra; the
//! algebra itself is passed alongside. Vectors of `V ⊗ W` use index
//! `v · dim W + w`.

mod braiding;
mod coherence;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{linalg, Cyclotomic, ExactError, SparseMatrix, SparseVec};
use crate::groups::ThreeCocycle;
use crate::wha::WeakHopfAlgebra;

pub use braiding::{braid_relation, braiding_from_r, check_braiding, reduced_r_roundtrip, unit_compatible, BraidingReport};
pub use coherence::{associator, coherence_check, left_unitor, pentagon_holds, right_unitor, tensor_maps, triangle_holds, CoherenceReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("module has {found} action matrices, algebra has dimension {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("action matrix {0} is not square of the module dimension")]
    Shape(usize),
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A left module: `rho[i]` is the action of the `i`-th basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhaModule {
    dim: usize,
    conductor: u32,
    rho: Vec<SparseMatrix>,
}

/// External form; `action` holds `[i, v, w, c]` meaning `b_i . e_v ∋ c e_w`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub dim: usize,
    pub conductor: u32,
    pub action: Vec<(usize, usize, usize, Cyclotomic)>,
}

impl WhaModule {
    pub fn new(dim: usize, conductor: u32, rho: Vec<SparseMatrix>) -> Result<Self, RepError> {
        if let Some(i) = rho.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(RepError::Shape(i));
        }
        Ok(WhaModule { dim, conductor, rho })
    }

    /// Builds from `(i, v, w, c)`: basis element `i` sends `e_v` to `c e_w`
    /// (summed over repeats).
    pub fn from_action(
        algebra_dim: usize,
        dim: usize,
        conductor: u32,
        action: impl IntoIterator<Item = (usize, usize, usize, Cyclotomic)>,
    ) -> Result<Self, RepError> {
        let mut per: Vec<Vec<(usize, usize, Cyclotomic)>> = vec![Vec::new(); algebra_dim];
        for (i, v, w, c) in action {
            if i >= algebra_dim {
                return Err(RepError::Dimension { expected: algebra_dim, found: i + 1 });
            }
            per[i].push((w, v, c));
        }
        let rho = per
            .into_iter()
            .map(|t| SparseMatrix::from_triples(dim, dim, conductor, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WhaModule { dim, conductor, rho })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Action matrix of the `i`-th basis element.
    pub fn rho(&self, i: usize) -> &SparseMatrix {
        &self.rho[i]
    }

    /// Action matrix of an arbitrary element.
    pub fn act(&self, x: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim, self.dim, self.conductor);
        for (i, c) in x.iter() {
            m = m.add(&self.rho[*i].scale(c));
        }
        m
    }

    pub fn to_json(&self) -> ModuleJson {
        let mut action = Vec::new();
        for (i, m) in self.rho.iter().enumerate() {
            for (w, v, c) in m.triples() {
                action.push((i, v, w, c.clone()));
            }
        }
        action.sort_by_key(|a| (a.0, a.1, a.2));
        ModuleJson {
            algebra: None,
            dim: self.dim,
            conductor: self.conductor,
            action,
        }
    }

    pub fn from_json(algebra_dim: usize, js: &ModuleJson) -> Result<Self, RepError> {
        let n = js.conductor;
        let action = js
            .action
            .iter()
            .map(|(i, v, w, c)| Ok((*i, *v, *w, c.embed(n)?)))
            .collect::<Result<Vec<_>, ExactError>>()?;
        WhaModule::from_action(algebra_dim, js.dim, n, action)
    }
}

/// First failure found by [`validate_module`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModuleViolation {
    /// `(xy).v ≠ x.(y.v)` for basis `x`, `y`.
    Product { x: usize, y: usize },
    /// The unit does not act as the identity.
    Unit,
    /// The number of action matrices differs from the algebra dimension.
    Size { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub passed: bool,
    pub checked: usize,
    pub violation: Option<ModuleViolation>,
}

/// Checks `(xy).v = x.(y.v)` on all basis pairs and `η(1).v = v`.
pub fn validate_module(a: &WeakHopfAlgebra, v: &WhaModule) -> ModuleReport {
    let fail = |violation, checked| ModuleReport { passed: false, checked, violation: Some(violation) };
    if v.rho.len() != a.dim() {
        return fail(ModuleViolation::Size { expected: a.dim(), found: v.rho.len() }, 0);
    }
    if v.act(a.unit()) != SparseMatrix::identity(v.dim, v.conductor) {
        return fail(ModuleViolation::Unit, 1);
    }
    let d = a.dim();
    let mut checked = 1;
    for x in 0..d {
        for y in 0..d {
            checked += 1;
            let lhs = v.rho[x].mul(&v.rho[y]).expect("square");
            let mut rhs = SparseMatrix::zero(v.dim, v.dim, v.conductor);
            for e in a.mul_basis(x, y) {
                rhs = rhs.add(&v.rho[e.k].scale(&e.value));
            }
            if lhs != rhs {
                return fail(ModuleViolation::Product { x, y }, checked);
            }
        }
    }
    ModuleReport { passed: true, checked, violation: None }
}

/// The algebra acting on itself by left multiplication.
pub fn regular_module(a: &WeakHopfAlgebra) -> WhaModule {
    let d = a.dim();
    let action = (0..d).flat_map(|i| a.mu().slice(i).iter().map(move |e| (i, e.j, e.k, e.value.clone())));
    WhaModule::from_action(d, d, a.conductor(), action).expect("indices in range")
}

/// The module K(g) of B_G^ω on basis `h_x`:
/// `f[a|y|x] . h_x = δ_{y,gx} ω(g,x,a) h_{xa}`.
pub fn k_module(omega: &ThreeCocycle, g: usize) -> WhaModule {
    let grp = omega.group();
    let n = grp.order();
    let cond = omega.conductor();
    let mut action = Vec::with_capacity(n * n);
    for a in grp.elements() {
        for x in grp.elements() {
            let y = grp.mul(g, x);
            let i = (a * n + y) * n + x;
            action.push((i, x, grp.mul(x, a), Cyclotomic::root(cond, omega.exponent(g, x, a) as i64)));
        }
    }
    WhaModule::from_action(n * n * n, n, cond, action).expect("indices in range")
}

/// `V ⊠ W` realized as a retract of `V ⊗ W`, with `r ∘ i = id` and
/// `i ∘ r = e_{V,W}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorProductResult {
    pub module: WhaModule,
    pub r: SparseMatrix,
    pub i: SparseMatrix,
    pub idempotent: SparseMatrix,
}

/// The action of a two-leg tensor on `V ⊗ W`.
pub(crate) fn act2(v: &WhaModule, w: &WhaModule, t: &[((usize, usize), Cyclotomic)]) -> SparseMatrix {
    let mut m = SparseMatrix::zero(v.dim * w.dim, v.dim * w.dim, v.conductor);
    for ((p, q), c) in t {
        m = m.add(&v.rho[*p].kron(&w.rho[*q]).scale(c));
    }
    m
}

pub(crate) fn mat_mul(x: &SparseMatrix, y: &SparseMatrix) -> SparseMatrix {
    x.mul(y).expect("composable maps")
}

/// `(e_{V,W}, r, i)` without the induced action.
pub(crate) fn retract(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule) -> (SparseMatrix, SparseMatrix, SparseMatrix) {
    let e = act2(v, w, a.delta_one());
    let (i, r) = linalg::rank_factorization(&e);
    (e, r, i)
}

pub fn tensor_product(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule) -> TensorProductResult {
    let (e, r, i) = retract(a, v, w);
    let rho = (0..a.dim())
        .map(|x| {
            let dx: Vec<_> = a.coproduct(x).iter().map(|t| ((t.j, t.k), t.value.clone())).collect();
            mat_mul(&mat_mul(&r, &act2(v, w, &dx)), &i)
        })
        .collect();
    TensorProductResult {
        module: WhaModule { dim: i.cols(), conductor: v.conductor, rho },
        r,
        i,
        idempotent: e,
    }
}

/// A section and retraction of `ε^lr`, whose image is the base algebra A^l.
pub fn unit_embedding(a: &WeakHopfAlgebra) -> (SparseMatrix, SparseMatrix) {
    let cols: Vec<SparseVec> = (0..a.dim()).map(|i| a.eps_lr(&a.basis(i))).collect();
    let m = SparseMatrix::from_columns(a.dim(), a.conductor(), &cols);
    linalg::rank_factorization(&m)
}

/// The tensor unit: A^l with `x . y = ε^lr(xy)`.
pub fn tensor_unit(a: &WeakHopfAlgebra) -> WhaModule {
    let (section, retraction) = unit_embedding(a);
    let basis = section.columns();
    let k = basis.len();
    let rho = (0..a.dim())
        .map(|x| {
            let cols: Vec<SparseVec> = basis
                .iter()
                .map(|y| retraction.mul_vec(&a.eps_lr(&a.mul(&a.basis(x), y))))
                .collect();
            SparseMatrix::from_columns(k, a.conductor(), &cols)
        })
        .collect();
    WhaModule { dim: k, conductor: a.conductor(), rho }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// `V*` with `x.φ = φ(S(x).−)` (left) or `φ(S⁻¹(x).−)` (right).
pub fn dual_module(a: &WeakHopfAlgebra, v: &WhaModule, side: Side) -> Result<WhaModule, RepError> {
    let s = match side {
        Side::Left => a.antipode().clone(),
        Side::Right => a.antipode_inverse().ok_or(RepError::SingularAntipode)?.clone(),
    };
    let cols = s.columns();
    let rho = (0..a.dim()).map(|x| v.act(&cols[x]).transpose()).collect();
    Ok(WhaModule { dim: v.dim, conductor: v.conductor, rho })
}

/// Whether `t ρ_V(x) = ρ_W(x) t` for every basis element.
pub fn is_module_map(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule, t: &SparseMatrix) -> bool {
    (0..a.dim()).all(|x| mat_mul(t, &v.rho[x]) == mat_mul(&w.rho[x], t))
}

/// A basis of `Hom_A(V, W)`, as `dim W × dim V` matrices.
pub fn intertwiner_space(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule) -> Vec<SparseMatrix> {
    let (dv, dw) = (v.dim, w.dim);
    let n = v.conductor;
    let unknowns = dw * dv;
    let mut triples = Vec::new();
    let block = dw * dv;
    for x in 0..a.dim() {
        let base = x * block;
        let rv = v.rho[x].columns();
        // row (p, q) of block x: (T ρ_V(x) − ρ_W(x) T)[p, q]
        for p in 0..dw {
            for (q, col) in rv.iter().enumerate() {
                for (k, c) in col.iter() {
                    triples.push((base + p * dv + q, p * dv + k, c.clone()));
                }
            }
            for (k, c) in w.rho[x].row(p).iter() {
                for q in 0..dv {
                    triples.push((base + p * dv + q, k * dv + q, -c));
                }
            }
        }
    }
    let row = a.dim() * block;
    let m = SparseMatrix::from_triples(row, unknowns, n, triples).expect("indices in range");
    linalg::nullspace(&m)
        .into_iter()
        .map(|s| SparseMatrix::from_triples(dw, dv, n, s.iter().map(|(u, c)| (u / dv, u % dv, c.clone()))).expect("in range"))
        .collect()
}

fn combination(basis: &[SparseMatrix], coeffs: &[i64], n: u32) -> SparseMatrix {
    let mut t = SparseMatrix::zero(basis[0].rows(), basis[0].cols(), n);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            t = t.add(&b.scale(&Cyclotomic::from_int(n, c)));
        }
    }
    t
}

/// Largest intertwiner space searched exhaustively after random trials fail.
const EXHAUSTIVE_LIMIT: usize = 3;

/// Decides `V ≅ W` by looking for an invertible intertwiner: random integer
/// combinations first, then every combination with coefficients in −2..=2
/// when the space is small.
pub fn modules_isomorphic_seeded(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule, seed: u64) -> bool {
    if v.dim != w.dim {
        return false;
    }
    if v.dim == 0 {
        return true;
    }
    let basis = intertwiner_space(a, v, w);
    if basis.is_empty() {
        return false;
    }
    let n = v.conductor;
    let invertible = |t: &SparseMatrix| linalg::rank(t) == v.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-50..=50)).collect();
        if invertible(&combination(&basis, &coeffs, n)) {
            return true;
        }
    }
    if basis.len() > EXHAUSTIVE_LIMIT {
        return false;
    }
    let k = basis.len();
    let total = 5usize.pow(k as u32);
    (0..total).any(|mut code| {
        let coeffs: Vec<i64> = (0..k)
            .map(|_| {
                let c = (code % 5) as i64 - 2;
                code /= 5;
                c
            })
            .collect();
        invertible(&combination(&basis, &coeffs, n))
    })
}

pub fn modules_isomorphic(a: &WeakHopfAlgebra, v: &WhaModule, w: &WhaModule) -> bool {
    modules_isomorphic_seeded(a, v, w, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_a_g_omega, build_b_g_omega};
    use crate::groups::{standard_cocycle, FiniteGroup};

    #[test]
    fn k_modules_are_modules() {
        let w = standard_cocycle(3, 1).unwrap();
        let b = build_b_g_omega(&w).unwrap();
        for g in 0..3 {
            assert!(validate_module(&b, &k_module(&w, g)).passed);
        }
    }

    #[test]
    fn dropped_factor_is_caught() {
        let w = standard_cocycle(2, 1).unwrap();
        let b = build_b_g_omega(&w).unwrap();
        // K(1) with ω(g,x,a) replaced by 1
        let action = (0..2).flat_map(|a| (0..2).map(move |x| ((a * 2 + (1 + x) % 2) * 2 + x, x, (x + a) % 2, Cyclotomic::one(2))));
        let v = WhaModule::from_action(8, 2, 2, action).unwrap();
        let rep = validate_module(&b, &v);
        assert!(!rep.passed);
        assert!(matches!(rep.violation, Some(ModuleViolation::Product { .. })));
    }

    #[test]
    fn unit_and_tensor_dimensions() {
        let w = ThreeCocycle::trivial(&FiniteGroup::cyclic(2));
        let b = build_b_g_omega(&w).unwrap();
        let one = tensor_unit(&b);
        assert_eq!(one.dim(), 2);
        assert!(validate_module(&b, &one).passed);
        assert_eq!(one.act(b.unit()), SparseMatrix::identity(2, 1));
        let k = k_module(&w, 1);
        let t = tensor_product(&b, &k, &k);
        assert_eq!(t.module.dim(), 2);
        assert_eq!(mat_mul(&t.idempotent, &t.idempotent), t.idempotent);
        assert_eq!(mat_mul(&t.r, &t.i), SparseMatrix::identity(2, 1));
        assert_eq!(mat_mul(&t.i, &t.r), t.idempotent);
        assert!(validate_module(&b, &t.module).passed);

        let (a, _) = build_a_g_omega(&w).unwrap();
        assert_eq!(tensor_unit(&a).dim(), 2);
    }

    #[test]
    fn fusion_of_k_modules() {
        let w = standard_cocycle(3, 1).unwrap();
        let b = build_b_g_omega(&w).unwrap();
        let g = w.group();
        for x in g.elements() {
            for y in g.elements() {
                let t = tensor_product(&b, &k_module(&w, x), &k_module(&w, y));
                assert!(modules_isomorphic(&b, &t.module, &k_module(&w, g.mul(x, y))));
                if x != y {
                    assert!(intertwiner_space(&b, &k_module(&w, x), &k_module(&w, y)).is_empty());
                }
            }
        }
    }

    #[test]
    fn duals() {
        let w = ThreeCocycle::trivial(&FiniteGroup::cyclic(2));
        let b = build_b_g_omega(&w).unwrap();
        let one = tensor_unit(&b);
        let d = dual_module(&b, &one, Side::Left).unwrap();
        assert!(validate_module(&b, &d).passed);
        assert!(modules_isomorphic(&b, &d, &one));
        let k = k_module(&w, 1);
        let kd = dual_module(&b, &k, Side::Left).unwrap();
        assert_eq!(kd.dim(), 2);
        assert!(modules_isomorphic(&b, &kd, &k_module(&w, 1)));
        let kr = dual_module(&b, &k, Side::Right).unwrap();
        assert!(validate_module(&b, &kr).passed);
    }

    #[test]
    fn json_roundtrip() {
        let w = standard_cocycle(3, 1).unwrap();
        let k = k_module(&w, 2);
        let js = serde_json::to_string(&k.to_json()).unwrap();
        let back = WhaModule::from_json(27, &serde_json::from_str(&js).unwrap()).unwrap();
        assert_eq!(back, k);
    }
}
