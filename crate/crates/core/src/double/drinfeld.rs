//! The Drinfeld double `D(A) = B ⊗ A / I` of a paired weak Hopf algebra.

use std::collections::HashMap;

use crate::builders::BasisLabel;
use crate::exactmath::{linalg, Accumulator, Cyclotomic, SparseMatrix, SparseVec};
use crate::wha::{verify_antipode, verify_quasitriangular, verify_weak_bialgebra, RMatrixCandidate, Tensor2, WeakHopfAlgebra};

use super::pairing::{copairing, PairingForm};
use super::DoubleError;

/// `D(A)` on a basis of coset representatives `[b_i ⊗ a_j]`, labelled
/// `p[i|j]`, together with the R-matrix built from the copairing.
#[derive(Debug, Clone)]
pub struct DoubleAlgebra {
    algebra: WeakHopfAlgebra,
    r_matrix: RMatrixCandidate,
    representatives: Vec<(usize, usize)>,
    dims: (usize, usize),
    /// Class of each `b_i ⊗ a_j` (index `i·dim A + j`) in the quotient.
    classes: Vec<SparseVec>,
    /// Reduced row echelon basis of `I` inside `B ⊗ A`.
    ideal: Vec<SparseVec>,
}

impl DoubleAlgebra {
    pub fn algebra(&self) -> &WeakHopfAlgebra {
        &self.algebra
    }

    pub fn r_matrix(&self) -> &RMatrixCandidate {
        &self.r_matrix
    }

    /// The pairs `(i, j)` whose classes form the basis.
    pub fn representatives(&self) -> &[(usize, usize)] {
        &self.representatives
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Dimension of the subspace `I ⊂ B ⊗ A`.
    pub fn ideal_dim(&self) -> usize {
        self.ideal.len()
    }

    pub fn ideal(&self) -> &[SparseVec] {
        &self.ideal
    }

    /// `(dim B, dim A)`.
    pub fn factor_dims(&self) -> (usize, usize) {
        self.dims
    }

    /// The class of an element of `B ⊗ A`, given on the basis `b_i ⊗ a_j`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (c, x) in v.iter() {
            for (k, y) in self.classes[*c].iter() {
                acc.add(*k, &(x * y));
            }
        }
        acc.into_vec()
    }

    pub fn class_of(&self, b: usize, a: usize) -> &SparseVec {
        &self.classes[b * self.dims.1 + a]
    }
}

/// Products, coproducts and counits on `B ⊗ A` before passing to the quotient.
struct Raw<'a> {
    p: &'a PairingForm,
    /// `⟨b_i, S⁻¹(a_j)⟩`.
    twisted: SparseMatrix,
}

impl<'a> Raw<'a> {
    fn new(p: &'a PairingForm) -> Result<Self, DoubleError> {
        let s_inv = p.a().antipode_inverse().ok_or(DoubleError::SingularAntipode)?;
        Ok(Raw { p, twisted: p.matrix().mul(s_inv)? })
    }

    fn index(&self, b: usize, a: usize) -> usize {
        b * self.p.a().dim() + a
    }

    /// `[b'⊗a'][b⊗a] = ⟨b₁, a'₁⟩⟨b₃, S⁻¹(a'₃)⟩ [b'b₂ ⊗ a'₂a]` on basis elements.
    fn mul(&self, (bp, ap): (usize, usize), (b, a): (usize, usize)) -> SparseVec {
        let (bb, aa) = (self.p.b(), self.p.a());
        let mut acc = Accumulator::new();
        let a_legs = aa.delta2_basis(ap);
        for ((b1, b2, b3), c1) in bb.delta2_basis(b) {
            let left = bb.mul_basis(bp, b2);
            if left.is_empty() {
                continue;
            }
            for ((a1, a2, a3), c2) in &a_legs {
                let first = self.p.value(b1, *a1);
                if first.is_zero() {
                    continue;
                }
                let second = self.twisted.get(b3, *a3);
                if second.is_zero() {
                    continue;
                }
                let coeff = &(&(&c1 * c2) * &first) * &second;
                for e in left {
                    for f in aa.mul_basis(*a2, a) {
                        acc.add(self.index(e.k, f.k), &(&(&coeff * &e.value) * &f.value));
                    }
                }
            }
        }
        acc.into_vec()
    }

    /// `Δ[b⊗a] = [b₁⊗a₁] ⊗ [b₂⊗a₂]`.
    fn delta(&self, (b, a): (usize, usize)) -> Tensor2 {
        let mut acc = Accumulator::new();
        for e in self.p.b().coproduct(b) {
            for f in self.p.a().coproduct(a) {
                acc.add((self.index(e.j, f.j), self.index(e.k, f.k)), &(&e.value * &f.value));
            }
        }
        acc.into_sorted()
    }

    /// `ε[b⊗a] = ⟨b, ε^rr(a)⟩`.
    fn counit(&self, (b, a): (usize, usize)) -> Cyclotomic {
        self.p.eval(&self.p.b().basis(b), &self.p.a().eps_rr(&self.p.a().basis(a)))
    }
}

fn rref_rows(vectors: Vec<SparseVec>, cols: usize, conductor: u32) -> Vec<SparseVec> {
    linalg::rref(&SparseMatrix::from_rows(cols, conductor, vectors)).rows
}

/// The spanning set of `I`: `b ⊗ xa - b⟨1₍₁₎, x⟩1₍₂₎ ⊗ a` for `x ∈ A^l` and
/// `b ⊗ ya - b1₍₁₎⟨1₍₂₎, y⟩ ⊗ a` for `y ∈ A^r`.
fn ideal_generators(raw: &Raw) -> Vec<SparseVec> {
    let (bb, aa) = (raw.p.b(), raw.p.a());
    let n = raw.p.conductor();
    let cols = bb.dim() * aa.dim();
    let target = rref_rows((0..aa.dim()).map(|j| aa.eps_lr(&aa.basis(j))).collect(), aa.dim(), n);
    let source = rref_rows((0..aa.dim()).map(|j| aa.eps_source(&aa.basis(j))).collect(), aa.dim(), n);
    let one = bb.delta_one();
    let minus = Cyclotomic::from_int(n, -1);
    // ⟨1₍₁₎, x⟩1₍₂₎ and 1₍₁₎⟨1₍₂₎, y⟩ as elements of B
    let left_part = |x: &SparseVec| {
        let mut acc = Accumulator::new();
        for ((i, j), c) in one {
            let v = raw.p.eval(&bb.basis(*i), x);
            if !v.is_zero() {
                acc.add(*j, &(c * &v));
            }
        }
        acc.into_vec()
    };
    let right_part = |y: &SparseVec| {
        let mut acc = Accumulator::new();
        for ((i, j), c) in one {
            let v = raw.p.eval(&bb.basis(*j), y);
            if !v.is_zero() {
                acc.add(*i, &(c * &v));
            }
        }
        acc.into_vec()
    };
    let relations: Vec<(SparseVec, SparseVec)> = target
        .iter()
        .map(|x| (x.clone(), left_part(x)))
        .chain(source.iter().map(|y| (y.clone(), right_part(y))))
        .collect();
    let mut gens = Vec::with_capacity(cols * relations.len());
    for b in 0..bb.dim() {
        for a in 0..aa.dim() {
            let ea = aa.basis(a);
            for (x, image) in &relations {
                let mut acc = Accumulator::new();
                for (k, c) in aa.mul(x, &ea).iter() {
                    acc.add(raw.index(b, *k), c);
                }
                for (k, c) in bb.mul(&bb.basis(b), image).iter() {
                    acc.add(raw.index(*k, a), &(c * &minus));
                }
                let v = acc.into_vec();
                if !v.is_empty() {
                    gens.push(v);
                }
            }
        }
    }
    gens
}

struct Quotient {
    representatives: Vec<usize>,
    classes: Vec<SparseVec>,
    ideal: Vec<SparseVec>,
}

/// Coset representatives are the non-pivot columns of the reduced row
/// echelon form of `I`, in increasing order.
fn quotient(gens: Vec<SparseVec>, cols: usize, conductor: u32) -> Quotient {
    let rr = linalg::rref(&SparseMatrix::from_rows(cols, conductor, gens));
    let representatives = rr.free_columns();
    let position: HashMap<usize, usize> = representatives.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut classes: Vec<SparseVec> = (0..cols)
        .map(|c| position.get(&c).map(|&k| SparseVec::unit(k, conductor)).unwrap_or_default())
        .collect();
    let minus = Cyclotomic::from_int(conductor, -1);
    for (row, &p) in rr.rows.iter().zip(&rr.pivots) {
        classes[p] = SparseVec::from_entries(
            row.iter().filter(|(c, _)| *c != p).map(|(c, v)| (position[c], v * &minus)),
        );
    }
    Quotient { representatives, classes, ideal: rr.rows }
}

/// Assembles `D(A)` with a zero antipode; the antipode is solved afterwards.
fn assemble(p: &PairingForm) -> Result<DoubleAlgebra, DoubleError> {
    let raw = Raw::new(p)?;
    let (db, da) = (p.b().dim(), p.a().dim());
    let n = p.conductor();
    let q = quotient(ideal_generators(&raw), db * da, n);
    let reps: Vec<(usize, usize)> = q.representatives.iter().map(|&c| (c / da, c % da)).collect();
    let mut dbl = DoubleAlgebra {
        algebra: WeakHopfAlgebra::from_parts(vec![], n, [], [], [], [], [])?,
        r_matrix: RMatrixCandidate::new(vec![]),
        representatives: reps.clone(),
        dims: (db, da),
        classes: q.classes,
        ideal: q.ideal,
    };

    let mut mu = Vec::new();
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            for (k, c) in dbl.reduce(&raw.mul(x, y)).iter() {
                mu.push((i, j, *k, c.clone()));
            }
        }
    }
    let mut delta = Vec::new();
    for (i, &x) in reps.iter().enumerate() {
        let mut acc = Accumulator::new();
        for ((l, r), c) in raw.delta(x) {
            for (k1, v1) in dbl.classes[l].iter() {
                for (k2, v2) in dbl.classes[r].iter() {
                    acc.add((*k1, *k2), &(&(&c * v1) * v2));
                }
            }
        }
        for ((k1, k2), c) in acc.into_sorted() {
            delta.push((i, k1, k2, c));
        }
    }
    let counit: Vec<_> = reps.iter().enumerate().map(|(i, &x)| (i, raw.counit(x))).filter(|(_, c)| !c.is_zero()).collect();
    let mut unit_raw = Accumulator::new();
    for (i, c) in p.b().unit().iter() {
        for (j, v) in p.a().unit().iter() {
            unit_raw.add(raw.index(*i, *j), &(c * v));
        }
    }
    let unit: Vec<_> = dbl.reduce(&unit_raw.into_vec()).entries().to_vec();
    let labels = reps.iter().map(|&(b, a)| BasisLabel::Pair(b, a).to_string()).collect();
    dbl.algebra = WeakHopfAlgebra::from_parts(labels, n, mu, unit, delta, counit, [])?;

    // R = Σ [1_B ⊗ a_k] ⊗ [b_j ⊗ 1_A] over the copairing Σ a_k ⊗ b_j
    let theta = copairing(p)?;
    let mut r = Accumulator::new();
    for ((k, j), c) in &theta {
        let mut left = Accumulator::new();
        for (u, v) in p.b().unit().iter() {
            left.add(raw.index(*u, *k), v);
        }
        let mut right = Accumulator::new();
        for (u, v) in p.a().unit().iter() {
            right.add(raw.index(*j, *u), v);
        }
        let (left, right) = (dbl.reduce(&left.into_vec()), dbl.reduce(&right.into_vec()));
        for (k1, v1) in left.iter() {
            for (k2, v2) in right.iter() {
                r.add((*k1, *k2), &(&(c * v1) * v2));
            }
        }
    }
    dbl.r_matrix = RMatrixCandidate::new(r.into_sorted());
    Ok(dbl)
}

/// The antipode identities as a linear system in the matrix of `S`:
/// `x₁S(x₂) = ε(1₁x)1₂`, `S(x₁)x₂ = 1₁ε(x1₂)`, and `S(x₁)x₂S(x₃) = S(x)` in the form
/// `S(x₁)ε^l(x₂) = S(x)`, equivalent given the first. The unknown `S_{k,j}`
/// sits in column `j·d + k`.
fn antipode_system(a: &WeakHopfAlgebra) -> Result<(SparseMatrix, SparseVec), DoubleError> {
    let d = a.dim();
    let mut rows: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut row_of = |key| {
        let len = rows.len();
        *rows.entry(key).or_insert(len)
    };
    let eps_target: Vec<SparseVec> = (0..d).map(|j| a.eps_lr(&a.basis(j))).collect();
    let minus = Cyclotomic::from_int(a.conductor(), -1);
    let mut triples = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..d {
        for e in a.coproduct(x) {
            for k in 0..d {
                for t in a.mul_basis(e.j, k) {
                    triples.push((row_of((0, x, t.k)), e.k * d + k, &e.value * &t.value));
                }
                for t in a.mul_basis(k, e.k) {
                    triples.push((row_of((1, x, t.k)), e.j * d + k, &e.value * &t.value));
                }
                for (t, c) in a.mul(&a.basis(k), &eps_target[e.k]).iter() {
                    triples.push((row_of((2, x, *t)), e.j * d + k, &e.value * c));
                }
            }
        }
        for t in 0..d {
            triples.push((row_of((2, x, t)), x * d + t, minus.clone()));
        }
        let bx = a.basis(x);
        for (t, c) in a.eps_lr(&bx).iter() {
            rhs.push((row_of((0, x, *t)), c.clone()));
        }
        for (t, c) in a.eps_source(&bx).iter() {
            rhs.push((row_of((1, x, *t)), c.clone()));
        }
    }
    let m = SparseMatrix::from_triples(rows.len(), d * d, a.conductor(), triples)?;
    let mut b = Accumulator::new();
    for (i, c) in rhs {
        b.add(i, &c);
    }
    Ok((m, b.into_vec()))
}

/// Solves for the antipode and checks it against the full antipode suite.
fn solve_antipode(a: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra, DoubleError> {
    let d = a.dim();
    let (m, b) = antipode_system(a)?;
    let sol = linalg::solve_sparse(&m, &b).ok_or(DoubleError::NoAntipode)?;
    let s = SparseMatrix::from_triples(d, d, a.conductor(), sol.iter().map(|(col, c)| (col % d, col / d, c.clone())))?;
    let out = a.with_antipode(s)?;
    let rep = verify_antipode(&out);
    match rep.violation {
        None => Ok(out),
        Some(v) => Err(DoubleError::Verification { suite: "antipode", detail: format!("{:?} at {:?}", v.law, v.indices) }),
    }
}

/// Builds `D(A)` from a verified pairing and checks it against the weak
/// bialgebra, antipode and quasi-triangular suites.
pub fn build_drinfeld_double(p: &PairingForm) -> Result<DoubleAlgebra, DoubleError> {
    let p = p.clone().validated()?;
    let mut dbl = assemble(&p)?;
    let (target, source) = base_dims(p.a());
    let expected = p.b().dim() * p.a().dim() / (target * source);
    if dbl.dim() != expected {
        return Err(DoubleError::QuotientDim { expected, found: dbl.dim() });
    }
    let rep = verify_weak_bialgebra(&dbl.algebra);
    if let Some(v) = rep.violation {
        return Err(DoubleError::Verification { suite: "weak bialgebra", detail: format!("{:?} at {:?}", v.law, v.indices) });
    }
    dbl.algebra = solve_antipode(&dbl.algebra)?;
    let rep = verify_quasitriangular(&dbl.algebra, &dbl.r_matrix);
    if let Some(v) = rep.violation {
        return Err(DoubleError::Verification { suite: "quasi-triangular", detail: format!("{:?} at {:?}", v.law, v.indices) });
    }
    Ok(dbl)
}

/// `(dim A^l, dim A^r)`, the number of independent relations per `b ⊗ a`.
fn base_dims(a: &WeakHopfAlgebra) -> (usize, usize) {
    let rank = |f: &dyn Fn(&SparseVec) -> SparseVec| {
        let images = (0..a.dim()).map(|j| f(&a.basis(j))).collect();
        linalg::rank(&SparseMatrix::from_rows(a.dim(), a.conductor(), images))
    };
    (rank(&|x| a.eps_lr(x)), rank(&|x| a.eps_source(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::build_pairing;
    use crate::groups::{FiniteGroup, ThreeCocycle};
    use crate::skeleton::pointed_skeleton;

    fn z2() -> PairingForm {
        build_pairing(&pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)))).unwrap()
    }

    #[test]
    fn quotient_of_z2_has_dimension_sixteen() {
        let dbl = assemble(&z2()).unwrap();
        assert_eq!(dbl.dim(), 16);
        assert_eq!(dbl.ideal_dim(), 64 - 16);
    }

    #[test]
    fn counit_of_unit_counts_simples() {
        // ε(1) = |G| here, as for the closed-form A_G^ω
        let dbl = assemble(&z2()).unwrap();
        let a = dbl.algebra();
        let eps = a.counit_of(a.unit());
        assert_eq!(eps, Cyclotomic::from_int(a.conductor(), 2));
        let (closed, _) = crate::builders::build_a_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(eps, closed.counit_of(closed.unit()));
    }

    #[test]
    fn antipode_is_determined_by_the_linear_identities() {
        let dbl = assemble(&z2()).unwrap();
        let (m, _) = antipode_system(dbl.algebra()).unwrap();
        assert_eq!(linalg::nullspace_dim(&m), 0);
    }

    #[test]
    fn z2_double_passes() {
        let dbl = build_drinfeld_double(&z2()).unwrap();
        assert_eq!(dbl.dim(), 16);
        assert!(verify_antipode(dbl.algebra()).passed);
    }
}
