//! The pairing between A_C^C and A_C^{C^rev} and its copairing.

use serde::{Deserialize, Serialize};

use crate::builders::{build_a_m_c, BasisLabel};
use crate::exactmath::{linalg, Accumulator, Cyclotomic, SparseMatrix, SparseVec};
use crate::skeleton::{left_regular_module, pointed_data, regular_right_module, Chain, SkeletalCategory};
use crate::tube::words::Words;
use crate::wha::{Tensor2, WeakHopfAlgebra};

use super::DoubleError;

/// The four compatibility laws of a pairing `⟨,⟩: B ⊗ A -> k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingLaw {
    /// `⟨b, a₁⟩⟨b', a₂⟩ = ⟨bb', a⟩`
    Multiplicative,
    /// `⟨1_B, a⟩ = ε_A(a)`
    UnitB,
    /// `⟨b₁, a⟩⟨b₂, a'⟩ = ⟨b, a'a⟩`
    Comultiplicative,
    /// `⟨b, 1_A⟩ = ε_B(b)`
    UnitA,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingReport {
    pub passed: bool,
    pub checked: usize,
    pub rank: usize,
    pub dim: usize,
    /// The first failed law with the basis indices involved.
    pub violation: Option<(PairingLaw, Vec<usize>)>,
}

/// A bilinear form between two weak Hopf algebras, stored as the matrix
/// `⟨b_i, a_j⟩` with rows indexed by `B` and columns by `A`.
#[derive(Debug, Clone)]
pub struct PairingForm {
    b: WeakHopfAlgebra,
    a: WeakHopfAlgebra,
    matrix: SparseMatrix,
}

impl PairingForm {
    /// Wraps the data without checking any law.
    pub fn from_parts(b: WeakHopfAlgebra, a: WeakHopfAlgebra, matrix: SparseMatrix) -> Result<Self, DoubleError> {
        if matrix.rows() != b.dim() || matrix.cols() != a.dim() {
            return Err(DoubleError::Shape(format!(
                "pairing matrix is {}x{}, algebras have dimensions {} and {}",
                matrix.rows(),
                matrix.cols(),
                b.dim(),
                a.dim()
            )));
        }
        Ok(PairingForm { b, a, matrix })
    }

    pub fn b(&self) -> &WeakHopfAlgebra {
        &self.b
    }

    pub fn a(&self) -> &WeakHopfAlgebra {
        &self.a
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn conductor(&self) -> u32 {
        self.matrix.conductor()
    }

    /// `⟨b_i, a_j⟩`.
    pub fn value(&self, i: usize, j: usize) -> Cyclotomic {
        self.matrix.get(i, j)
    }

    /// `⟨x, y⟩` for arbitrary elements.
    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> Cyclotomic {
        let row = self.matrix.transpose().mul_vec(x);
        row.dot(y).unwrap_or_else(|| Cyclotomic::zero(self.conductor()))
    }

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.conductor())
    }

    /// Checks the four laws on all basis tuples and computes the rank.
    pub fn verify(&self) -> PairingReport {
        let (b, a) = (&self.b, &self.a);
        let rows = self.matrix.row_vectors();
        let pair_row = |i: usize, v: &SparseVec| rows[i].dot(v).unwrap_or_else(|| self.zero());
        let mut checked = 0;
        let mut violation = None;

        // ⟨b, a₁⟩⟨b', a₂⟩ = ⟨bb', a⟩
        'mult: for j in 0..a.dim() {
            for i in 0..b.dim() {
                for k in 0..b.dim() {
                    checked += 1;
                    let mut lhs = self.zero();
                    for e in a.coproduct(j) {
                        let x = self.value(i, e.j);
                        if x.is_zero() {
                            continue;
                        }
                        lhs += &(&(&x * &self.value(k, e.k)) * &e.value);
                    }
                    let mut rhs = self.zero();
                    for e in b.mul_basis(i, k) {
                        rhs += &(&e.value * &self.value(e.k, j));
                    }
                    if lhs != rhs {
                        violation = Some((PairingLaw::Multiplicative, vec![i, k, j]));
                        break 'mult;
                    }
                }
            }
        }
        if violation.is_none() {
            for j in 0..a.dim() {
                checked += 1;
                let lhs = b.unit().iter().fold(self.zero(), |acc, (i, c)| &acc + &(c * &self.value(*i, j)));
                if lhs != a.counit_basis(j) {
                    violation = Some((PairingLaw::UnitB, vec![j]));
                    break;
                }
            }
        }
        if violation.is_none() {
            // ⟨b₁, a⟩⟨b₂, a'⟩ = ⟨b, a'a⟩
            'comult: for i in 0..b.dim() {
                for j in 0..a.dim() {
                    for k in 0..a.dim() {
                        checked += 1;
                        let mut lhs = self.zero();
                        for e in b.coproduct(i) {
                            let x = self.value(e.j, j);
                            if x.is_zero() {
                                continue;
                            }
                            lhs += &(&(&x * &self.value(e.k, k)) * &e.value);
                        }
                        let prod: SparseVec =
                            SparseVec::from_entries(a.mul_basis(k, j).iter().map(|e| (e.k, e.value.clone())));
                        let rhs = pair_row(i, &prod);
                        if lhs != rhs {
                            violation = Some((PairingLaw::Comultiplicative, vec![i, j, k]));
                            break 'comult;
                        }
                    }
                }
            }
        }
        if violation.is_none() {
            for i in 0..b.dim() {
                checked += 1;
                if pair_row(i, a.unit()) != b.counit_basis(i) {
                    violation = Some((PairingLaw::UnitA, vec![i]));
                    break;
                }
            }
        }
        let rank = linalg::rank(&self.matrix);
        let dim = b.dim().max(a.dim());
        PairingReport {
            passed: violation.is_none() && rank == b.dim() && rank == a.dim(),
            checked,
            rank,
            dim,
            violation,
        }
    }

    /// Checks the laws and nondegeneracy, failing with the first defect.
    pub fn validated(self) -> Result<Self, DoubleError> {
        let rep = self.verify();
        if let Some((law, indices)) = rep.violation {
            return Err(DoubleError::PairingLaw { law, indices });
        }
        if !rep.passed {
            return Err(DoubleError::Degenerate { rank: rep.rank, dim: rep.dim });
        }
        Ok(self)
    }
}

fn tuple(label: &str) -> Result<(usize, usize, usize, usize, usize), DoubleError> {
    match label.parse() {
        Ok(BasisLabel::Tuple { a, y_target, y, x_target, x }) => Ok((a, y_target, y, x_target, x)),
        _ => Err(DoubleError::Shape(format!("unexpected basis label {label}"))),
    }
}

/// Builds `B = A_C^C` and `A = A_C^{C^rev}` from a pointed skeleton and the
/// pairing sending `u₁ ⊗ s₁ ⊗ u₂ ⊗ s₂` to the scalar of
/// `s₁ (1 ⊗ s₂)(u₁ ⊗ 1) u₂ ∈ End(y₂')` when the objects match.
pub fn build_pairing(c: &SkeletalCategory) -> Result<PairingForm, DoubleError> {
    let pd = pointed_data(c).map_err(|_| DoubleError::NotPointed)?;
    let b = build_a_m_c(c, &left_regular_module(c))?;
    let right = regular_right_module(c);
    let a = build_a_m_c(right.category(), &right)?;
    let chain = Chain::new(&pd.omega);
    let words = Words::new(chain);
    let b_tuples: Vec<_> = b.labels().iter().map(|l| tuple(l)).collect::<Result<_, _>>()?;
    let a_tuples: Vec<_> = a.labels().iter().map(|l| tuple(l)).collect::<Result<_, _>>()?;
    let mut triples = Vec::new();
    for (i, &(a1, y1t, y1, x1t, x1)) in b_tuples.iter().enumerate() {
        for (j, &(a2, y2t, y2, x2t, x2)) in a_tuples.iter().enumerate() {
            if !(y2 == y1t && x2 == y1 && x2t == x1 && y2t == x1t) {
                continue;
            }
            // u₂: y₂' -> y₂a₂, u₁: y₁' -> a₁y₁, s₂: x₂a₂ -> x₂', s₁: a₁x₁ -> x₁'
            let f = words.chain_all(&[
                words.basis(&[y2t], &[y2, a2]),
                words.tensor(&words.basis(&[y1t], &[a1, y1]), &words.id(&[a2])),
                words.tensor(&words.id(&[a1]), &words.basis(&[x2, a2], &[x2t])),
                words.basis(&[a1, x1], &[x1t]),
            ]);
            triples.push((i, j, chain.scalar(words.coefficient(&f, &[y2t], &[x1t]))));
        }
    }
    let matrix = SparseMatrix::from_triples(b.dim(), a.dim(), pd.omega.conductor(), triples)?;
    PairingForm::from_parts(b, a, matrix)?.validated()
}

/// The copairing `Σ a_i ⊗ b_i ∈ A ⊗ B`, i.e. the inverse of the pairing
/// matrix, checked against both snake identities.
pub fn copairing(p: &PairingForm) -> Result<Tensor2, DoubleError> {
    let inv = linalg::inverse(p.matrix())?.ok_or(DoubleError::Degenerate {
        rank: linalg::rank(p.matrix()),
        dim: p.matrix().rows(),
    })?;
    // inv is A-by-B: Σ_{k,j} inv[k][j] a_k ⊗ b_j
    let theta: Tensor2 = inv.triples().map(|(k, j, c)| ((k, j), c.clone())).collect();
    if let Some(i) = snake_failure(p, &theta) {
        return Err(DoubleError::Copairing(i));
    }
    Ok(theta)
}

/// The first basis index where `Σ ⟨b, a_i⟩ b_i = b` or `Σ a_i ⟨b_i, a⟩ = a` fails.
pub fn snake_failure(p: &PairingForm, theta: &Tensor2) -> Option<usize> {
    let n = p.conductor();
    for x in 0..p.b().dim() {
        let mut acc = Accumulator::new();
        for ((k, j), c) in theta {
            let v = p.value(x, *k);
            if !v.is_zero() {
                acc.add(*j, &(&v * c));
            }
        }
        if acc.into_vec() != SparseVec::unit(x, n) {
            return Some(x);
        }
    }
    for y in 0..p.a().dim() {
        let mut acc = Accumulator::new();
        for ((k, j), c) in theta {
            let v = p.value(*j, y);
            if !v.is_zero() {
                acc.add(*k, &(c * &v));
            }
        }
        if acc.into_vec() != SparseVec::unit(y, n) {
            return Some(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};
    use crate::skeleton::pointed_skeleton;

    #[test]
    fn z2_trivial_has_full_rank() {
        let c = pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)));
        let p = build_pairing(&c).unwrap();
        let rep = p.verify();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.rank, 8);
    }

    #[test]
    fn unit_of_b_pairs_to_the_counit() {
        let c = pointed_skeleton(&standard_cocycle(3, 1).unwrap());
        let p = build_pairing(&c).unwrap();
        for j in 0..p.a().dim() {
            assert_eq!(p.eval(p.b().unit(), &p.a().basis(j)), p.a().counit_basis(j));
        }
    }

    #[test]
    fn laws_hold_up_to_order_four() {
        for g in FiniteGroup::standard_catalog().into_iter().filter(|g| g.order() <= 4) {
            let rep = build_pairing(&pointed_skeleton(&ThreeCocycle::trivial(&g))).unwrap().verify();
            assert!(rep.passed, "{} {rep:?}", g.name());
        }
        for n in 2..=4 {
            for p in 1..n {
                let rep = build_pairing(&pointed_skeleton(&standard_cocycle(n, p).unwrap())).unwrap().verify();
                assert!(rep.passed, "n={n} p={p} {rep:?}");
            }
        }
    }

    #[test]
    fn copairing_inverts_the_matrix() {
        let c = pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)));
        let p = build_pairing(&c).unwrap();
        let theta = copairing(&p).unwrap();
        assert_eq!(theta.len(), 8);
        let inv = SparseMatrix::from_triples(8, 8, p.conductor(), theta.iter().map(|((k, j), c)| (*k, *j, c.clone())))
            .unwrap();
        assert_eq!(p.matrix().mul(&inv).unwrap(), SparseMatrix::identity(8, p.conductor()));
    }

    #[test]
    fn scaled_pairing_breaks_a_law() {
        let c = pointed_skeleton(&standard_cocycle(2, 1).unwrap());
        let p = build_pairing(&c).unwrap();
        let two = Cyclotomic::from_int(p.conductor(), 2);
        let bad = PairingForm::from_parts(p.b().clone(), p.a().clone(), p.matrix().scale(&two)).unwrap();
        let rep = bad.verify();
        assert!(!rep.passed);
        assert_eq!(rep.violation.unwrap().0, PairingLaw::Multiplicative);
        assert!(matches!(bad.validated(), Err(DoubleError::PairingLaw { .. })));
    }

    #[test]
    fn degenerate_pairing_is_rejected() {
        let c = pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)));
        let p = build_pairing(&c).unwrap();
        let zero = SparseMatrix::zero(8, 8, 1);
        let bad = PairingForm::from_parts(p.b().clone(), p.a().clone(), zero).unwrap();
        assert_eq!(bad.verify().rank, 0);
        assert!(copairing(&bad).is_err());
    }
}
