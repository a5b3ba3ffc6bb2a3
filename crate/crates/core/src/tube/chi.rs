//! The comparison map from A_C^{C⊠C^rev} to level two of the lifted tower.

use serde::{Deserialize, Serialize};

use crate::builders::{build_a_m_c, BasisLabel};
use crate::exactmath::{linalg, SparseMatrix};
use crate::skeleton::{boxtimes_rev_skeleton, pointed_data, SkeletalCategory};
use crate::wha::WeakHopfAlgebra;

use super::algebra::{root, PlainAlgebra};
use super::tower::{TubeFamily, TubeKind, TubeLabel};
use super::TubeError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiReport {
    pub passed: bool,
    pub unital: bool,
    pub multiplicative: bool,
    pub rank: usize,
    pub dim: usize,
    /// Labels of the first pair of basis elements whose product is not preserved.
    pub failure: Option<(String, String)>,
}

/// The underlying algebra of a weak Hopf algebra.
pub fn underlying_algebra(a: &WeakHopfAlgebra) -> PlainAlgebra {
    PlainAlgebra::new(a.labels().to_vec(), a.mu().clone(), a.unit().clone()).expect("shapes agree")
}

/// The matrix of `χ`, sending `u ⊗ s` for `u: y' -> a⊗y⊗b` and
/// `s: a⊗x⊗b -> x'` to
/// `(1 ⊗ ev_{x'})(1 ⊗ s ⊗ 1)(1 ⊗ coev_{a⊗x} ⊗ 1)(u ⊗ 1)`.
pub fn chi_matrix(fam: &TubeFamily, a: &WeakHopfAlgebra) -> Result<SparseMatrix, TubeError> {
    let grp = fam.omega().group();
    let n = grp.order();
    let words = fam.words();
    let target = fam.basis(2, 2);
    let mut triples = Vec::with_capacity(a.dim());
    for (j, label) in a.labels().iter().enumerate() {
        let Ok(BasisLabel::Tuple { a: pair, y_target, y, x_target, x }) = label.parse() else {
            return Err(TubeError::Shape(format!("unexpected basis label {label}")));
        };
        let (left, right) = (pair / n, pair % n);
        let inv = |g: usize| grp.inv(g);
        let u = words.basis(&[y_target], &[left, y, right]);
        let s = words.basis(&[left, x, right], &[x_target]);
        let head = [left, y, inv(x), inv(left)];
        let f = words.chain_all(&[
            words.tensor(&u, &words.id(&[inv(x_target)])),
            words.tensor_all(&[words.id(&[left, y]), words.coev(&[left, x]), words.id(&[right, inv(x_target)])]),
            words.tensor_all(&[words.id(&head), s, words.id(&[inv(x_target)])]),
            words.tensor(&words.id(&head), &words.ev(&[x_target])),
        ]);
        let l = TubeLabel { w: left, xs: vec![y_target, inv(x_target)], ys: vec![y, inv(x)] };
        let (src, dst) = fam.words_of(&l);
        let e = words.coefficient(&f, &src, &dst);
        let i = target.index(&l).ok_or_else(|| TubeError::Shape(format!("no lifted label for {label}")))?;
        triples.push((i, j, root(fam.conductor(), e)));
    }
    Ok(SparseMatrix::from_triples(target.len(), a.dim(), fam.conductor(), triples)?)
}

/// Builds `A` from the module `C` over `C ⊠ C^rev` and level two of the
/// lifted tower, and checks that `χ` is a unital algebra isomorphism.
pub fn chi_iso(c: &SkeletalCategory) -> Result<(SparseMatrix, ChiReport), TubeError> {
    let pd = pointed_data(c).map_err(|_| TubeError::NotPointed)?;
    let (cat, module) = boxtimes_rev_skeleton(&pd.omega);
    let a = build_a_m_c(&cat, &module)?;
    let fam = TubeFamily::from_cocycle(&pd.omega, TubeKind::Lifted);
    let lifted = fam.algebra(2)?;
    let chi = chi_matrix(&fam, &a)?;
    let source = underlying_algebra(&a);
    Ok((chi.clone(), chi_report(&source, &lifted, &chi)))
}

pub(crate) fn chi_report(source: &PlainAlgebra, target: &PlainAlgebra, chi: &SparseMatrix) -> ChiReport {
    let unital = chi.mul_vec(source.unit()) == *target.unit();
    let failure = source.multiplicativity_failure(target, chi);
    let rank = linalg::rank(chi);
    let dim = target.dim();
    ChiReport {
        passed: unital && failure.is_none() && rank == dim && source.dim() == dim,
        unital,
        multiplicative: failure.is_none(),
        rank,
        dim,
        failure: failure.map(|(i, j)| (source.labels()[i].clone(), source.labels()[j].clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Cyclotomic, SparseMatrix};
    use crate::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};
    use crate::skeleton::pointed_skeleton;

    #[test]
    fn chi_z2_trivial() {
        let c = pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)));
        let (_, rep) = chi_iso(&c).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.rank, 16);
    }

    #[test]
    fn chi_z3_standard() {
        let c = pointed_skeleton(&standard_cocycle(3, 1).unwrap());
        let (_, rep) = chi_iso(&c).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.rank, 81);
    }

    #[test]
    fn rescaled_chi_is_caught() {
        let w = standard_cocycle(2, 1).unwrap();
        let (cat, module) = boxtimes_rev_skeleton(&w);
        let a = build_a_m_c(&cat, &module).unwrap();
        let fam = TubeFamily::from_cocycle(&w, TubeKind::Lifted);
        let chi = chi_matrix(&fam, &a).unwrap();
        // negate the image of one non-unit basis vector
        let j = a.labels().iter().position(|l| l == "m[1|1|0|1|0]").unwrap();
        let flip = SparseMatrix::from_triples(
            a.dim(),
            a.dim(),
            2,
            (0..a.dim()).map(|k| (k, k, if k == j { Cyclotomic::from_int(2, -1) } else { Cyclotomic::one(2) })),
        )
        .unwrap();
        let bad = chi.mul(&flip).unwrap();
        let rep = chi_report(&underlying_algebra(&a), &fam.algebra(2).unwrap(), &bad);
        assert!(!rep.passed);
        assert!(rep.failure.is_some());
    }
}
