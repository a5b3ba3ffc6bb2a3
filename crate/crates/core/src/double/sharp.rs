//! The map `♯: A_C^C ⊗ A_C^{C^rev} -> A_C^{C⊠C^rev}` and the isomorphism it
//! induces on the double.

use serde::{Deserialize, Serialize};

use crate::builders::{build_a_m_c, closed_form_r_matrix, BasisLabel};
use crate::exactmath::{linalg, Accumulator, Cyclotomic, SparseMatrix};
use crate::skeleton::{boxtimes_rev_skeleton, pointed_data, Chain, SkeletalCategory};
use crate::tube::underlying_algebra;
use crate::tube::words::Words;
use crate::wha::WeakHopfAlgebra;

use super::drinfeld::{build_drinfeld_double, DoubleAlgebra};
use super::pairing::build_pairing;
use super::DoubleError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpReport {
    pub passed: bool,
    /// `♯` vanishes on `I`.
    pub well_defined: bool,
    pub unital: bool,
    pub multiplicative: bool,
    pub comultiplicative: bool,
    pub bijective: bool,
    /// The copairing R-matrix is carried to the closed-form one.
    pub r_matched: bool,
    pub rank: usize,
    pub dim: usize,
    /// The first failed check, with the labels involved.
    pub failure: Option<String>,
}

fn tuple(label: &str) -> Result<(usize, usize, usize, usize, usize), DoubleError> {
    match label.parse() {
        Ok(BasisLabel::Tuple { a, y_target, y, x_target, x }) => Ok((a, y_target, y, x_target, x)),
        _ => Err(DoubleError::Shape(format!("unexpected basis label {label}"))),
    }
}

/// `♯` on the basis `b_i ⊗ a_j` of `B ⊗ A` (column `i·dim A + j`), sending
/// `u₁ ⊗ s₁ ⊗ u₂ ⊗ s₂` to `(1 ⊗ u₂)u₁ ⊗ s₁(1 ⊗ s₂)` when `y₂' = y₁` and
/// `x₂' = x₁`.
pub fn sharp_matrix(b: &WeakHopfAlgebra, a: &WeakHopfAlgebra, target: &WeakHopfAlgebra, chain: Chain) -> Result<SparseMatrix, DoubleError> {
    let words = Words::new(chain);
    let n = chain.group().order();
    let index = |t: (usize, usize, usize, usize, usize)| {
        let label = BasisLabel::Tuple { a: t.0, y_target: t.1, y: t.2, x_target: t.3, x: t.4 }.to_string();
        target.label_index(&label).ok_or_else(|| DoubleError::Shape(format!("no target label {label}")))
    };
    let a_tuples: Vec<_> = a.labels().iter().map(|l| tuple(l)).collect::<Result<_, _>>()?;
    let mut triples = Vec::new();
    for (i, label) in b.labels().iter().enumerate() {
        let (a1, y1t, y1, x1t, x1) = tuple(label)?;
        for (j, &(a2, y2t, y2, x2t, x2)) in a_tuples.iter().enumerate() {
            if y2t != y1 || x2t != x1 {
                continue;
            }
            let u = words.then(
                &words.basis(&[y1t], &[a1, y1]),
                &words.tensor(&words.id(&[a1]), &words.basis(&[y2t], &[y2, a2])),
            );
            let s = words.then(
                &words.tensor(&words.id(&[a1]), &words.basis(&[x2, a2], &[x2t])),
                &words.basis(&[a1, x1], &[x1t]),
            );
            let e = words.coefficient(&u, &[y1t], &[a1, y2, a2]) + words.coefficient(&s, &[a1, x2, a2], &[x1t]);
            let row = index((a1 * n + a2, y1t, y2, x1t, x2))?;
            triples.push((row, i * a.dim() + j, chain.scalar(e)));
        }
    }
    Ok(SparseMatrix::from_triples(target.dim(), b.dim() * a.dim(), chain.conductor(), triples)?)
}

/// Builds the pairing, the double and A_C^{C⊠C^rev}, and checks that `♯`
/// descends to an isomorphism of weak bialgebras carrying the copairing
/// R-matrix to the closed-form one.
pub fn sharp_iso(c: &SkeletalCategory) -> Result<(SparseMatrix, SharpReport), DoubleError> {
    let pd = pointed_data(c).map_err(|_| DoubleError::NotPointed)?;
    let pairing = build_pairing(c)?;
    let dbl = build_drinfeld_double(&pairing)?;
    let (cat, module) = boxtimes_rev_skeleton(&pd.omega);
    let target = build_a_m_c(&cat, &module)?;
    let chain = Chain::new(&pd.omega);
    let raw = sharp_matrix(pairing.b(), pairing.a(), &target, chain)?;
    let (b_dim, a_dim) = dbl.factor_dims();
    let columns = raw.columns();
    let phi = SparseMatrix::from_columns(
        target.dim(),
        raw.conductor(),
        &dbl.representatives().iter().map(|&(i, j)| columns[i * a_dim + j].clone()).collect::<Vec<_>>(),
    );
    debug_assert_eq!(columns.len(), b_dim * a_dim);
    let report = sharp_report(&dbl, &target, &raw, &phi, &closed_form_r_matrix(&pd.omega));
    Ok((phi, report))
}

fn sharp_report(
    dbl: &DoubleAlgebra,
    target: &WeakHopfAlgebra,
    raw: &SparseMatrix,
    phi: &SparseMatrix,
    expected_r: &[((usize, usize), Cyclotomic)],
) -> SharpReport {
    let d = dbl.algebra();
    let labels = |i: usize| d.labels()[i].clone();
    let mut failure = None;

    let bad_row = dbl.ideal().iter().position(|v| !raw.mul_vec(v).is_empty());
    let well_defined = bad_row.is_none();
    if let Some(r) = bad_row {
        failure = Some(format!("♯ is nonzero on the ideal generator {r}"));
    }
    let unital = phi.mul_vec(d.unit()) == *target.unit();
    if failure.is_none() && !unital {
        failure = Some("unit is not preserved".into());
    }
    let mult = underlying_algebra(d).multiplicativity_failure(&underlying_algebra(target), phi);
    if failure.is_none() {
        if let Some((i, j)) = mult {
            failure = Some(format!("product of {} and {} is not preserved", labels(i), labels(j)));
        }
    }
    let columns = phi.columns();
    let push = |t: &[((usize, usize), Cyclotomic)]| {
        let mut acc = Accumulator::new();
        for ((i, j), c) in t {
            for (k, x) in columns[*i].iter() {
                for (l, y) in columns[*j].iter() {
                    acc.add((*k, *l), &(&(c * x) * y));
                }
            }
        }
        acc.into_sorted()
    };
    let comult_failure = (0..d.dim()).find(|&i| {
        let mut image = Accumulator::new();
        for (k, x) in columns[i].iter() {
            for e in target.coproduct(*k) {
                image.add((e.j, e.k), &(x * &e.value));
            }
        }
        push(&d.coproduct_of(&d.basis(i))) != image.into_sorted()
    });
    if failure.is_none() {
        if let Some(i) = comult_failure {
            failure = Some(format!("coproduct of {} is not preserved", labels(i)));
        }
    }
    let rank = linalg::rank(phi);
    let bijective = rank == target.dim() && rank == d.dim();
    if failure.is_none() && !bijective {
        failure = Some(format!("rank {rank} for dimensions {} and {}", d.dim(), target.dim()));
    }
    let mut want: Vec<_> = expected_r.to_vec();
    want.sort_by_key(|x| x.0);
    let r_matched = push(&dbl.r_matrix().r) == want;
    if failure.is_none() && !r_matched {
        failure = Some("R-matrix is not carried to the closed form".into());
    }
    SharpReport {
        passed: failure.is_none(),
        well_defined,
        unital,
        multiplicative: mult.is_none(),
        comultiplicative: comult_failure.is_none(),
        bijective,
        r_matched,
        rank,
        dim: target.dim(),
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};
    use crate::skeleton::pointed_skeleton;

    #[test]
    fn z2_trivial_is_an_isomorphism() {
        let c = pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)));
        let (_, rep) = sharp_iso(&c).unwrap();
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn z3_standard_cocycles() {
        for p in 0..3 {
            let c = pointed_skeleton(&standard_cocycle(3, p).unwrap());
            let (phi, rep) = sharp_iso(&c).unwrap();
            assert!(rep.passed, "p={p} {rep:?}");
            assert_eq!((phi.rows(), phi.cols()), (81, 81));
        }
    }

    #[test]
    fn z2_twisted_is_an_isomorphism() {
        let c = pointed_skeleton(&standard_cocycle(2, 1).unwrap());
        let (_, rep) = sharp_iso(&c).unwrap();
        assert!(rep.passed, "{rep:?}");
    }
}
