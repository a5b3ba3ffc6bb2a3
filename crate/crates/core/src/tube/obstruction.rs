//! A dimension count ruling out weak bialgebra structures compatible with
//! the representation-theoretic tensor product.
//!
//! If `rep(T)` carried a monoidal structure induced by a weak bialgebra, the
//! underlying space of `J(z) ⊠ J(z')` would be a subspace of
//! `J(z) ⊗ J(z')`. Any pair with `dim J(z ⊗ z') > dim J(z) · dim J(z')` is
//! therefore an obstruction.

use serde::{Deserialize, Serialize};

use crate::skeleton::FusionRing;

use super::TubeError;

/// An object given as a multiset of simple labels, with `dim J(z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub simples: Vec<String>,
    pub j_dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionPair {
    pub left: usize,
    pub right: usize,
    /// `dim J(z ⊗ z')`.
    pub product_dim: u64,
    /// `dim J(z) · dim J(z')`.
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub obstructed: bool,
    pub checked: usize,
    pub pairs: Vec<ObstructionPair>,
}

fn multiplicities(ring: &FusionRing, c: &Candidate, index: usize) -> Result<Vec<u32>, TubeError> {
    if c.simples.is_empty() {
        return Err(TubeError::MalformedCandidate(format!("candidate {index} is empty")));
    }
    let mut m = vec![0u32; ring.rank()];
    for s in &c.simples {
        let i = ring
            .label_index(s)
            .ok_or_else(|| TubeError::MalformedCandidate(format!("candidate {index}: unknown simple {s:?}")))?;
        m[i] += 1;
    }
    let total: u64 = m.iter().map(|&x| x as u64).sum();
    if total != c.j_dim {
        return Err(TubeError::MalformedCandidate(format!(
            "candidate {index}: j_dim {} but {total} simple summands",
            c.j_dim
        )));
    }
    Ok(m)
}

/// Reports every ordered pair of candidates violating the dimension bound,
/// expanding `z ⊗ z'` through the fusion rules.
pub fn weak_bialgebra_obstruction(ring: &FusionRing, candidates: &[Candidate]) -> Result<ObstructionReport, TubeError> {
    let mults: Vec<Vec<u32>> =
        candidates.iter().enumerate().map(|(i, c)| multiplicities(ring, c, i)).collect::<Result<_, _>>()?;
    let mut pairs = Vec::new();
    for (left, x) in mults.iter().enumerate() {
        for (right, y) in mults.iter().enumerate() {
            let product_dim: u64 = ring.multiply(x, y).iter().map(|&k| k as u64).sum();
            let bound = candidates[left].j_dim * candidates[right].j_dim;
            if product_dim > bound {
                pairs.push(ObstructionPair { left, right, product_dim, bound });
            }
        }
    }
    Ok(ObstructionReport { obstructed: !pairs.is_empty(), checked: mults.len() * mults.len(), pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::skeleton::{fib_fusion_ring, pointed_ring};
    use proptest::prelude::*;

    fn single(s: &str) -> Candidate {
        Candidate { simples: vec![s.into()], j_dim: 1 }
    }

    #[test]
    fn fibonacci_is_obstructed() {
        let ring = fib_fusion_ring();
        let nu = ring.labels()[1].clone();
        let rep = weak_bialgebra_obstruction(&ring, &[single(&nu)]).unwrap();
        assert!(rep.obstructed);
        assert_eq!(rep.pairs, vec![ObstructionPair { left: 0, right: 0, product_dim: 2, bound: 1 }]);
    }

    #[test]
    fn unit_never_obstructs() {
        let ring = fib_fusion_ring();
        let unit = ring.labels()[ring.unit()].clone();
        let nu = ring.labels()[1].clone();
        let rep = weak_bialgebra_obstruction(&ring, &[single(&unit), single(&nu)]).unwrap();
        assert!(rep.pairs.iter().all(|p| p.left == 1 && p.right == 1));
    }

    #[test]
    fn pointed_rings_are_not_obstructed() {
        for g in FiniteGroup::standard_catalog() {
            let ring = pointed_ring(&g);
            let cands: Vec<_> = ring.labels().iter().map(|s| single(s)).collect();
            assert!(!weak_bialgebra_obstruction(&ring, &cands).unwrap().obstructed, "{}", g.name());
        }
    }

    #[test]
    fn malformed_candidates() {
        let ring = fib_fusion_ring();
        assert!(weak_bialgebra_obstruction(&ring, &[single("nope")]).is_err());
        let wrong = Candidate { simples: vec![ring.labels()[1].clone()], j_dim: 2 };
        assert!(weak_bialgebra_obstruction(&ring, &[wrong]).is_err());
        let empty = Candidate { simples: vec![], j_dim: 0 };
        assert!(weak_bialgebra_obstruction(&ring, &[empty]).is_err());
    }

    fn candidate() -> impl Strategy<Value = Candidate> {
        prop::collection::vec(0usize..2, 1..4).prop_map(|v| {
            let ring = fib_fusion_ring();
            Candidate { simples: v.iter().map(|&i| ring.labels()[i].clone()).collect(), j_dim: v.len() as u64 }
        })
    }

    proptest! {
        #[test]
        fn adding_candidates_keeps_pairs(base in prop::collection::vec(candidate(), 1..4), extra in candidate()) {
            let ring = fib_fusion_ring();
            let before = weak_bialgebra_obstruction(&ring, &base).unwrap();
            let mut more = base.clone();
            more.push(extra);
            let after = weak_bialgebra_obstruction(&ring, &more).unwrap();
            for p in &before.pairs {
                prop_assert!(after.pairs.contains(p));
            }
        }
    }
}
