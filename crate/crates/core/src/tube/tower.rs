//! The two towers of tube-type spaces over a pointed category and their
//! composition maps.
//!
//! A level `(m, n)` space has one basis vector per label `(w, x₁..x_n,
//! y₁..y_m)` whose hom space is nonzero:
//!
//! * tube: `x₁⋯x_n ⊗ w -> w ⊗ y₁⋯y_m`,
//! * lifted: `x₁⋯x_n -> w ⊗ y₁⋯y_m ⊗ w^R`.
//!
//! The basis vector is the canonical arrow between these words.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exactmath::{SparseTensor3, SparseVec};
use crate::groups::ThreeCocycle;
use crate::skeleton::{pointed_data, Chain, SkeletalCategory};

use super::algebra::{root, Bimodule, PlainAlgebra};
use super::words::{Arrow, Words};
use super::TubeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TubeKind {
    /// Hom spaces `C(X ⊗ w, w ⊗ Y)`.
    Tube,
    /// Hom spaces `C(X, w ⊗ Y ⊗ w^R)`.
    Lifted,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TubeLabel {
    pub w: usize,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl TubeLabel {
    pub fn render(&self, kind: TubeKind) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut s = String::new();
        let tag = match kind {
            TubeKind::Tube => 'u',
            TubeKind::Lifted => 'v',
        };
        write!(s, "{tag}[{}|{}|{}]", self.w, join(&self.xs), join(&self.ys)).unwrap();
        s
    }
}

/// The basis of one level, in lexicographic order of `(w, xs, ys)`.
#[derive(Debug, Clone)]
pub struct TubeBasis {
    labels: Vec<TubeLabel>,
    index: HashMap<TubeLabel, usize>,
}

impl TubeBasis {
    pub fn labels(&self) -> &[TubeLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, l: &TubeLabel) -> Option<usize> {
        self.index.get(l).copied()
    }
}

fn tuples(g: usize, len: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..g).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect()
    })
}

/// The tube tower of a pointed skeletal category with standard duality data.
#[derive(Debug, Clone)]
pub struct TubeFamily {
    kind: TubeKind,
    omega: ThreeCocycle,
}

impl TubeFamily {
    pub fn new(c: &SkeletalCategory, kind: TubeKind) -> Result<Self, TubeError> {
        let pd = pointed_data(c).map_err(|_| TubeError::NotPointed)?;
        Ok(TubeFamily { kind, omega: pd.omega })
    }

    pub fn from_cocycle(omega: &ThreeCocycle, kind: TubeKind) -> Self {
        TubeFamily { kind, omega: omega.clone() }
    }

    pub fn kind(&self) -> TubeKind {
        self.kind
    }

    pub fn omega(&self) -> &ThreeCocycle {
        &self.omega
    }

    pub fn conductor(&self) -> u32 {
        self.omega.conductor()
    }

    pub(crate) fn words(&self) -> Words<'_> {
        Words::new(Chain::new(&self.omega))
    }

    /// Source and target words of the hom space of a label.
    pub(crate) fn words_of(&self, l: &TubeLabel) -> (Vec<usize>, Vec<usize>) {
        let g = self.omega.group();
        match self.kind {
            TubeKind::Tube => ([l.xs.as_slice(), &[l.w]].concat(), [&[l.w], l.ys.as_slice()].concat()),
            TubeKind::Lifted => (l.xs.clone(), [&[l.w], l.ys.as_slice(), &[g.inv(l.w)]].concat()),
        }
    }

    pub(crate) fn arrow(&self, l: &TubeLabel) -> Arrow {
        let (s, t) = self.words_of(l);
        self.words().basis(&s, &t)
    }

    /// Labels with `n` source letters and `m` target letters.
    pub fn basis(&self, m: usize, n: usize) -> TubeBasis {
        let g = self.omega.group();
        let ch = Chain::new(&self.omega);
        let mut labels = Vec::new();
        for w in g.elements() {
            for xs in tuples(g.order(), n) {
                for ys in tuples(g.order(), m) {
                    let l = TubeLabel { w, xs: xs.clone(), ys };
                    let (s, t) = self.words_of(&l);
                    if ch.product(&s) == ch.product(&t) {
                        labels.push(l);
                    }
                }
            }
        }
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        TubeBasis { labels, index }
    }

    /// `h ∘ g` for `h` at level `(n, k)` and `g` at level `(m, n)`, as the
    /// resulting label and exponent, or `None` when the middle letters differ.
    pub fn compose_labels(&self, h: &TubeLabel, g: &TubeLabel) -> Option<(TubeLabel, i64)> {
        if h.ys != g.xs {
            return None;
        }
        let grp = self.omega.group();
        let words = self.words();
        let (wp, w) = (h.w, g.w);
        let t = grp.mul(wp, w);
        let out = TubeLabel { w: t, xs: h.xs.clone(), ys: g.ys.clone() };
        let (ha, ga) = (self.arrow(h), self.arrow(g));
        let composite = match self.kind {
            TubeKind::Tube => words.chain_all(&[
                words.tensor(&words.id(&h.xs), &words.incl(wp, w)),
                words.tensor(&ha, &words.id(&[w])),
                words.tensor(&words.id(&[wp]), &ga),
                words.tensor(&words.proj(wp, w), &words.id(&g.ys)),
            ]),
            TubeKind::Lifted => {
                let incl_dual = words.transpose(&words.incl(wp, w));
                words.chain_all(&[
                    ha,
                    words.tensor_all(&[words.id(&[wp]), ga, words.id(&[grp.inv(wp)])]),
                    words.tensor_all(&[words.proj(wp, w), words.id(&g.ys), incl_dual]),
                ])
            }
        };
        let (s, d) = self.words_of(&out);
        let e = words.coefficient(&composite, &s, &d);
        Some((out, e))
    }

    /// The tensor of `∘^{mnk}: T(n,k) ⊗ T(m,n) -> T(m,k)`.
    pub fn composition(&self, m: usize, n: usize, k: usize) -> SparseTensor3 {
        let left = self.basis(n, k);
        let right = self.basis(m, n);
        let out = self.basis(m, k);
        let cond = self.conductor();
        let mut by_source: HashMap<&[usize], Vec<usize>> = HashMap::new();
        for (j, g) in right.labels().iter().enumerate() {
            by_source.entry(g.xs.as_slice()).or_default().push(j);
        }
        let mut triples = Vec::new();
        for (i, h) in left.labels().iter().enumerate() {
            for &j in by_source.get(h.ys.as_slice()).map(Vec::as_slice).unwrap_or(&[]) {
                let (l, e) = self.compose_labels(h, &right.labels()[j]).expect("matching letters");
                let idx = out.index(&l).expect("composite label is admissible");
                triples.push((i, j, idx, root(cond, e)));
            }
        }
        SparseTensor3::from_triples((left.len(), right.len(), out.len()), cond, triples).expect("in range")
    }

    /// Level `n` algebra `(T(n,n), ∘^{nnn})` with unit `Σ id`.
    pub fn algebra(&self, n: usize) -> Result<PlainAlgebra, TubeError> {
        if n == 0 {
            return Err(TubeError::Level(n));
        }
        let basis = self.basis(n, n);
        let e = self.omega.group().identity();
        let cond = self.conductor();
        let unit_terms = basis
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.w == e && l.xs == l.ys)
            .map(|(i, _)| (i, crate::exactmath::Cyclotomic::one(cond)));
        let unit = SparseVec::from_entries(unit_terms);
        let labels = basis.labels().iter().map(|l| l.render(self.kind)).collect();
        PlainAlgebra::new(labels, self.composition(n, n, n), unit)
    }

    /// `T(m,n)` as a `T(n,n)`-`T(m,m)` bimodule.
    pub fn bimodule(&self, m: usize, n: usize) -> Result<Bimodule, TubeError> {
        if m == 0 || n == 0 {
            return Err(TubeError::Level(m.min(n)));
        }
        Ok(Bimodule {
            left: self.algebra(n)?,
            right: self.algebra(m)?,
            labels: self.basis(m, n).labels().iter().map(|l| l.render(self.kind)).collect(),
            left_action: self.composition(m, n, n),
            right_action: self.composition(m, m, n),
        })
    }

    /// `∘^{mnl}(∘^{nkl} ⊗ 1) = ∘^{mkl}(1 ⊗ ∘^{mnk})` on basis triples of
    /// `T(k,l) ⊗ T(n,k) ⊗ T(m,n)`; returns the first failing triple.
    pub fn associativity_failure(&self, m: usize, n: usize, k: usize, l: usize) -> Option<[TubeLabel; 3]> {
        let (a, b, c) = (self.basis(k, l), self.basis(n, k), self.basis(m, n));
        let n_cond = self.conductor() as i64;
        for f in a.labels() {
            for g in b.labels() {
                for h in c.labels() {
                    let lhs = self
                        .compose_labels(f, g)
                        .and_then(|(fg, e1)| self.compose_labels(&fg, h).map(|(r, e2)| (r, e1 + e2)));
                    let rhs = self
                        .compose_labels(g, h)
                        .and_then(|(gh, e1)| self.compose_labels(f, &gh).map(|(r, e2)| (r, e1 + e2)));
                    let same = match (&lhs, &rhs) {
                        (None, None) => true,
                        (Some((x, e)), Some((y, e2))) => x == y && (e - e2).rem_euclid(n_cond) == 0,
                        _ => false,
                    };
                    if !same {
                        return Some([f.clone(), g.clone(), h.clone()]);
                    }
                }
            }
        }
        None
    }
}

/// Builds the tube algebra of a pointed category.
pub fn build_tube(c: &SkeletalCategory) -> Result<PlainAlgebra, TubeError> {
    TubeFamily::new(c, TubeKind::Tube)?.algebra(1)
}

/// Builds level `n` of the lifted tower; level 1 is the lifted tube algebra.
pub fn build_tube_prime(c: &SkeletalCategory, n: usize) -> Result<PlainAlgebra, TubeError> {
    TubeFamily::new(c, TubeKind::Lifted)?.algebra(n)
}

/// The `T(n,n)`-`T(m,m)` bimodule `T(m,n)` of the given tower.
pub fn build_tube_bimodule(c: &SkeletalCategory, kind: TubeKind, m: usize, n: usize) -> Result<Bimodule, TubeError> {
    TubeFamily::new(c, kind)?.bimodule(m, n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoritaReport {
    pub passed: bool,
    pub checked: usize,
    /// Label of the first basis vector not fixed by `∘ s`.
    pub failure: Option<String>,
}

/// Splits each `g: X ⊗ w -> w ⊗ Y` of `T(n,n)` through `d = y₁⋯y_n` padded
/// with unit letters to length `m`, and checks that `∘^{nmn}` maps the
/// splitting back to `g`.
pub fn verify_morita_section(c: &SkeletalCategory, m: usize, n: usize) -> Result<MoritaReport, TubeError> {
    if m == 0 || n == 0 {
        return Err(TubeError::Level(m.min(n)));
    }
    let fam = TubeFamily::new(c, TubeKind::Tube)?;
    Ok(morita_section_report(&fam, m, n))
}

pub(crate) fn morita_section_report(fam: &TubeFamily, m: usize, n: usize) -> MoritaReport {
    let words = fam.words();
    let grp = fam.omega().group();
    let e = grp.identity();
    let cond = fam.conductor() as i64;
    let basis = fam.basis(n, n);
    for (checked, g) in basis.labels().iter().enumerate() {
        let d = words.chain().product(&g.ys);
        let mut padded = vec![e; m];
        padded[0] = d;
        // g₁ = (1_w ⊗ P_d) g at level (m, n)
        let g1_label = TubeLabel { w: g.w, xs: g.xs.clone(), ys: padded.clone() };
        let g1 = words.then(&fam.arrow(g), &words.tensor(&words.id(&[g.w]), &words.basis(&g.ys, &padded)));
        let (s1, t1) = fam.words_of(&g1_label);
        let e1 = words.coefficient(&g1, &s1, &t1);
        // g₂ = 1_𝟙 ⊗ I_d at level (n, m)
        let g2_label = TubeLabel { w: e, xs: padded.clone(), ys: g.ys.clone() };
        let (s2, t2) = fam.words_of(&g2_label);
        let g2 = words.tensor(&words.id(&[e]), &words.basis(&padded, &g.ys));
        let e2 = words.coefficient(&g2, &s2, &t2);
        let back = fam.compose_labels(&g1_label, &g2_label);
        let ok = matches!(back, Some((ref l, x)) if l == g && (x + e1 + e2).rem_euclid(cond) == 0);
        if !ok {
            return MoritaReport { passed: false, checked: checked + 1, failure: Some(g.render(TubeKind::Tube)) };
        }
    }
    MoritaReport { passed: true, checked: basis.len(), failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};
    use crate::skeleton::pointed_skeleton;

    fn vec_z(n: usize) -> SkeletalCategory {
        pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(n)))
    }

    #[test]
    fn tube_of_z2() {
        let t = build_tube(&vec_z(2)).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.verify().passed);
        assert!(t.is_commutative());
        assert_eq!(t.center_dim(), 4);
    }

    #[test]
    fn lifted_dimensions() {
        let c = vec_z(2);
        assert_eq!(build_tube_prime(&c, 1).unwrap().dim(), 4);
        assert_eq!(build_tube_prime(&c, 2).unwrap().dim(), 16);
    }

    #[test]
    fn algebras_are_associative() {
        for w in [standard_cocycle(2, 1).unwrap(), standard_cocycle(3, 1).unwrap(), standard_cocycle(4, 2).unwrap()] {
            let c = pointed_skeleton(&w);
            for n in [1, 2] {
                let t = build_tube_prime(&c, n).unwrap();
                assert!(t.verify().passed, "lifted level {n}");
            }
            assert!(build_tube(&c).unwrap().verify().passed);
        }
    }

    #[test]
    fn s3_tube() {
        let c = pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::symmetric3()));
        let t = build_tube(&c).unwrap();
        assert_eq!(t.dim(), 36);
        assert!(t.verify().passed);
        // simples of the double of S3
        assert_eq!(t.center_dim(), 8);
    }

    #[test]
    fn generalized_associativity() {
        let w = standard_cocycle(2, 1).unwrap();
        for kind in [TubeKind::Tube, TubeKind::Lifted] {
            let fam = TubeFamily::from_cocycle(&w, kind);
            for m in 1..=2 {
                for n in 1..=2 {
                    for k in 1..=2 {
                        for l in 1..=2 {
                            assert_eq!(fam.associativity_failure(m, n, k, l), None, "{kind:?} {m}{n}{k}{l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bimodules_verify() {
        let c = pointed_skeleton(&standard_cocycle(3, 1).unwrap());
        for kind in [TubeKind::Tube, TubeKind::Lifted] {
            let b = build_tube_bimodule(&c, kind, 1, 2).unwrap();
            assert!(b.verify().passed, "{kind:?}");
        }
    }

    #[test]
    fn morita_sections() {
        for w in [ThreeCocycle::trivial(&FiniteGroup::cyclic(2)), standard_cocycle(3, 1).unwrap()] {
            let c = pointed_skeleton(&w);
            for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let r = verify_morita_section(&c, m, n).unwrap();
                assert!(r.passed, "{m},{n}: {r:?}");
            }
        }
    }

    #[test]
    fn non_pointed_rejected() {
        let c = crate::skeleton::ising_skeleton();
        assert_eq!(build_tube(&c), Err(TubeError::NotPointed));
    }
}
