//! Finite groupoids and their algebras.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::exactmath::Cyclotomic;
use crate::groups::FiniteGroup;
use crate::wha::WeakHopfAlgebra;

use super::{BasisLabel, BuildError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite groupoid given by its morphisms and the composition `g∘h`, which
/// is defined exactly when `source(g) = target(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    objects: usize,
    morphisms: Vec<Morphism>,
    compose: HashMap<(usize, usize), usize>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
}

impl Groupoid {
    /// Validates the composition table `(g, h, g∘h)`: totality on composable
    /// pairs, associativity, identities and inverses.
    pub fn new(objects: usize, morphisms: Vec<Morphism>, composition: &[(usize, usize, usize)]) -> Result<Self, BuildError> {
        let err = |s: String| Err(BuildError::Groupoid(s));
        let k = morphisms.len();
        if let Some(m) = morphisms.iter().find(|m| m.source >= objects || m.target >= objects) {
            return err(format!("morphism {} has an unknown endpoint", m.name));
        }
        let mut compose = HashMap::new();
        for &(g, h, gh) in composition {
            if g >= k || h >= k || gh >= k {
                return err(format!("composition ({g}, {h}, {gh}) names an unknown morphism"));
            }
            let (mg, mh, mgh) = (&morphisms[g], &morphisms[h], &morphisms[gh]);
            if mg.source != mh.target || mgh.source != mh.source || mgh.target != mg.target {
                return err(format!("composition {} ∘ {} has wrong endpoints", mg.name, mh.name));
            }
            if compose.insert((g, h), gh).is_some_and(|old| old != gh) {
                return err(format!("composition {} ∘ {} given twice", mg.name, mh.name));
            }
        }
        for g in 0..k {
            for h in 0..k {
                if morphisms[g].source == morphisms[h].target && !compose.contains_key(&(g, h)) {
                    return err(format!("missing composition {} ∘ {}", morphisms[g].name, morphisms[h].name));
                }
            }
        }
        let c = |g: usize, h: usize| compose[&(g, h)];
        for (&(g, h), &gh) in &compose {
            for f in (0..k).filter(|&f| morphisms[f].target == morphisms[h].source) {
                if c(gh, f) != c(g, c(h, f)) {
                    return err(format!("composition not associative at ({g}, {h}, {f})"));
                }
            }
        }
        let mut identities = Vec::with_capacity(objects);
        for o in 0..objects {
            let id = (0..k).find(|&e| {
                morphisms[e].source == o
                    && morphisms[e].target == o
                    && (0..k).all(|f| {
                        (morphisms[f].source != o || c(f, e) == f) && (morphisms[f].target != o || c(e, f) == f)
                    })
            });
            match id {
                Some(e) => identities.push(e),
                None => return err(format!("object {o} has no identity")),
            }
        }
        let mut inverses = Vec::with_capacity(k);
        for g in 0..k {
            let (s, t) = (morphisms[g].source, morphisms[g].target);
            let inv = (0..k).find(|&h| {
                morphisms[h].source == t && morphisms[h].target == s && c(h, g) == identities[s] && c(g, h) == identities[t]
            });
            match inv {
                Some(h) => inverses.push(h),
                None => return err(format!("morphism {} is not invertible", morphisms[g].name)),
            }
        }
        Ok(Groupoid {
            objects,
            morphisms,
            compose,
            identities,
            inverses,
        })
    }

    /// The one-object groupoid of a group.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let morphisms = g
            .elements()
            .map(|a| Morphism { name: a.to_string(), source: 0, target: 0 })
            .collect();
        let comp: Vec<_> = g.elements().flat_map(|a| g.elements().map(move |b| (a, b, g.mul(a, b)))).collect();
        Groupoid::new(1, morphisms, &comp).expect("group")
    }

    /// The groupoid with exactly one morphism `i → j` for every pair of objects.
    pub fn indiscrete(objects: usize) -> Self {
        let idx = |s: usize, t: usize| s * objects + t;
        let morphisms = (0..objects * objects)
            .map(|m| Morphism {
                name: format!("{}->{}", m / objects, m % objects),
                source: m / objects,
                target: m % objects,
            })
            .collect();
        let mut comp = Vec::new();
        for s in 0..objects {
            for m in 0..objects {
                for t in 0..objects {
                    comp.push((idx(m, t), idx(s, m), idx(s, t)));
                }
            }
        }
        Groupoid::new(objects, morphisms, &comp).expect("indiscrete groupoid")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose.get(&(g, h)).copied()
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }
}

/// The groupoid algebra: `g·h = g∘h` or zero, `Δ(g) = g⊗g`, `ε(g) = 1`,
/// `S(g) = g⁻¹`. Basis labels are `g[i]` in input order.
pub fn build_groupoid_algebra(g: &Groupoid) -> Result<WeakHopfAlgebra, BuildError> {
    let k = g.morphisms.len();
    let one = || Cyclotomic::one(1);
    let labels = (0..k).map(|i| BasisLabel::Morphism(i).to_string()).collect();
    let mu = g.compose.iter().map(|(&(a, b), &ab)| (a, b, ab, one()));
    let unit = g.identities.iter().map(|&e| (e, one()));
    let delta = (0..k).map(|i| (i, i, i, one()));
    let counit = (0..k).map(|i| (i, one()));
    let antipode = (0..k).map(|i| (g.inverses[i], i, one()));
    Ok(WeakHopfAlgebra::from_parts(labels, 1, mu, unit, delta, counit, antipode)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wha::{is_cocommutative, verify_antipode, verify_weak_bialgebra};

    #[test]
    fn group_gives_group_algebra() {
        let a = build_groupoid_algebra(&Groupoid::from_group(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(is_cocommutative(&a));
        assert!(verify_antipode(&a).passed);
    }

    #[test]
    fn indiscrete_two_objects() {
        let g = Groupoid::indiscrete(2);
        let a = build_groupoid_algebra(&g).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(verify_weak_bialgebra(&a).passed);
        assert!(verify_antipode(&a).passed);
        // S sends 1->0 to 0->1
        assert_eq!(a.s_image(2), &a.basis(1));
    }

    #[test]
    fn non_invertible_rejected() {
        // a monoid {e, z} with z∘z = z
        let m = vec![
            Morphism { name: "e".into(), source: 0, target: 0 },
            Morphism { name: "z".into(), source: 0, target: 0 },
        ];
        let comp = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)];
        let e = Groupoid::new(1, m, &comp).unwrap_err();
        assert!(e.to_string().contains("not invertible"));
    }
}
