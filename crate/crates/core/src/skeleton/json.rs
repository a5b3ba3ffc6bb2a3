//! JSON forms of fusion rings, skeletal categories and modules.

use serde::{Deserialize, Serialize};

use crate::exactmath::Cyclotomic;

use super::{FusionRing, SkeletalCategory, SkeletalModule, SkeletonError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingJson {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `[a, b, c, N(a,b;c)]` for every nonzero multiplicity.
    pub rules: Vec<[usize; 4]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub index: [usize; 6],
    pub value: Cyclotomic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryJson {
    pub ring: RingJson,
    pub conductor: u32,
    pub associator: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub category: CategoryJson,
    pub objects: Vec<String>,
    /// `[a, x, y]` whenever `y` is a summand of `a ⊙ x`.
    pub action: Vec<[usize; 3]>,
    pub associator: Vec<EntryJson>,
}

impl FusionRing {
    pub fn to_json(&self) -> RingJson {
        let r = self.rank();
        let mut rules = Vec::new();
        for a in 0..r {
            for b in 0..r {
                for &(c, n) in self.products(a, b) {
                    rules.push([a, b, c, n as usize]);
                }
            }
        }
        RingJson {
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            rules,
        }
    }

    pub fn from_json(js: &RingJson) -> Result<Self, SkeletonError> {
        let ring = FusionRing::new(
            js.labels.clone(),
            js.unit,
            js.dual.clone(),
            js.rules.iter().map(|&[a, b, c, n]| (a, b, c, n as u32)),
        )?;
        ring.validate()?;
        Ok(ring)
    }
}

impl SkeletalCategory {
    pub fn to_json(&self) -> CategoryJson {
        CategoryJson {
            ring: self.ring.to_json(),
            conductor: self.conductor,
            associator: self
                .entries()
                .into_iter()
                .map(|(index, value)| EntryJson { index, value })
                .collect(),
        }
    }

    pub fn from_json(js: &CategoryJson) -> Result<Self, SkeletonError> {
        let ring = FusionRing::from_json(&js.ring)?;
        let entries = js
            .associator
            .iter()
            .map(|e| Ok((e.index, e.value.embed(js.conductor)?)))
            .collect::<Result<Vec<_>, SkeletonError>>()?;
        SkeletalCategory::new(ring, js.conductor, entries)
    }
}

impl SkeletalModule {
    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            category: self.category.to_json(),
            objects: self.objects.clone(),
            action: self.action_triples().into_iter().map(|(a, x, y)| [a, x, y]).collect(),
            associator: self
                .entries()
                .into_iter()
                .map(|(index, value)| EntryJson { index, value })
                .collect(),
        }
    }

    pub fn from_json(js: &ModuleJson) -> Result<Self, SkeletonError> {
        let cat = SkeletalCategory::from_json(&js.category)?;
        let cond = cat.conductor();
        let entries = js
            .associator
            .iter()
            .map(|e| Ok((e.index, e.value.embed(cond)?)))
            .collect::<Result<Vec<_>, SkeletonError>>()?;
        SkeletalModule::new(cat, js.objects.clone(), js.action.iter().map(|&[a, x, y]| (a, x, y)), entries)
    }
}

#[cfg(test)]
mod tests {
    use crate::groups::standard_cocycle;
    use crate::skeleton::{boxtimes_rev_skeleton, ising_skeleton, SkeletalCategory, SkeletalModule};

    #[test]
    fn category_roundtrip() {
        let c = ising_skeleton();
        let s = serde_json::to_string(&c.to_json()).unwrap();
        let back = SkeletalCategory::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn module_roundtrip() {
        let (_, m) = boxtimes_rev_skeleton(&standard_cocycle(2, 1).unwrap());
        let s = serde_json::to_string(&m.to_json()).unwrap();
        let back = SkeletalModule::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, m);
    }
}
