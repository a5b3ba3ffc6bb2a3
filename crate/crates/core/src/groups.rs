//! Finite groups given by multiplication tables, and normalized 3-cocycles
//! with values in roots of unity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{Cyclotomic, ExactError, ScalarJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table must be square and non-empty")]
    NotSquare,
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("identity index {0} is out of range")]
    BadIdentity(usize),
    #[error("not a group: {0}")]
    NotAGroup(GroupViolation),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("cocycle table has {found} values, expected {expected}")]
    CocycleSize { expected: usize, found: usize },
    #[error("cocycle value at {0:?} is not a root of unity of the given conductor")]
    NotRootOfUnity((usize, usize, usize)),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(CocycleViolation),
    #[error("cocycle parameter p = {p} must lie in 0..{n}")]
    BadParameter { n: usize, p: usize },
    #[error(transparent)]
    Scalar(#[from] ExactError),
}

/// First failure found by [`validate_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupViolation {
    Associativity { a: usize, b: usize, c: usize },
    Identity { g: usize },
    Inverse { g: usize },
}

impl std::fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupViolation::Associativity { a, b, c } => write!(f, "(g{a} g{b}) g{c} != g{a} (g{b} g{c})"),
            GroupViolation::Identity { g } => write!(f, "identity law fails at g{g}"),
            GroupViolation::Inverse { g } => write!(f, "g{g} has no inverse"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub passed: bool,
    pub violation: Option<GroupViolation>,
}

/// Checks group axioms on a raw table. Malformed tables are errors; axiom
/// failures are reported with the first offending tuple.
pub fn validate_group(table: &[Vec<usize>], identity: usize) -> Result<GroupReport, GroupError> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n) {
        return Err(GroupError::NotSquare);
    }
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
            }
        }
    }
    if identity >= n {
        return Err(GroupError::BadIdentity(identity));
    }
    let fail = |v| Ok(GroupReport { passed: false, violation: Some(v) });
    for g in 0..n {
        if table[identity][g] != g || table[g][identity] != g {
            return fail(GroupViolation::Identity { g });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return fail(GroupViolation::Associativity { a, b, c });
                }
            }
        }
    }
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == identity && table[h][g] == identity) {
            return fail(GroupViolation::Inverse { g });
        }
    }
    Ok(GroupReport { passed: true, violation: None })
}

/// A finite group on the elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self, GroupError> {
        let rep = validate_group(&table, identity)?;
        if let Some(v) = rep.violation {
            return Err(GroupError::NotAGroup(v));
        }
        let n = table.len();
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity).expect("validated"))
            .collect();
        Ok(FiniteGroup {
            name: name.into(),
            table,
            identity,
            inverse,
        })
    }

    /// Z_n with elements 0..n under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(format!("z{n}"), table, 0).expect("cyclic table")
    }

    /// Direct product; element (g, h) has index g * |H| + h.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order();
        let n = g.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("{}x{}", g.name, h.name), table, g.identity * m + h.identity)
            .expect("product of groups")
    }

    /// S3 as permutations of {0,1,2} in lexicographic order, with
    /// `(s * t)(i) = s(t(i))`.
    pub fn symmetric3() -> Self {
        let perms = permutations(3);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..3).map(|i| s[t[i]]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("s3", table, 0).expect("permutation composition")
    }

    /// Built-in groups: `z1`..`z8`, `z2xz2`, `s3`.
    pub fn catalog(name: &str) -> Result<Self, GroupError> {
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "s3" => Ok(Self::symmetric3()),
            "z2xz2" | "klein" => Ok(Self::product(&Self::cyclic(2), &Self::cyclic(2))),
            _ => lower
                .strip_prefix('z')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&n| (1..=8).contains(&n))
                .map(Self::cyclic)
                .ok_or(GroupError::UnknownGroup(name.to_string())),
        }
    }

    /// The catalog covered by the acceptance sweeps.
    pub fn standard_catalog() -> Vec<FiniteGroup> {
        ["z2", "z3", "z4", "z2xz2", "s3", "z6"]
            .iter()
            .map(|n| Self::catalog(n).expect("catalog group"))
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Cyclic order n, when the group is cyclic with 0 as a generator of
    /// `g -> g+1` (true for the `z<n>` tables).
    pub fn cyclic_order(&self) -> Option<usize> {
        let n = self.order();
        let is_zn = self.identity == 0
            && self
                .elements()
                .all(|a| self.elements().all(|b| self.mul(a, b) == (a + b) % n));
        is_zn.then_some(n)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            order: self.order(),
            table: self.table.clone(),
            identity: self.identity,
        }
    }

    pub fn from_json(name: impl Into<String>, js: &GroupJson) -> Result<Self, GroupError> {
        if js.table.len() != js.order {
            return Err(GroupError::NotSquare);
        }
        Self::from_table(name, js.table.clone(), js.identity)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// External group form: `{"order": n, "table": [[...]], "identity": i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

/// First failure found by [`validate_cocycle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CocycleViolation {
    Normalization { a: usize, b: usize },
    Identity { a: usize, b: usize, c: usize, d: usize },
}

impl std::fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CocycleViolation::Normalization { a, b } => write!(f, "normalization fails for ({a}, {b})"),
            CocycleViolation::Identity { a, b, c, d } => write!(f, "cocycle identity fails at ({a}, {b}, {c}, {d})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleReport {
    pub passed: bool,
    pub violation: Option<CocycleViolation>,
}

/// A 3-cochain on G with values ζ_N^e, stored as exponents mod N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCocycle {
    group: FiniteGroup,
    conductor: u32,
    exponents: Vec<u32>,
}

impl ThreeCocycle {
    /// Builds from a full value table (a-major). Values must be powers of ζ_N.
    /// No cocycle check is made; see [`validate_cocycle`].
    pub fn from_values(group: FiniteGroup, values: &[Cyclotomic]) -> Result<Self, GroupError> {
        let n = group.order();
        if values.len() != n * n * n {
            return Err(GroupError::CocycleSize {
                expected: n * n * n,
                found: values.len(),
            });
        }
        let conductor = values.first().map_or(1, Cyclotomic::conductor);
        let mut exponents = Vec::with_capacity(values.len());
        for (i, v) in values.iter().enumerate() {
            if v.conductor() != conductor {
                return Err(ExactError::ConductorMismatch {
                    left: conductor,
                    right: v.conductor(),
                }
                .into());
            }
            let e = v
                .root_exponent()
                .ok_or(GroupError::NotRootOfUnity((i / (n * n), (i / n) % n, i % n)))?;
            exponents.push(e);
        }
        Ok(ThreeCocycle {
            group,
            conductor,
            exponents,
        })
    }

    pub fn from_exponents(group: FiniteGroup, conductor: u32, exponents: Vec<u32>) -> Result<Self, GroupError> {
        let n = group.order();
        if exponents.len() != n * n * n {
            return Err(GroupError::CocycleSize {
                expected: n * n * n,
                found: exponents.len(),
            });
        }
        let exponents = exponents.into_iter().map(|e| e % conductor).collect();
        Ok(ThreeCocycle {
            group,
            conductor,
            exponents,
        })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        let n = group.order();
        ThreeCocycle {
            group: group.clone(),
            conductor: 1,
            exponents: vec![0; n * n * n],
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    #[inline]
    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.group.order();
        (a * n + b) * n + c
    }

    /// Exponent e with ω(a,b,c) = ζ_N^e.
    #[inline]
    pub fn exponent(&self, a: usize, b: usize, c: usize) -> u32 {
        self.exponents[self.idx(a, b, c)]
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> Cyclotomic {
        Cyclotomic::root(self.conductor, self.exponent(a, b, c) as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// The same cocycle expressed over a multiple of its conductor.
    pub fn embed(&self, conductor: u32) -> Result<Self, GroupError> {
        if !conductor.is_multiple_of(self.conductor) {
            return Err(ExactError::BadEmbedding {
                from: self.conductor,
                to: conductor,
            }
            .into());
        }
        let k = conductor / self.conductor;
        Ok(ThreeCocycle {
            group: self.group.clone(),
            conductor,
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        })
    }

    /// Pointwise product, over the lcm of both conductors.
    pub fn pointwise_product(&self, other: &ThreeCocycle) -> Result<Self, GroupError> {
        let n = crate::exactmath::lcm(self.conductor, other.conductor);
        let a = self.embed(n)?;
        let b = other.embed(n)?;
        Ok(ThreeCocycle {
            group: self.group.clone(),
            conductor: n,
            exponents: a.exponents.iter().zip(&b.exponents).map(|(x, y)| (x + y) % n).collect(),
        })
    }

    /// Returns a copy with one value replaced (for negative controls).
    pub fn with_exponent(&self, a: usize, b: usize, c: usize, e: u32) -> Self {
        let mut out = self.clone();
        let i = self.idx(a, b, c);
        out.exponents[i] = e % self.conductor;
        out
    }

    pub fn to_json(&self) -> CocycleJson {
        let n = self.group.order();
        let mut values = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    values.push(ScalarJson::from(&self.value(a, b, c)));
                }
            }
        }
        CocycleJson {
            conductor: self.conductor,
            values,
        }
    }

    pub fn from_json(group: FiniteGroup, js: &CocycleJson) -> Result<Self, GroupError> {
        let values = js
            .values
            .iter()
            .map(|s| {
                let v = Cyclotomic::try_from(s)?;
                if v.conductor() != js.conductor {
                    return Err(ExactError::ConductorMismatch {
                        left: js.conductor,
                        right: v.conductor(),
                    });
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.is_empty() {
            return Err(GroupError::CocycleSize {
                expected: group.order().pow(3),
                found: 0,
            });
        }
        Self::from_values(group, &values)
    }
}

/// External cocycle form: conductor plus the a-major value table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub conductor: u32,
    pub values: Vec<ScalarJson>,
}

/// Checks normalization and the cocycle identity
/// ω(b,c,d) ω(a,bc,d) ω(a,b,c) = ω(ab,c,d) ω(a,b,cd) on all tuples.
pub fn validate_cocycle(omega: &ThreeCocycle) -> CocycleReport {
    let g = omega.group();
    let n = omega.conductor();
    let e = g.identity();
    let fail = |v| CocycleReport {
        passed: false,
        violation: Some(v),
    };
    for a in g.elements() {
        for b in g.elements() {
            if omega.exponent(a, e, b) != 0 || omega.exponent(e, a, b) != 0 || omega.exponent(a, b, e) != 0 {
                return fail(CocycleViolation::Normalization { a, b });
            }
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            for c in g.elements() {
                let bc = g.mul(b, c);
                let abc_ = omega.exponent(a, b, c);
                for d in g.elements() {
                    let lhs = omega.exponent(b, c, d) + omega.exponent(a, bc, d) + abc_;
                    let rhs = omega.exponent(ab, c, d) + omega.exponent(a, b, g.mul(c, d));
                    if lhs % n != rhs % n {
                        return fail(CocycleViolation::Identity { a, b, c, d });
                    }
                }
            }
        }
    }
    CocycleReport {
        passed: true,
        violation: None,
    }
}

/// The representative ω_p(a,b,c) = ζ_n^(p·a·⌊(b+c)/n⌋) on Z_n.
pub fn standard_cocycle(n: usize, p: usize) -> Result<ThreeCocycle, GroupError> {
    if n == 0 || p >= n {
        return Err(GroupError::BadParameter { n, p });
    }
    let group = FiniteGroup::cyclic(n);
    let mut exponents = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                exponents.push(((p * a * ((b + c) / n)) % n) as u32);
            }
        }
    }
    ThreeCocycle::from_exponents(group, n as u32, exponents)
}

/// Every (group, cocycle) pair in the acceptance catalog: trivial cocycles on
/// all catalog groups plus all standard cocycles on the cyclic ones.
pub fn standard_pairs() -> Vec<ThreeCocycle> {
    let mut out = Vec::new();
    for g in FiniteGroup::standard_catalog() {
        out.push(ThreeCocycle::trivial(&g));
        if let Some(n) = g.cyclic_order() {
            for p in 1..n {
                out.push(standard_cocycle(n, p).expect("valid parameter"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_passes() {
        let t = vec![vec![0, 1], vec![1, 0]];
        assert!(validate_group(&t, 0).unwrap().passed);
    }

    #[test]
    fn associativity_violation_is_located() {
        // Z3 with the row of element 1 rotated in one spot.
        let mut t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        t[1][1] = 0;
        t[1][2] = 2;
        let rep = validate_group(&t, 0).unwrap();
        assert!(!rep.passed);
        match rep.violation {
            Some(GroupViolation::Associativity { a, b, c }) => {
                assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_table_is_an_error() {
        assert!(validate_group(&[vec![0, 1]], 0).is_err());
        assert!(validate_group(&[vec![3]], 0).is_err());
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        for g in s3.elements() {
            assert_eq!(s3.mul(g, s3.inv(g)), s3.identity());
        }
    }

    #[test]
    fn catalog_names() {
        for (name, n) in [("z2", 2), ("z3", 3), ("z4", 4), ("z2xz2", 4), ("s3", 6), ("z6", 6)] {
            assert_eq!(FiniteGroup::catalog(name).unwrap().order(), n);
        }
        assert!(FiniteGroup::catalog("q8").is_err());
        assert_eq!(FiniteGroup::catalog("z2xz2").unwrap().cyclic_order(), None);
    }

    #[test]
    fn z2_standard_cocycle_value() {
        let w = standard_cocycle(2, 1).unwrap();
        assert_eq!(w.value(1, 1, 1), Cyclotomic::from_int(2, -1));
        assert!(validate_cocycle(&w).passed);
    }

    #[test]
    fn z3_trivial_parameter() {
        assert!(standard_cocycle(3, 0).unwrap().is_trivial());
        assert!(standard_cocycle(3, 3).is_err());
    }

    #[test]
    fn perturbed_trivial_cocycle_fails() {
        let g = FiniteGroup::cyclic(3);
        let w = ThreeCocycle::trivial(&g).embed(3).unwrap().with_exponent(1, 1, 2, 1);
        let rep = validate_cocycle(&w);
        assert!(matches!(rep.violation, Some(CocycleViolation::Identity { .. })));
    }

    #[test]
    fn non_root_value_is_rejected() {
        let g = FiniteGroup::cyclic(1);
        assert!(ThreeCocycle::from_values(g, &[Cyclotomic::from_int(1, 2)]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let w = standard_cocycle(3, 2).unwrap();
        let js = serde_json::to_string(&w.to_json()).unwrap();
        let back: CocycleJson = serde_json::from_str(&js).unwrap();
        assert_eq!(ThreeCocycle::from_json(FiniteGroup::cyclic(3), &back).unwrap(), w);
    }
}
