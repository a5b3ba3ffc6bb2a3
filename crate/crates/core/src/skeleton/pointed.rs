//! Pointed categories: recovering (G, ω) and word arithmetic in exponent form.

use crate::exactmath::Cyclotomic;
use crate::groups::{FiniteGroup, ThreeCocycle};

use super::{SkeletalCategory, SkeletonError};

/// The group of simples and the associator of a pointed category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedData {
    pub group: FiniteGroup,
    pub omega: ThreeCocycle,
}

/// Reads `(G, ω)` off a pointed skeletal category.
pub fn pointed_data(c: &SkeletalCategory) -> Result<PointedData, SkeletonError> {
    if !c.is_pointed() {
        return Err(SkeletonError::NotPointed);
    }
    let ring = c.ring();
    let r = ring.rank();
    let prod = |a: usize, b: usize| ring.products(a, b)[0].0;
    let table = (0..r).map(|a| (0..r).map(|b| prod(a, b)).collect()).collect();
    let group = FiniteGroup::from_table("pointed", table, ring.unit()).map_err(|e| SkeletonError::Ring(e.to_string()))?;
    let mut values = Vec::with_capacity(r * r * r);
    for a in 0..r {
        for b in 0..r {
            for cc in 0..r {
                values.push(c.f(a, b, cc, prod(prod(a, b), cc), prod(a, b), prod(b, cc)));
            }
        }
    }
    let omega = ThreeCocycle::from_values(group.clone(), &values).map_err(|e| SkeletonError::Ring(e.to_string()))?;
    Ok(PointedData { group, omega })
}

/// Arithmetic on words of simples in a pointed category, bracketed to the
/// left: `r1 r2 r3 = (r1 r2) r3`. Scalars are exponents of ζ_N.
#[derive(Debug, Clone, Copy)]
pub struct Chain<'a> {
    omega: &'a ThreeCocycle,
}

impl<'a> Chain<'a> {
    pub fn new(omega: &'a ThreeCocycle) -> Self {
        Chain { omega }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.omega.group()
    }

    pub fn conductor(&self) -> u32 {
        self.omega.conductor()
    }

    /// Exponent of `ω(a,b,c)`.
    #[inline]
    pub fn w(&self, a: usize, b: usize, c: usize) -> i64 {
        self.omega.exponent(a, b, c) as i64
    }

    pub fn product(&self, word: &[usize]) -> usize {
        let g = self.group();
        word.iter().fold(g.identity(), |acc, &x| g.mul(acc, x))
    }

    /// Exponent of the scalar taking `p (r1 ... rk)` to `(p r1) ... rk`:
    /// `Σ_{i≥2} -w(p, r1⋯r_{i-1}, r_i)`.
    pub fn absorb_left(&self, p: usize, word: &[usize]) -> i64 {
        let g = self.group();
        let mut prefix = match word.first() {
            Some(&r) => r,
            None => return 0,
        };
        let mut e = 0;
        for &r in &word[1..] {
            e -= self.w(p, prefix, r);
            prefix = g.mul(prefix, r);
        }
        e
    }

    /// Exponent of the scalar taking `(r1 ... rk) q` to `r1 ... rk q`, i.e.
    /// re-bracketing the concatenation to the left. Zero in left-normal form.
    pub fn absorb_right(&self, _word: &[usize], _q: usize) -> i64 {
        0
    }

    /// Exponent of the scalar taking `(r1 ... rj)(s1 ... sk)` to the
    /// left-normal form of the concatenated word.
    pub fn concat(&self, left: &[usize], right: &[usize]) -> i64 {
        let p = self.product(left);
        self.absorb_left(p, right)
    }

    /// Exponent of the evaluation scalar `ω(g, g⁻¹, g)⁻¹`.
    pub fn ev(&self, g: usize) -> i64 {
        -self.w(g, self.group().inv(g), g)
    }

    pub fn scalar(&self, e: i64) -> Cyclotomic {
        let n = self.conductor() as i64;
        Cyclotomic::root(self.conductor(), e.rem_euclid(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::standard_cocycle;
    use crate::skeleton::pointed_skeleton;

    #[test]
    fn pointed_data_roundtrip() {
        let w = standard_cocycle(4, 3).unwrap();
        let pd = pointed_data(&pointed_skeleton(&w)).unwrap();
        assert_eq!(pd.group.table(), w.group().table());
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(pd.omega.value(a, b, c), w.value(a, b, c));
                }
            }
        }
    }

    #[test]
    fn concat_agrees_with_stepwise_absorption() {
        let w = standard_cocycle(3, 1).unwrap();
        let ch = Chain::new(&w);
        // (a)(b c) -> (a b) c is one step of absorb_left
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(ch.concat(&[a], &[b, c]), -ch.w(a, b, c));
                }
            }
        }
    }
}
