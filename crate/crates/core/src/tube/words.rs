//! Morphisms between tensor words of simples in a pointed category.
//!
//! Every word `r1 ⊗ ... ⊗ rk` is treated as an object of the strictification
//! and carries the basis vector `b_W: r1⋯rk -> W` built from left-bracketed
//! inclusions. A morphism between words with the same product is a scalar
//! multiple of `b_dst ∘ b_src⁻¹`; we store the exponent of that scalar.

use crate::skeleton::Chain;

/// `ζ^exp · b_dst ∘ b_src⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Arrow {
    pub exp: i64,
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
}

/// String calculus on words over `(G, ω)` with the standard duality data.
#[derive(Clone, Copy)]
pub(crate) struct Words<'a> {
    chain: Chain<'a>,
}

impl<'a> Words<'a> {
    pub fn new(chain: Chain<'a>) -> Self {
        Words { chain }
    }

    pub fn chain(&self) -> &Chain<'a> {
        &self.chain
    }

    fn inv(&self, g: usize) -> usize {
        self.chain.group().inv(g)
    }

    /// Exponent `λ` with `(b_X ⊗ b_Y) I^{xy} = ζ^λ b_{XY}`.
    pub fn lambda(&self, x: &[usize], y: &[usize]) -> i64 {
        self.chain.concat(x, y)
    }

    fn same(&self, a: &[usize], b: &[usize]) -> bool {
        let e = self.chain.group().identity();
        a.iter().filter(|&&r| r != e).eq(b.iter().filter(|&&r| r != e))
    }

    pub fn basis(&self, src: &[usize], dst: &[usize]) -> Arrow {
        debug_assert_eq!(self.chain.product(src), self.chain.product(dst));
        Arrow { exp: 0, src: src.to_vec(), dst: dst.to_vec() }
    }

    pub fn id(&self, w: &[usize]) -> Arrow {
        self.basis(w, w)
    }

    /// `I^{ab}: ab -> a ⊗ b`.
    pub fn incl(&self, a: usize, b: usize) -> Arrow {
        let g = self.chain.group();
        self.basis(&[g.mul(a, b)], &[a, b])
    }

    /// `P^{ab}: a ⊗ b -> ab`.
    pub fn proj(&self, a: usize, b: usize) -> Arrow {
        let g = self.chain.group();
        self.basis(&[a, b], &[g.mul(a, b)])
    }

    /// `f ∘ g`; the target of `g` must be the source of `f` up to unit letters.
    pub fn then(&self, g: &Arrow, f: &Arrow) -> Arrow {
        assert!(self.same(&g.dst, &f.src), "composing {:?} after {:?}", f.src, g.dst);
        Arrow { exp: f.exp + g.exp, src: g.src.clone(), dst: f.dst.clone() }
    }

    pub fn chain_all(&self, steps: &[Arrow]) -> Arrow {
        let mut it = steps.iter();
        let first = it.next().expect("nonempty composite").clone();
        it.fold(first, |acc, f| self.then(&acc, f))
    }

    pub fn tensor(&self, f: &Arrow, g: &Arrow) -> Arrow {
        Arrow {
            exp: f.exp + g.exp + self.lambda(&f.dst, &g.dst) - self.lambda(&f.src, &g.src),
            src: [f.src.as_slice(), g.src.as_slice()].concat(),
            dst: [f.dst.as_slice(), g.dst.as_slice()].concat(),
        }
    }

    pub fn tensor_all(&self, parts: &[Arrow]) -> Arrow {
        let mut it = parts.iter();
        let first = it.next().expect("nonempty tensor").clone();
        it.fold(first, |acc, f| self.tensor(&acc, f))
    }

    /// The right dual word: inverses in reverse order.
    pub fn dual(&self, w: &[usize]) -> Vec<usize> {
        w.iter().rev().map(|&r| self.inv(r)).collect()
    }

    /// Right evaluation `W ⊗ W^R -> 1`, nested from the inside out.
    pub fn ev(&self, w: &[usize]) -> Arrow {
        match w.split_first() {
            None => self.id(&[]),
            Some((&first, rest)) => {
                let inner = self.tensor_all(&[self.id(&[first]), self.ev(rest), self.id(&[self.inv(first)])]);
                let outer = Arrow {
                    exp: self.chain.ev(self.inv(first)),
                    src: vec![first, self.inv(first)],
                    dst: vec![],
                };
                self.then(&inner, &outer)
            }
        }
    }

    /// Right coevaluation `1 -> W^R ⊗ W`, nested from the inside out.
    pub fn coev(&self, w: &[usize]) -> Arrow {
        match w.split_first() {
            None => self.id(&[]),
            Some((&first, rest)) => {
                let outer = self.coev(rest);
                let single = self.basis(&[], &[self.inv(first), first]);
                let rest_dual = self.dual(rest);
                let inner = self.tensor_all(&[self.id(&rest_dual), single, self.id(rest)]);
                self.then(&outer, &inner)
            }
        }
    }

    /// `f^R = (1 ⊗ ev_b)(1 ⊗ f ⊗ 1)(coev_a ⊗ 1)` for `f: a -> b`.
    pub fn transpose(&self, f: &Arrow) -> Arrow {
        let a_dual = self.dual(&f.src);
        let b_dual = self.dual(&f.dst);
        self.chain_all(&[
            self.tensor(&self.coev(&f.src), &self.id(&b_dual)),
            self.tensor_all(&[self.id(&a_dual), f.clone(), self.id(&b_dual)]),
            self.tensor(&self.id(&a_dual), &self.ev(&f.dst)),
        ])
    }

    /// The exponent of `f` against the basis arrow between the given words.
    pub fn coefficient(&self, f: &Arrow, src: &[usize], dst: &[usize]) -> i64 {
        assert!(self.same(&f.src, src) && self.same(&f.dst, dst), "unexpected words");
        f.exp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{standard_cocycle, ThreeCocycle};

    fn check_lambda_cocycle(w: &ThreeCocycle) {
        let words = Words::new(Chain::new(w));
        let ch = words.chain();
        let n = ch.conductor() as i64;
        let samples: Vec<Vec<usize>> = {
            let g = ch.group().order();
            let mut v = vec![vec![]];
            for a in 0..g {
                v.push(vec![a]);
                for b in 0..g {
                    v.push(vec![a, b]);
                }
            }
            v
        };
        for x in &samples {
            for y in &samples {
                for z in &samples {
                    let (px, py, pz) = (ch.product(x), ch.product(y), ch.product(z));
                    let xy = [x.as_slice(), y].concat();
                    let yz = [y.as_slice(), z].concat();
                    let lhs = words.lambda(x, y) + words.lambda(&xy, z);
                    let rhs = ch.w(px, py, pz) + words.lambda(y, z) + words.lambda(x, &yz);
                    assert_eq!((lhs - rhs).rem_euclid(n), 0, "{x:?} {y:?} {z:?}");
                }
            }
        }
    }

    #[test]
    fn lambda_matches_associator() {
        check_lambda_cocycle(&standard_cocycle(3, 1).unwrap());
        check_lambda_cocycle(&standard_cocycle(4, 3).unwrap());
    }

    #[test]
    fn zigzag_identities() {
        for w in [standard_cocycle(2, 1).unwrap(), standard_cocycle(3, 2).unwrap()] {
            let words = Words::new(Chain::new(&w));
            let n = w.conductor() as i64;
            for a in 0..w.group().order() {
                for word in [vec![a], vec![a, (a + 1) % w.group().order()]] {
                    let d = words.dual(&word);
                    // (1 ⊗ ev)(coev ⊗ 1) on W^R and (ev ⊗ 1)(1 ⊗ coev) on W
                    let left = words.then(
                        &words.tensor(&words.coev(&word), &words.id(&d)),
                        &words.tensor(&words.id(&d), &words.ev(&word)),
                    );
                    let right = words.then(
                        &words.tensor(&words.id(&word), &words.coev(&word)),
                        &words.tensor(&words.ev(&word), &words.id(&word)),
                    );
                    assert_eq!(left.exp.rem_euclid(n), 0, "{word:?}");
                    assert_eq!(right.exp.rem_euclid(n), 0, "{word:?}");
                }
            }
        }
    }

    #[test]
    fn tensor_is_associative() {
        let w = standard_cocycle(3, 1).unwrap();
        let words = Words::new(Chain::new(&w));
        let f = words.incl(1, 2);
        let g = words.proj(2, 2);
        let h = words.basis(&[1, 1], &[2]);
        let a = words.tensor(&words.tensor(&f, &g), &h);
        let b = words.tensor(&f, &words.tensor(&g, &h));
        assert_eq!((a.exp - b.exp).rem_euclid(3), 0);
    }
}
