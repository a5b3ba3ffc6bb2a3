//! Standard skeletal categories and module categories.

use crate::exactmath::{Cyclotomic, Rational};
use crate::groups::{FiniteGroup, ThreeCocycle};

use super::{DualData, FusionRing, SkeletalCategory, SkeletalModule, SkeletonError};

/// Fusion rules of Vec_G: `a ⊗ b = ab`.
pub fn pointed_ring(g: &FiniteGroup) -> FusionRing {
    let labels = g.elements().map(|a| a.to_string()).collect();
    let dual = g.elements().map(|a| g.inv(a)).collect();
    let rules = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| (a, b, g.mul(a, b), 1));
    FusionRing::new(labels, g.identity(), dual, rules).expect("group fusion rules")
}

/// Vec_G^ω with `F^{abc}_{abc}[ab, bc] = ω(a,b,c)`.
pub fn pointed_skeleton(omega: &ThreeCocycle) -> SkeletalCategory {
    let g = omega.group();
    let ring = pointed_ring(g);
    let mut entries = Vec::with_capacity(g.order().pow(3));
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let key = [a, b, c, g.mul(g.mul(a, b), c), g.mul(a, b), g.mul(b, c)];
                entries.push((key, omega.value(a, b, c)));
            }
        }
    }
    SkeletalCategory::new(ring, omega.conductor(), entries).expect("pointed category")
}

/// C regarded as a left module over its reverse: `a ⊙ x = x ⊗ a`, with
/// `L^{abx}_y = (F^{xba}_y)^{-1}`.
pub fn regular_right_module(c: &SkeletalCategory) -> SkeletalModule {
    let ring = c.ring();
    let r = ring.rank();
    let mut action = Vec::new();
    for a in 0..r {
        for x in 0..r {
            for &(y, _) in ring.products(x, a) {
                action.push((a, x, y));
            }
        }
    }
    let mut entries = Vec::new();
    for x in 0..r {
        for b in 0..r {
            for a in 0..r {
                for y in 0..r {
                    if let Some(bl) = c.block(x, b, a, y) {
                        // the left-bracketed basis of (a ⊗' b) ⊙ x is indexed by b ⊗ a
                        for &e in bl.cols() {
                            for &z in bl.rows() {
                                let v = bl.inv_get(e, z).unwrap();
                                if !v.is_zero() {
                                    entries.push(([a, b, x, y, e, z], v.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    SkeletalModule::new(c.rev(), ring.labels().to_vec(), action, entries).expect("regular module")
}

/// C as a left module over itself, `L = F`.
pub fn left_regular_module(c: &SkeletalCategory) -> SkeletalModule {
    let ring = c.ring();
    let r = ring.rank();
    let mut action = Vec::new();
    for a in 0..r {
        for x in 0..r {
            for &(y, _) in ring.products(a, x) {
                action.push((a, x, y));
            }
        }
    }
    SkeletalModule::new(c.clone(), ring.labels().to_vec(), action, c.entries()).expect("left regular module")
}

/// `Vec_G^ω ⊠ (Vec_G^ω)^rev` on labels `(a, b)` (index `a·|G| + b`) with
/// `(a,b)(a',b') = (aa', b'b)`, together with its module `Vec_G` where
/// `(a ⊠ b) ⊙ x = (ax)b`.
pub fn boxtimes_rev_skeleton(omega: &ThreeCocycle) -> (SkeletalCategory, SkeletalModule) {
    let g = omega.group();
    let n = g.order();
    let cond = omega.conductor();
    let pair = |a: usize, b: usize| a * n + b;
    let mul = |p: usize, q: usize| pair(g.mul(p / n, q / n), g.mul(q % n, p % n));
    let labels = (0..n * n).map(|p| format!("{}|{}", p / n, p % n)).collect();
    let dual = (0..n * n).map(|p| pair(g.inv(p / n), g.inv(p % n))).collect();
    let rules = (0..n * n).flat_map(|p| (0..n * n).map(move |q| (p, q, mul(p, q), 1)));
    let ring = FusionRing::new(labels, pair(g.identity(), g.identity()), dual, rules).expect("product ring");
    let root = |e: i64| Cyclotomic::root(cond, e.rem_euclid(cond as i64));
    let w = |a: usize, b: usize, c: usize| omega.exponent(a, b, c) as i64;

    let mut entries = Vec::with_capacity(n.pow(6));
    for p in 0..n * n {
        for q in 0..n * n {
            for s in 0..n * n {
                let (a, b) = (p / n, p % n);
                let (a1, b1) = (q / n, q % n);
                let (a2, b2) = (s / n, s % n);
                let e = w(a, a1, a2) - w(b2, b1, b);
                let key = [p, q, s, mul(mul(p, q), s), mul(p, q), mul(q, s)];
                entries.push((key, root(e)));
            }
        }
    }
    let cat = SkeletalCategory::new(ring, cond, entries).expect("product category");

    let act = |p: usize, x: usize| g.mul(g.mul(p / n, x), p % n);
    let action: Vec<_> = (0..n * n).flat_map(|p| g.elements().map(move |x| (p, x, act(p, x)))).collect();
    let mut lentries = Vec::with_capacity(n.pow(5));
    for p in 0..n * n {
        for q in 0..n * n {
            for x in g.elements() {
                let (a, b) = (p / n, p % n);
                let (a1, b1) = (q / n, q % n);
                let aa1x = g.mul(g.mul(a, a1), x);
                let a1x = g.mul(a1, x);
                let e = -w(aa1x, b1, b) + w(a, a1, x) + w(a, a1x, b1);
                let key = [p, q, x, act(mul(p, q), x), mul(p, q), act(q, x)];
                lentries.push((key, root(e)));
            }
        }
    }
    let objects = g.elements().map(|x| x.to_string()).collect();
    let module = SkeletalModule::new(cat.clone(), objects, action, lentries).expect("product module");
    (cat, module)
}

/// Duality data of a pointed category; `ev_g = ω(g, g⁻¹, g)⁻¹`, `coev_g = 1`.
pub fn dual_data_pointed(c: &SkeletalCategory) -> Result<DualData, SkeletonError> {
    if !c.is_pointed() {
        return Err(SkeletonError::NotPointed);
    }
    DualData::standard(c)
}

/// Fusion rules `τ ⊗ τ = 1 ⊕ τ` on labels `1, t`.
pub fn fib_fusion_ring() -> FusionRing {
    FusionRing::new(
        vec!["1".into(), "t".into()],
        0,
        vec![0, 1],
        [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
    )
    .expect("fibonacci rules")
}

/// The Ising category on labels `1, s, p` over Q(ζ_8).
pub fn ising_skeleton() -> SkeletalCategory {
    const S: usize = 1;
    const P: usize = 2;
    let ring = FusionRing::new(
        vec!["1".into(), "s".into(), "p".into()],
        0,
        vec![0, 1, 2],
        [
            (0, 0, 0, 1),
            (0, S, S, 1),
            (0, P, P, 1),
            (S, 0, S, 1),
            (P, 0, P, 1),
            (S, S, 0, 1),
            (S, S, P, 1),
            (S, P, S, 1),
            (P, S, S, 1),
            (P, P, 0, 1),
        ],
    )
    .expect("ising rules");
    let cond = 8;
    let sqrt2 = &Cyclotomic::root(cond, 1) + &Cyclotomic::root(cond, 7);
    let half_sqrt2 = sqrt2.scale(&Rational::from_pair(1, 2).unwrap());
    let mut entries = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    for e in 0..3 {
                        for f in 0..3 {
                            if ring.n(a, b, e) * ring.n(e, c, d) * ring.n(b, c, f) * ring.n(a, f, d) == 0 {
                                continue;
                            }
                            let v = match (a, b, c, d) {
                                (S, S, S, S) if e == P && f == P => -&half_sqrt2,
                                (S, S, S, S) => half_sqrt2.clone(),
                                (S, P, S, P) | (P, S, P, S) => Cyclotomic::from_int(cond, -1),
                                _ => Cyclotomic::one(cond),
                            };
                            entries.push(([a, b, c, d, e, f], v));
                        }
                    }
                }
            }
        }
    }
    SkeletalCategory::new(ring, cond, entries).expect("ising category")
}
