use proptest::prelude::*;
use whalg::builders::{
    build_a_g_omega, build_b_g_omega, build_frobenius_double, build_groupoid_algebra, standard_frobenius, FrobeniusKind,
    Groupoid,
};
use whalg::exactmath::{Cyclotomic, SparseMatrix, SparseTensor3, SparseVec};
use whalg::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};
use whalg::wha::{
    base_algebras, center_dim, is_cocommutative, verify_antipode, verify_quasitriangular, verify_weak_bialgebra,
    verify_weak_bialgebra_with, verify_yang_baxter, Law, RMatrixCandidate, Sweep, WeakHopfAlgebra,
};

fn b_g(n: usize, p: usize) -> WeakHopfAlgebra {
    build_b_g_omega(&standard_cocycle(n, p).unwrap()).unwrap()
}

fn trivial_b(g: &FiniteGroup) -> WeakHopfAlgebra {
    build_b_g_omega(&ThreeCocycle::trivial(g)).unwrap()
}

#[test]
fn builder_examples_pass() {
    assert!(verify_weak_bialgebra(&b_g(2, 0)).passed);
    let grpd = build_groupoid_algebra(&Groupoid::indiscrete(2)).unwrap();
    assert!(verify_weak_bialgebra(&grpd).passed);
    assert!(verify_antipode(&grpd).passed);
    assert!(verify_antipode(&b_g(3, 1)).passed);
    let (a, _) = build_a_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
    assert!(verify_antipode(&a).passed);
}

#[test]
fn zero_counit_fails_a_counit_law() {
    let b = b_g(2, 0).with_counit(SparseVec::new()).unwrap();
    let rep = verify_weak_bialgebra(&b);
    assert!(!rep.passed);
    assert!(matches!(rep.violation.unwrap().law, Law::Counit | Law::CounitFirstLeg | Law::CounitSecondLeg));
}

#[test]
fn identity_antipode_fails_the_first_identity() {
    let b = b_g(2, 0);
    let b = b.with_antipode(SparseMatrix::identity(b.dim(), b.conductor())).unwrap();
    assert_eq!(verify_antipode(&b).violation.unwrap().law, Law::AntipodeTarget);
}

#[test]
fn center_dimensions() {
    let m2 = build_frobenius_double(&standard_frobenius(FrobeniusKind::Matrix(2))).unwrap();
    assert_eq!(center_dim(&m2), 1);
    assert_eq!(center_dim(&b_g(2, 0)), 2);
    let (a, _) = build_a_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
    assert_eq!(center_dim(&a), 4);
}

#[test]
fn cocommutativity() {
    assert!(is_cocommutative(&build_groupoid_algebra(&Groupoid::indiscrete(3)).unwrap()));
    assert!(!is_cocommutative(&b_g(2, 0)));
    assert!(is_cocommutative(&trivial_b(&FiniteGroup::cyclic(1))));
}

#[test]
fn opposites() {
    let b = b_g(3, 1);
    let op = b.opposite().unwrap();
    assert!(verify_antipode(&op).passed);
    assert_eq!(b.coopposite().unwrap().coopposite().unwrap(), b);
}

#[test]
fn quasitriangular_examples() {
    let (a, r) = build_a_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
    let rep = verify_quasitriangular(&a, &r);
    assert!(rep.passed, "{:?}", rep.violation);
    assert!(verify_yang_baxter(&a, &r.r).passed);
    let delta_one = RMatrixCandidate::new(a.delta_one().clone());
    assert!(!verify_quasitriangular(&a, &delta_one).passed);
    assert!(!verify_quasitriangular(&a, &r.flipped()).passed);
}

/// Same structure with one structure constant of `μ` rescaled.
fn with_bent_product(a: &WeakHopfAlgebra, index: usize) -> WeakHopfAlgebra {
    let d = a.dim();
    let two = Cyclotomic::from_int(a.conductor(), 2);
    let entries = a.mu().entries().enumerate().map(|(n, (i, e))| {
        let v = if n == index { &e.value * &two } else { e.value.clone() };
        (i, e.j, e.k, v)
    });
    a.with_mu(SparseTensor3::from_triples((d, d, d), a.conductor(), entries).unwrap()).unwrap()
}

#[test]
fn pruned_and_exhaustive_sweeps_agree() {
    let mut algebras = vec![b_g(2, 1), b_g(3, 1), trivial_b(&FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)))];
    algebras.push(build_a_g_omega(&standard_cocycle(2, 1).unwrap()).unwrap().0);
    algebras.push(build_a_g_omega(&standard_cocycle(3, 1).unwrap()).unwrap().0);
    let bent: Vec<_> = algebras.iter().map(|a| with_bent_product(a, a.mu().nnz() / 2)).collect();
    algebras.extend(bent);
    for a in &algebras {
        assert!(a.dim() <= 81);
        let pruned = verify_weak_bialgebra_with(a, Sweep::Pruned);
        let full = verify_weak_bialgebra_with(a, Sweep::Exhaustive);
        assert_eq!(pruned.passed, full.passed, "dim {}", a.dim());
        assert_eq!(pruned.violation.map(|v| v.law), full.violation.map(|v| v.law));
    }
}

#[test]
fn base_algebra_identities() {
    for a in [b_g(2, 1), b_g(3, 2), build_a_g_omega(&standard_cocycle(2, 1).unwrap()).unwrap().0] {
        let rep = base_algebras(&a);
        assert!(rep.passed, "{:?}", rep.failures);
    }
}

fn idempotent(m: &SparseMatrix) -> bool {
    m.mul(m).unwrap() == *m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn counital_maps_are_idempotent(n in 1usize..=4, p in 0usize..4) {
        let a = b_g(n, p % n);
        prop_assert!(verify_weak_bialgebra(&a).passed);
        let rep = base_algebras(&a);
        prop_assert!(idempotent(&rep.eps_lr));
        prop_assert!(idempotent(&rep.eps_rr));
    }

    #[test]
    fn quasitriangular_implies_yang_baxter(n in 2usize..=3, p in 0usize..3) {
        let (a, r) = build_a_g_omega(&standard_cocycle(n, p % n).unwrap()).unwrap();
        if verify_quasitriangular(&a, &r).passed {
            prop_assert!(verify_yang_baxter(&a, &r.r).passed);
        }
    }
}
