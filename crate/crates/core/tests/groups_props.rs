use proptest::prelude::*;
use whalg::groups::{standard_cocycle, validate_cocycle, FiniteGroup, ThreeCocycle};

#[test]
fn standard_cocycles_are_valid_up_to_order_eight() {
    for n in 1..=8 {
        for p in 0..n {
            let w = standard_cocycle(n, p).unwrap();
            assert!(validate_cocycle(&w).passed, "n={n} p={p}");
        }
    }
}

#[test]
fn catalog_trivial_cocycles_are_valid() {
    for g in FiniteGroup::standard_catalog() {
        assert!(validate_cocycle(&ThreeCocycle::trivial(&g)).passed, "{}", g.name());
    }
}

proptest! {
    #[test]
    fn products_of_cocycles_are_cocycles(n in 1usize..=8, p in 0usize..8, q in 0usize..8) {
        let w = standard_cocycle(n, p % n).unwrap();
        let v = standard_cocycle(n, q % n).unwrap();
        let prod = w.pointwise_product(&v).unwrap();
        prop_assert!(validate_cocycle(&prod).passed);
        // the classes add: ω_p ω_q = ω_{p+q}
        prop_assert_eq!(prod, standard_cocycle(n, (p + q) % n).unwrap());
    }

    // on Z2 the change at (1,1,1) is itself the nontrivial class
    #[test]
    fn one_changed_value_is_caught(n in 3usize..=5, p in 0usize..5, a in 1usize..5, b in 1usize..5, c in 1usize..5, e in 1u32..5) {
        let w = standard_cocycle(n, p % n).unwrap();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assume!(a != 0 && b != 0 && c != 0);
        let shifted = (w.exponent(a, b, c) + e % w.conductor()) % w.conductor();
        prop_assume!(shifted != w.exponent(a, b, c));
        prop_assert!(!validate_cocycle(&w.with_exponent(a, b, c, shifted)).passed);
    }
}
