use whalg::double::{build_drinfeld_double, build_pairing, sharp_iso, DoubleError};
use whalg::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};
use whalg::skeleton::{ising_skeleton, pointed_skeleton};
use whalg::wha::{verify_antipode, verify_weak_bialgebra};

#[test]
fn doubles_have_dimension_order_to_the_fourth() {
    for g in FiniteGroup::standard_catalog().into_iter().filter(|g| g.order() == 4) {
        let p = build_pairing(&pointed_skeleton(&ThreeCocycle::trivial(&g))).unwrap();
        let dbl = build_drinfeld_double(&p).unwrap();
        assert_eq!(dbl.dim(), 256, "{}", g.name());
    }
    let p = build_pairing(&pointed_skeleton(&standard_cocycle(4, 1).unwrap())).unwrap();
    let dbl = build_drinfeld_double(&p).unwrap();
    assert_eq!(dbl.dim(), 256);
    assert!(verify_weak_bialgebra(dbl.algebra()).passed);
    assert!(verify_antipode(dbl.algebra()).passed);
}

#[test]
fn sharp_for_z2_cocycles() {
    for p in 0..2 {
        let (_, rep) = sharp_iso(&pointed_skeleton(&standard_cocycle(2, p).unwrap())).unwrap();
        assert!(rep.passed && rep.r_matched, "{rep:?}");
    }
}

#[test]
fn non_pointed_input_is_rejected() {
    assert!(matches!(build_pairing(&ising_skeleton()), Err(DoubleError::NotPointed)));
    assert!(matches!(sharp_iso(&ising_skeleton()), Err(DoubleError::NotPointed)));
}
