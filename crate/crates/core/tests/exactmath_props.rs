use proptest::prelude::*;
use whalg::exactmath::{linalg, Cyclotomic, Rational, SparseMatrix};

const CONDUCTORS: [u32; 5] = [1, 3, 4, 6, 12];

fn scalar(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-4i64..=4, 1i64..=3), n as usize).prop_map(move |pairs| {
        let coeffs: Vec<Rational> = pairs
            .into_iter()
            .map(|(a, b)| Rational::from_pair(a, b).unwrap())
            .collect();
        Cyclotomic::from_power_coeffs(n, &coeffs)
    })
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (scalar(n), scalar(n), scalar(n)))
}

fn sparse_matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec((0..r, 0..c, -2i64..=2, 0i64..3), 0..(r * c + 1)).prop_map(move |es| {
            SparseMatrix::from_triples(
                r,
                c,
                3,
                es.into_iter()
                    .map(|(i, j, v, k)| (i, j, &Cyclotomic::from_int(3, v) * &Cyclotomic::root(3, k))),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_stable(a in prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(scalar)) {
        let again = Cyclotomic::from_power_coeffs(a.conductor(), &a.padded_coeffs());
        prop_assert_eq!(&again, &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rank_nullity(m in sparse_matrix()) {
        let r = linalg::rank(&m);
        prop_assert_eq!(r + linalg::nullspace_dim(&m), m.cols());
        prop_assert_eq!(r, linalg::rref(&m).rank());
        for v in linalg::nullspace(&m) {
            prop_assert!(m.mul_vec(&v).is_empty());
        }
    }

    #[test]
    fn solutions_satisfy_the_system(m in sparse_matrix(), seed in prop::collection::vec(-2i64..=2, 6)) {
        let b: Vec<Cyclotomic> = (0..m.rows()).map(|i| Cyclotomic::from_int(3, seed[i % seed.len()])).collect();
        if let Some(x) = linalg::solve_linear(&m, &b).unwrap() {
            let sx = whalg::exactmath::SparseVec::from_dense(&x);
            let got = m.mul_vec(&sx).to_dense(m.rows(), 3);
            prop_assert_eq!(got, b);
        }
    }
}
