mod common;

use common::*;
use hztower::exactalg::{
    char_poly, determinantal_divisor, min_poly, reciprocal, smith_normal_form, squarefree_decomposition, IntPoly,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn snf_reconstructs_and_matches_minors(m in int_matrix(4, 4, 10)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.diag_matrix(4, 4));
        prop_assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
        let mut prod = BigInt::one();
        for k in 1..=4 {
            let dk = &s.d[k - 1];
            prop_assert!(!dk.is_negative());
            if k < 4 && !s.d[k].is_zero() {
                prop_assert!((&s.d[k] % dk).is_zero());
            }
            prod *= dk;
            prop_assert_eq!(&prod, &determinantal_divisor(&m, k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn snf_of_rectangular_matrices(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| int_matrix(r, c, 6))) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.diag_matrix(m.rows(), m.cols()));
        let mut prod = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            prod *= &s.d[k - 1];
            prop_assert_eq!(&prod, &determinantal_divisor(&m, k));
        }
    }

    #[test]
    fn min_poly_and_char_poly_divide_each_other(a in rat_matrix(5)) {
        let chi = char_poly(&a).unwrap();
        let mu = min_poly(&a).unwrap();
        prop_assert!(mu.divides(&chi));
        prop_assert!(chi.divides(&mu.pow(a.rows() as u32)));
        prop_assert!(mu.eval_matrix(&a).is_zero());
    }

    #[test]
    fn squarefree_parts_reassemble(parts in proptest::collection::vec(monic(2, 3), 1..4)) {
        let f = parts.iter().enumerate().fold(IntPoly::one(), |acc, (k, p)| acc.mul(&p.pow(k as u32 + 1)));
        let d = squarefree_decomposition(&f).unwrap();
        let back = d.iter().fold(IntPoly::one(), |acc, (&k, s)| acc.mul(&s.pow(k as u32)));
        prop_assert_eq!(back, f);
        for s in d.values() {
            let g = s.to_q().gcd(&s.to_q().derivative());
            prop_assert_eq!(g.degree(), Some(0));
        }
    }

    #[test]
    fn reciprocal_is_an_involution(f in monic_unit_free(5, 6)) {
        let twice = reciprocal(&reciprocal(&f).unwrap()).unwrap();
        prop_assert_eq!(twice.to_q().monic(), f.to_q().monic());
    }

    #[test]
    fn block_sum_minimal_polynomial_is_lcm(a in square_int_matrix(3, 3), b in square_int_matrix(3, 3), repeat in any::<bool>()) {
        let b = if repeat { a.clone() } else { b };
        let ma = min_poly(&a.to_rat()).unwrap();
        let mb = min_poly(&b.to_rat()).unwrap();
        prop_assert_eq!(min_poly(&a.block_diag(&b).to_rat()).unwrap(), ma.lcm(&mb));
    }
}
