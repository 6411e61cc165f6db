mod common;

use common::*;
use hztower::exactalg::IntMatrix;
use hztower::grouphom::{h2_eta_tower, h2_semidirect, induced_end_maps, order_consistent};
use hztower::zcmod::{ZCModule, ZFinite};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn root_to_root_mod_two_is_natural() {
    let a = IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]);
    let m = ZFinite::free(a.clone());
    let n = ZFinite::new(IntMatrix::identity(2).scale(&BigInt::from(2)), a);
    let maps = induced_end_maps(&m, &n, &IntMatrix::identity(2)).unwrap();
    assert!(maps.left_well_defined && maps.right_well_defined);
}

#[test]
fn non_equivariant_maps_are_rejected() {
    let m = ZFinite::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]));
    let f = IntMatrix::from_i64(&[&[1, 0], &[0, 0]]);
    assert!(induced_end_maps(&m, &m, &f).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn h2_orders_are_consistent(m in free_zfinite()) {
        let r = h2_semidirect(&ZCModule::ZFinite(m)).unwrap();
        prop_assert!(order_consistent(&r));
        if let Some(h) = &r.h2 {
            prop_assert_eq!(h.free_rank, r.left_end.free_rank + r.right_end.free_rank);
        }
    }

    #[test]
    fn polynomial_endomorphisms_and_reductions_are_natural(m in free_zfinite(), p in monic(2, 2), k in 2i64..=5) {
        let g = m.gens();
        let f = p.eval_matrix(&m.action);
        let maps = induced_end_maps(&m, &m, &f).unwrap();
        prop_assert!(maps.left_well_defined && maps.right_well_defined);
        let reduced = ZFinite::new(IntMatrix::identity(g).scale(&BigInt::from(k)), m.action.clone());
        let maps = induced_end_maps(&m, &reduced, &f).unwrap();
        prop_assert!(maps.left_well_defined && maps.right_well_defined);
    }

    #[test]
    fn eta_transitions_are_surjective(m in free_zfinite()) {
        let stages = h2_eta_tower(&ZCModule::ZFinite(m), 5).unwrap();
        prop_assert_eq!(stages.len(), 5);
        prop_assert!(stages.iter().all(|s| s.transition_surjective));
    }
}
