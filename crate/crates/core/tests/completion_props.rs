mod common;

use common::*;
use hztower::completion::{tower, truncate};
use hztower::exactalg::{IntMatrix, IntPoly};
use hztower::zcmod::{LaurentModule, ZCModule};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Monic `f` of degree `d` with `f(0) = c0` and `f(1) = s`.
fn pinned(d: usize, c0: i64, s: i64, mid: Vec<i64>) -> IntPoly {
    let mut c = vec![c0, 0];
    c.extend(mid.iter().take(d.saturating_sub(2)));
    c.push(1);
    c[1] = s - c.iter().sum::<i64>();
    IntPoly::from_i64(&c)
}

fn pinned_poly(unit_constant: bool) -> impl Strategy<Value = IntPoly> {
    let c0 = if unit_constant { prop_oneof![Just(1i64), Just(-1)].boxed() } else { prop_oneof![-3i64..=-1, 1i64..=3].boxed() };
    (2usize..=4, c0, prop_oneof![Just(1i64), Just(-1)], proptest::collection::vec(-3i64..=3, 2))
        .prop_map(|(d, c0, s, mid)| pinned(d, c0, s, mid))
}

fn jordan_unipotent(m: usize) -> IntMatrix {
    let mut j = IntMatrix::identity(m);
    for k in 0..m.saturating_sub(1) {
        j[(k, k + 1)] = BigInt::one();
    }
    j
}

#[test]
fn root_truncations_have_order_sixteen_to_the_n() {
    let m = ZCModule::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]));
    for n in 1..=8u32 {
        let g = truncate(&m, 2 * n as usize).unwrap().group;
        assert_eq!(g.order(), Some(BigInt::from(16).pow(n)), "level {}", 2 * n);
        assert_eq!(g.exponent(), Some(BigInt::from(4).pow(n)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn transitions_are_surjective_and_equivariant(m in zfinite()) {
        let t = tower(&ZCModule::ZFinite(m), 5).unwrap();
        for tr in &t.transitions {
            prop_assert!(tr.surjective && tr.equivariant);
        }
        if let Some(i) = t.stabilized_at {
            prop_assert!(t.transitions[i - 1..].iter().all(|tr| tr.isomorphism));
        }
    }

    #[test]
    fn laurent_and_matrix_truncations_agree(m in zfinite()) {
        let lm = ZCModule::Laurent(LaurentModule::from_zfinite(&m));
        let zm = ZCModule::ZFinite(m);
        for i in 1..=4 {
            prop_assert_eq!(truncate(&lm, i).unwrap().group, truncate(&zm, i).unwrap().group);
        }
        for tr in &tower(&lm, 4).unwrap().transitions {
            prop_assert!(tr.surjective && tr.equivariant);
        }
    }

    #[test]
    fn n_to_the_i_kills_truncations(m in free_zfinite()) {
        let k = m.gens();
        let n = IntMatrix::identity(k).sub(&m.action).det();
        prop_assume!(!n.is_zero());
        let zm = ZCModule::ZFinite(m);
        for i in 1..=4u32 {
            let e = truncate(&zm, i as usize).unwrap().group.exponent().unwrap();
            prop_assert!(n.pow(i).is_multiple_of(&e), "level {}: exponent {} vs n = {}", i, e, n);
        }
    }

    #[test]
    fn unit_value_at_one_kills_truncations(f in pinned_poly(true)) {
        prop_assert!(f.eval(&BigInt::one()).abs().is_one());
        let m = ZCModule::free(companion(&f));
        for i in 1..=4 {
            prop_assert!(truncate(&m, i).unwrap().group.is_zero());
        }
    }

    #[test]
    fn unipotent_block_plus_unit_part_stabilizes(f in pinned_poly(true), m in 1usize..=4) {
        let a = jordan_unipotent(m).block_diag(&companion(&f));
        let t = tower(&ZCModule::free(a), m + 3).unwrap();
        prop_assert!(t.stabilized_at.is_some_and(|s| s <= m + 1), "{}", t.verdict());
        prop_assert_eq!(t.stages[m].group.order(), None);
        prop_assert_eq!(t.stages[m].group.free_rank, m);
    }
}
