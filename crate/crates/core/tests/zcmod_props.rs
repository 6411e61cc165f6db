mod common;

use common::*;
use hztower::exactalg::{lattice_cols, IntMatrix};
use hztower::zcmod::{LaurentModule, ZCModule};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn annihilator_of_quotient(m in zfinite(), f in monic(2, 2), g in monic(2, 2)) {
        let pf = m.annihilator_lattice(&f);
        let q = m.quotient(&pf);
        let lhs = q.annihilator_lattice(&g);
        let pfg = m.annihilator_lattice(&f.mul(&g));
        prop_assert_eq!(lattice_cols(&lhs), lattice_cols(&pfg));
        let (a, b) = (q.submodule(&lhs), q.submodule(&pfg));
        prop_assert_eq!(a.underlying(), b.underlying());
        prop_assert_eq!(a.invariants(), b.invariants());
        prop_assert_eq!(a.coinvariants(), b.coinvariants());
    }

    #[test]
    fn quotients_of_free_modules_are_torsion_free(m in free_zfinite(), f in monic(2, 2), g in monic(2, 2)) {
        let pf = m.annihilator_lattice(&f);
        let q = m.quotient(&pf);
        prop_assert!(q.underlying().torsion_subgroup().is_zero());
        let layer = q.submodule(&m.annihilator_lattice(&f.mul(&g)));
        prop_assert!(layer.underlying().torsion_subgroup().is_zero());
    }

    #[test]
    fn finitely_generated_modules_have_integral_monic_mu(m in zfinite()) {
        let an = ZCModule::ZFinite(m).analyze().unwrap();
        prop_assert!(an.is_tame());
        prop_assert!(an.mu.is_monic());
        let mu = an.mu.to_int();
        prop_assert!(mu.is_some());
        prop_assert!(an.mu.divides(&an.chi));
    }

    #[test]
    fn invariant_free_criteria_agree(m in free_zfinite(), bump in 0usize..3) {
        // Push some samples towards eigenvalue 1.
        let mut a = m.action.clone();
        if bump == 0 {
            a = a.mul(&a);
        }
        let n = a.rows();
        let m = ZCModule::free(a.clone());
        let an = m.analyze().unwrap();
        let det = a.sub(&IntMatrix::identity(n)).det();
        let mu1 = an.mu.to_int().unwrap().eval(&BigInt::one());
        let inv_zero = m.invariants().unwrap().is_zero();
        prop_assert_eq!(an.invariant_free, inv_zero);
        prop_assert_eq!(inv_zero, !det.is_zero());
        prop_assert_eq!(inv_zero, !mu1.is_zero());
    }

    #[test]
    fn exterior_square_rank(m in free_zfinite()) {
        let n = m.gens();
        let e = m.exterior_square();
        prop_assert_eq!(e.gens(), n * (n - 1) / 2);
        prop_assert!(e.underlying().is_free());
        prop_assert_eq!(e.underlying().free_rank, n * (n - 1) / 2);
    }

    #[test]
    fn laurent_round_trip(m in free_zfinite()) {
        let mu = ZCModule::ZFinite(m.clone()).analyze().unwrap().mu.to_int().unwrap();
        let back = LaurentModule::from_zfinite(&m).to_zfinite_mod(&mu).unwrap();
        back.validate().unwrap();
        prop_assert_eq!(back.underlying(), m.underlying());
        prop_assert_eq!(back.invariants(), m.invariants());
        prop_assert_eq!(back.coinvariants(), m.coinvariants());
    }
}
