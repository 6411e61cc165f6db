use hztower::centralext::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn all_homs() -> Vec<GroupHom> {
    let groups = FiniteGroup::small_groups();
    let mut out = Vec::new();
    for h in &groups {
        for g in &groups {
            out.extend(GroupHom::all(h, g));
        }
    }
    out
}

/// Every normalized 2-cochain on `G` with values in `A`, filtered to the cocycles.
fn brute_cocycles(g: &FiniteGroup, a: &CoeffGroup) -> Vec<Cochain2> {
    let n = g.order();
    let free = (n - 1) * (n - 1);
    let total = a.size().pow(free as u32);
    (0..total)
        .filter_map(|mut code| {
            let mut c = Cochain2::zero(n);
            for g1 in 1..n {
                for g2 in 1..n {
                    c.set(g1, g2, code % a.size());
                    code /= a.size();
                }
            }
            c.is_cocycle(g, a).then_some(c)
        })
        .collect()
}

#[test]
fn extension_classes_biject_with_h2() {
    let mut checked = 0;
    for f in all_homs() {
        for d in [2, 3, 4] {
            let a = CoeffGroup::cyclic(d);
            let h2 = relative_h2(&f, &a).unwrap();
            let classes = extension_classes(&f, &a).unwrap();
            assert_eq!(
                BigInt::from(classes.len()),
                h2.order().unwrap(),
                "{:?} -> {:?} {:?} with Z/{d}",
                f.domain,
                f.codomain,
                f.images
            );
            checked += 1;
        }
    }
    assert!(checked > 300);
}

#[test]
fn cocycle_space_matches_brute_force() {
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let v4 = FiniteGroup::abelian(&[2, 2]);
    for g in [&z2, &z3, &v4] {
        for d in [2, 3] {
            let a = CoeffGroup::cyclic(d);
            if a.size().pow(((g.order() - 1) * (g.order() - 1)) as u32) > 1 << 16 {
                continue;
            }
            let f = GroupHom::new(FiniteGroup::trivial(), g.clone(), vec![0]).unwrap();
            let z = relative_cocycles(&f, &a).unwrap();
            let mut ours: Vec<_> = z.elements().into_iter().map(|(c, _)| c.values).collect();
            let mut brute: Vec<_> = brute_cocycles(g, &a).into_iter().map(|c| c.values).collect();
            ours.sort();
            brute.sort();
            assert_eq!(ours, brute, "{g:?} Z/{d}");
        }
    }
}

#[test]
fn relative_h2_examples() {
    let z2 = FiniteGroup::cyclic(2);
    let f = GroupHom::new(FiniteGroup::trivial(), z2.clone(), vec![0]).unwrap();
    assert_eq!(relative_h2(&f, &CoeffGroup::cyclic(2)).unwrap().to_string(), "Z/2");
    let f = GroupHom::new(z2.clone(), FiniteGroup::trivial(), vec![0, 0]).unwrap();
    assert_eq!(relative_h2(&f, &CoeffGroup::cyclic(4)).unwrap().to_string(), "Z/2");
    assert!(relative_h2(&GroupHom::identity(&z2), &CoeffGroup::cyclic(4)).unwrap().is_zero());
    assert!(relative_cocycles(&GroupHom::identity(&FiniteGroup::cyclic(33)), &CoeffGroup::cyclic(2)).is_err());
}

#[test]
fn splitting_and_commutator_lemmas() {
    for g in FiniteGroup::small_groups().into_iter().filter(|g| g.order() <= 4) {
        let a = CoeffGroup::cyclic(2);
        let f = GroupHom::new(FiniteGroup::trivial(), g.clone(), vec![0]).unwrap();
        let exts: Vec<CentralExtension> = relative_cocycles(&f, &a)
            .unwrap()
            .elements()
            .into_iter()
            .take(8)
            .map(|(c, _)| build_extension(&c, &a, &g).unwrap())
            .collect();
        for e1 in &exts {
            for e2 in &exts {
                assert!(zero_morphism_splits(e1, e2).unwrap());
                assert!(morphisms_agree_on_commutators(e1, e2).unwrap());
            }
        }
    }
}

#[test]
fn lift_multiplicativity_sign_convention() {
    // f̃_α(h1) f̃_α(h2) = (α(h1) + α(h2) + c(f h1, f h2), f(h1 h2)) must equal f̃_α(h1 h2)
    let g = FiniteGroup::cyclic(4);
    let h = FiniteGroup::cyclic(4);
    let f = GroupHom::new(h.clone(), g.clone(), vec![0, 2, 0, 2]).unwrap();
    let a = CoeffGroup::cyclic(4);
    for (c, alpha) in relative_cocycles(&f, &a).unwrap().elements() {
        for h1 in 0..4 {
            for h2 in 0..4 {
                let lhs = a.add(a.add(alpha.at(h1), alpha.at(h2)), c.at(f.apply(h1), f.apply(h2)));
                assert_eq!(lhs, alpha.at(h.mul(h1, h2)));
            }
        }
    }
}

fn group_and_cochain() -> impl Strategy<Value = (usize, Vec<usize>, u64)> {
    (0usize..8, prop::collection::vec(0usize..64, 6), 2u64..5)
}

proptest! {
    #[test]
    fn coboundary_squares_to_zero((gi, vals, d) in group_and_cochain()) {
        let g = &FiniteGroup::small_groups()[gi];
        let a = CoeffGroup::cyclic(d);
        let mut alpha = Cochain1::zero(g.order());
        for x in 1..g.order() {
            alpha.values[x] = vals[x - 1] % a.size();
        }
        prop_assert!(coboundary(&alpha, g, &a).is_cocycle(g, &a));
        prop_assert!(build_extension(&coboundary(&alpha, g, &a), &a, g).unwrap().splits());
    }

    #[test]
    fn injected_violations_are_detected((gi, vals, d) in group_and_cochain(), pos in 0usize..25, bump in 1usize..4) {
        let g = &FiniteGroup::small_groups()[gi];
        prop_assume!(g.order() > 1);
        let a = CoeffGroup::cyclic(d);
        let mut alpha = Cochain1::zero(g.order());
        for x in 1..g.order() {
            alpha.values[x] = vals[x - 1] % a.size();
        }
        let mut c = coboundary(&alpha, g, &a);
        let n = g.order() - 1;
        let (g1, g2) = (1 + pos % n, 1 + (pos / n) % n);
        let bump = bump % a.size();
        prop_assume!(bump != 0);
        c.set(g1, g2, a.add(c.at(g1, g2), bump));
        let size = a.size() * g.order();
        let labels = (0..size).map(|x| x.to_string()).collect();
        let table_ok = FiniteGroup::from_table("E", size, extension_table(&c, &a, g), labels).is_ok();
        prop_assert_eq!(build_extension(&c, &a, g).is_ok(), table_ok);
        prop_assert_eq!(table_ok, c.is_cocycle(g, &a));
        let mut delta = Cochain2::zero(g.order());
        delta.set(g1, g2, bump);
        prop_assert_eq!(table_ok, delta.is_cocycle(g, &a));
    }
}
