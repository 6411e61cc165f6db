//! Named verification suites: reference examples, exact identities and seeded property sweeps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::centralext::{
    build_extension, extension_classes, relative_h2, Cochain2, CoeffGroup, FiniteGroup, GroupHom,
};
use crate::classifier::{classify, condition_one, condition_two, h2_finite_route, jordan_witness, perfectm_shortcut, VerdictKind};
use crate::completion::{lemma_completion_certificate, tower, truncate};
use crate::error::{Error, Result};
use crate::exactalg::{
    determinantal_divisor, lattice_cols, min_poly, smith_normal_form, FgAbelian, IntMatrix, IntPoly, QPoly,
};
use crate::gallery;
use crate::grouphom::h2_semidirect;
use crate::klein::{
    self, kle_mul, AltData, lcs_intersection_exponent, lemma61_suite, tensor_identity_suite, localization_suite, DeterminantModel,
    LocElement, Nil2,
};
use crate::report::{Check, SuiteReport};
use crate::zcmod::{square_coinvariants_map, Generator, LatticeModule, Tameness, ZCModule, ZFinite};

const SEED: u64 = 0x6b6c_6569_6e;

pub const SUITES: &[&str] = &[
    "classifier",
    "lemma61",
    "completion",
    "certificate",
    "cohomology",
    "localization",
    "properties",
    "remark",
    "h2",
    "lcs",
    "tensor-identity",
    "worked-examples",
];

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let checks = match name {
        "classifier" => classifier_suite(),
        "lemma61" => lemma61_suite(),
        "completion" => completion_suite(),
        "certificate" => certificate_suite(),
        "cohomology" => cohomology_suite(),
        "localization" => localization_suite(10_000, SEED),
        "properties" => properties_suite(),
        "remark" => remark_suite(),
        "h2" => h2_suite(),
        "lcs" => lcs_suite(),
        "tensor-identity" => tensor_identity_suite(2000, SEED),
        "worked-examples" => worked_examples_suite(),
        _ => return Err(Error::Precondition(format!("unknown suite {name:?}; known suites: {}", SUITES.join(", ")))),
    };
    Ok(SuiteReport::new(name, checks))
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s).expect("listed suites exist")).collect()
}

fn verdict_check(name: &str, m: &ZCModule, want: VerdictKind) -> Check {
    Check::from_result(format!("classify {name}"), classify(m), |v| {
        (v.kind == want, format!("{} (expected {want}), fired {:?}", v.kind, v.certificate.fired))
    })
}

pub fn classifier_suite() -> Vec<Check> {
    vec![
        verdict_check("klein", &gallery::klein(), VerdictKind::AtMostOmegaPlusOne),
        verdict_check("z13", &gallery::z13(), VerdictKind::AtMostOmega),
        verdict_check("root", &gallery::root(), VerdictKind::WitnessAtLeastOmegaPlusTwo),
        verdict_check("perfectm-demo", &gallery::perfectm_demo(), VerdictKind::LessThanOmega),
    ]
}

fn group_check(name: String, m: &ZCModule, i: usize, want: &FgAbelian) -> Check {
    Check::from_result(name, truncate(m, i), |s| (s.group == *want, format!("{}", s.group)))
}

pub fn completion_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let klein = gallery::klein();
    for i in 1..=20 {
        let want = FgAbelian::new(0, vec![BigInt::from(2).pow(i as u32)]);
        out.push(group_check(format!("klein M/MI^{i} = Z/2^{i}"), &klein, i, &want));
    }
    let root = gallery::root();
    for n in 1..=6u32 {
        let q = BigInt::from(4).pow(n);
        let want = FgAbelian::new(0, vec![q.clone(), q]);
        out.push(group_check(format!("root M/MI^{} = (Z/4^{n})^2", 2 * n), &root, 2 * n as usize, &want));
    }
    let z12 = gallery::z12();
    for i in 1..=12 {
        out.push(group_check(format!("Z[1/2] M/MI^{i} = 0"), &z12, i, &FgAbelian::zero()));
    }
    for (name, m, imax) in [("klein", &klein, 20), ("root", &root, 12)] {
        out.push(Check::from_result(format!("{name} tower transitions"), tower(m, imax), |t| {
            let ok = t.transitions.iter().all(|x| x.surjective && x.equivariant);
            (ok, format!("{} transitions surjective and equivariant, {}", t.transitions.len(), t.verdict()))
        }));
    }
    out
}

/// `n^i g ∈ MI^i` proofs, plus `n^i` annihilating the finite stage `M/MI^i`.
pub fn certificate_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for e in gallery::ENTRIES {
        let m = (e.build)();
        let an = match m.analyze() {
            Ok(a) => a,
            Err(err) => {
                out.push(Check::new(format!("certificate {}", e.name), false, format!("error: {err}")));
                continue;
            }
        };
        if !an.invariant_free {
            continue;
        }
        out.push(Check::from_result(format!("certificate {}", e.name), lemma_completion_certificate(&m, 6), |c| {
            (c.holds(), format!("n = {}, {} membership proofs, {} failures", c.n, c.proofs.len(), c.failures.len()))
        }));
        let mut bad = Vec::new();
        let n = match lemma_completion_certificate(&m, 1) {
            Ok(c) => c.n,
            Err(_) => continue,
        };
        for i in 1..=6usize {
            match truncate(&m, i) {
                Ok(s) => {
                    let ni = num_traits::pow(n.clone(), i);
                    let ok = s.group.exponent().is_some_and(|x| (&ni % x).is_zero());
                    if !ok {
                        bad.push(i);
                    }
                }
                Err(_) => bad.push(i),
            }
        }
        out.push(Check::new(
            format!("n^i kills M/MI^i for {}", e.name),
            bad.is_empty(),
            format!("levels 1..6, failures at {bad:?}"),
        ));
    }
    out
}

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

pub fn cohomology_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let groups = FiniteGroup::small_groups();
    for d in [2u64, 3, 4] {
        let a = CoeffGroup::cyclic(d);
        let bad: Vec<String> = groups
            .iter()
            .filter(|g| !relative_h2(&GroupHom::identity(g), &a).is_ok_and(|h| h.is_zero()))
            .map(|g| g.name().to_string())
            .collect();
        out.push(Check::new(
            format!("H^2(id, Z/{d}) = 0"),
            bad.is_empty(),
            format!("{} groups, nonzero for {bad:?}", groups.len()),
        ));
    }
    let z2 = FiniteGroup::cyclic(2);
    let a2 = CoeffGroup::cyclic(2);
    let f = GroupHom::new(FiniteGroup::trivial(), z2.clone(), vec![0]);
    out.push(Check::from_result("H^2(1 -> Z/2, Z/2) = Z/2", f.and_then(|f| relative_h2(&f, &a2)), |h| {
        (*h == FgAbelian::cyclic(2), format!("{h}"))
    }));
    let mut c = Cochain2::zero(2);
    c.set(1, 1, 1);
    out.push(Check::from_result("nontrivial extension of Z/2 by Z/2 has an element of order 4", build_extension(&c, &a2, &z2), |e| {
        let max = (0..e.group.order()).map(|x| e.group.element_order(x)).max().unwrap_or(1);
        (max == 4, format!("largest element order {max}"))
    }));
    let homs = all_homs();
    for d in [2u64, 3] {
        let a = CoeffGroup::cyclic(d);
        let mut bad = 0;
        for f in &homs {
            let ok = match (relative_h2(f, &a), extension_classes(f, &a)) {
                (Ok(h), Ok(cl)) => h.order() == Some(BigInt::from(cl.len())),
                _ => false,
            };
            if !ok {
                bad += 1;
            }
        }
        out.push(Check::new(
            format!("extension classes = |H^2(f, Z/{d})|"),
            bad == 0,
            format!("{} homomorphisms between groups of order <= 6, {bad} mismatches", homs.len()),
        ));
    }
    out
}

fn random_int_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, bound: i64) -> IntMatrix {
    let data = (0..r * c).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(r, c, data).expect("shape")
}

/// Product of random elementary matrices and a signed permutation-free sign flip.
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut a = IntMatrix::identity(n);
    for _ in 0..2 * n + 2 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            if rng.gen_bool(0.3) {
                for k in 0..n {
                    a[(i, k)] = -a[(i, k)].clone();
                }
            }
            continue;
        }
        let q = BigInt::from(rng.gen_range(-2..=2));
        for k in 0..n {
            let v = &a[(j, k)] * &q;
            a[(i, k)] += v;
        }
    }
    a
}

fn random_monic(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64, unit_free: bool) -> IntPoly {
    let deg = rng.gen_range(1..=max_deg);
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    if unit_free && c[0] == 0 {
        c[0] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    c.push(1);
    IntPoly::from_i64(&c)
}

fn snf_property(samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let mut bad = 0;
    for _ in 0..samples {
        let m = random_int_matrix(rng, 4, 4, 10);
        let s = smith_normal_form(&m);
        if s.u.mul(&m).mul(&s.v) != s.diag_matrix(4, 4) {
            bad += 1;
            continue;
        }
        let mut prod = BigInt::one();
        for k in 1..=4 {
            prod *= &s.d[k - 1];
            if prod != determinantal_divisor(&m, k) {
                bad += 1;
                break;
            }
        }
    }
    Check::new("SNF against gcd of minors", bad == 0, format!("{samples} random 4x4 in [-10, 10], {bad} mismatches"))
}

fn condition_property(samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let (mut bad, mut fired) = (0, 0);
    for _ in 0..samples {
        let mu = random_monic(rng, 4, 5, true);
        match (condition_one(&mu), condition_two(&mu)) {
            (Ok(c1), Ok(c2)) => {
                if c1.holds {
                    fired += 1;
                    if !c2.holds {
                        bad += 1;
                    }
                }
            }
            _ => bad += 1,
        }
    }
    Check::new(
        "condition one implies condition two",
        bad == 0,
        format!("{samples} monic polynomials of degree <= 4, {fired} satisfy condition one, {bad} violations"),
    )
}

fn random_zfinite(rng: &mut ChaCha8Rng) -> ZFinite {
    let n = rng.gen_range(1..=3);
    let a = random_unimodular(rng, n);
    let k = [0i64, 0, 2, 3, 4, 6][rng.gen_range(0..6)];
    if k == 0 {
        ZFinite::free(a)
    } else {
        ZFinite::new(IntMatrix::identity(n).scale(&BigInt::from(k)), a)
    }
}

fn same_module(x: &ZFinite, y: &ZFinite) -> bool {
    x.underlying() == y.underlying() && x.invariants() == y.invariants() && x.coinvariants() == y.coinvariants()
}

/// `(M/M^f)^g` computed inside the quotient, against `M^{fg}/M^f` computed from `M`.
fn annihilator_quotient_property(samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let (mut bad, mut nontrivial) = (0, 0);
    for _ in 0..samples {
        let m = random_zfinite(rng);
        let f = random_monic(rng, 2, 3, false);
        let g = random_monic(rng, 2, 3, false);
        let pf = m.annihilator_lattice(&f);
        let q = m.quotient(&pf);
        let lhs_lattice = q.annihilator_lattice(&g);
        let lhs = q.annihilator(&g);
        let pfg = m.annihilator_lattice(&f.mul(&g));
        let rhs = q.submodule(&pfg);
        if lattice_cols(&lhs_lattice) != lattice_cols(&pfg) || !same_module(&lhs, &rhs) {
            bad += 1;
        }
        if !rhs.underlying().is_zero() {
            nontrivial += 1;
        }
    }
    Check::new(
        "(M/M^f)^g = M^fg/M^f",
        bad == 0,
        format!("{samples} random modules, {nontrivial} with nonzero quotient, {bad} mismatches"),
    )
}

fn lcm_property(samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let mut bad = 0;
    for _ in 0..samples {
        let (p, q) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        // repeated blocks make the lcm differ from the product
        let a = random_int_matrix(rng, p, p, 3);
        let b = if rng.gen_bool(0.3) { a.clone() } else { random_int_matrix(rng, q, q, 3) };
        let ok = match (min_poly(&a.to_rat()), min_poly(&b.to_rat()), min_poly(&a.block_diag(&b).to_rat())) {
            (Ok(ma), Ok(mb), Ok(mab)) => ma.lcm(&mb) == mab,
            _ => false,
        };
        if !ok {
            bad += 1;
        }
    }
    Check::new("minimal polynomial of a block sum is the lcm", bad == 0, format!("{samples} random block pairs, {bad} mismatches"))
}

fn exterior_rank_property(samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let mut bad = 0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let mut a = random_int_matrix(rng, n, n, 3);
        while a.det().is_zero() {
            a = random_int_matrix(rng, n, n, 3);
        }
        let den = BigInt::from(rng.gen_range(1..=3));
        let gens: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::new(BigInt::from(i32::from(i == j)), den.clone())).collect())
            .collect();
        let l = LatticeModule::new(a.to_rat(), gens);
        let ok = l.exterior_square().is_ok_and(|e| e.rank() == n * (n - 1) / 2);
        if !ok {
            bad += 1;
        }
    }
    Check::new("rank of the exterior square is n(n-1)/2", bad == 0, format!("{samples} random lattices, {bad} mismatches"))
}

pub fn properties_suite() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    vec![
        snf_property(500, &mut rng),
        condition_property(1000, &mut rng),
        annihilator_quotient_property(200, &mut rng),
        lcm_property(200, &mut rng),
        exterior_rank_property(100, &mut rng),
    ]
}

pub fn remark_suite() -> Vec<Check> {
    let ZCModule::ZFinite(m) = gallery::unipotent() else { unreachable!("unipotent is a ZFinite module") };
    let s = square_coinvariants_map(&m);
    let witness = s.witness.as_ref().map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
    vec![Check::new(
        "kernel of (M⊗M)_C -> (Λ²M)_C is not action-stable for [[1, 1], [0, 1]]",
        !s.kernel_stable && s.witness.is_some(),
        format!("kernel {}, witness on e_i⊗e_j: [{}]", s.kernel, witness.unwrap_or_default()),
    )]
}

fn h2_check(name: &str, m: &ZCModule, want: FgAbelian) -> Check {
    Check::from_result(format!("H_2 for {name}"), h2_semidirect(m), |r| {
        let got = r.h2.as_ref().map_or("ambiguous".to_string(), |h| h.to_string());
        (r.h2.as_ref() == Some(&want), format!("{got} (expected {want}), {}", r.reason))
    })
}

pub fn h2_suite() -> Vec<Check> {
    vec![
        h2_check("klein", &gallery::klein(), FgAbelian::zero()),
        h2_check("root", &gallery::root(), FgAbelian::free(1)),
        h2_check("Z^3 = Z^2 x C", &gallery::trivial2(), FgAbelian::free(3)),
    ]
}

pub fn lcs_suite() -> Vec<Check> {
    let mut out = vec![
        Check::new("[a^2, b^3] = c^6", Nil2::A.pow(2).commutator(Nil2::B.pow(3)) == Nil2::C.pow(6), ""),
        Check::new("tau(a) = a^-1", Nil2::A.tau() == Nil2::A.inv(), ""),
        Check::new("tau(c) = c", Nil2::C.tau() == Nil2::C, ""),
    ];
    let mut values = Vec::new();
    for n in 2..=12 {
        match lcs_intersection_exponent(n) {
            Ok(e) => values.push(e.exponent),
            Err(err) => {
                out.push(Check::new(format!("m({n})"), false, format!("error: {err}")));
                return out;
            }
        }
    }
    let monotone = values.windows(2).all(|w| w[0] <= w[1]);
    out.push(Check::new("m(n) nondecreasing for n = 2..12", monotone, format!("m = {values:?}")));
    out
}

fn poly_check(name: &str, got: &QPoly, want: &[i64]) -> Check {
    let w = QPoly::from_i64(want);
    Check::new(name, *got == w, format!("{got} (expected {w})"))
}

fn analysis_checks(out: &mut Vec<Check>, name: &str, m: &ZCModule, mu: &[i64], gen: Generator) {
    match m.analyze() {
        Ok(a) => {
            out.push(poly_check(&format!("analyze {name}: minimal polynomial"), &a.mu, mu));
            out.push(Check::new(
                format!("analyze {name}: tame"),
                a.tame == Tameness::Yes { generator: gen },
                format!("{:?}, rank {:?}", a.tame, a.rank),
            ));
        }
        Err(e) => out.push(Check::new(format!("analyze {name}"), false, format!("error: {e}"))),
    }
}

pub fn worked_examples_suite() -> Vec<Check> {
    let p = IntPoly::from_i64;
    let mut out = Vec::new();
    for name in ["root", "z13"] {
        let m = gallery::get(name).expect("gallery entry");
        out.push(Check::from_result(format!("validate {name}"), m.validate(), |_| (true, "ok".into())));
    }
    analysis_checks(&mut out, "z13", &gallery::z13(), &[-3, 1], Generator::T);
    analysis_checks(&mut out, "root", &gallery::root(), &[1, 2, 1], Generator::T);
    analysis_checks(&mut out, "klein", &gallery::klein(), &[1, 1], Generator::T);
    out.push(Check::from_result("Λ²Z = 0", ZCModule::free(IntMatrix::identity(1)).exterior_square(), |e| {
        let u = e.underlying();
        (u.as_ref().is_some_and(|u| u.is_zero()), format!("{u:?}"))
    }));
    out.extend(remark_suite());
    for n in [1u32, 2, 3] {
        let q = BigInt::from(4).pow(n);
        let want = FgAbelian::new(0, vec![q.clone(), q]);
        out.push(group_check(format!("root M/MI^{} = (Z/4^{n})^2", 2 * n), &gallery::root(), 2 * n as usize, &want));
    }
    out.push(Check::from_result("klein certificate has n = 2", lemma_completion_certificate(&gallery::klein(), 4), |c| {
        (c.holds() && c.n == BigInt::from(2), format!("n = {}", c.n))
    }));
    let cond = |name: &str, r: Result<crate::classifier::ConditionReport>, want: bool| {
        Check::from_result(name.to_string(), r, |c| (c.holds == want, format!("holds = {} (expected {want})", c.holds)))
    };
    out.push(cond("condition one for x - 3", condition_one(&p(&[-3, 1])), true));
    out.push(cond("condition one for x + 1", condition_one(&p(&[1, 1])), false));
    out.push(cond("condition two for x + 1", condition_two(&p(&[1, 1])), true));
    out.push(cond("condition two for (x + 1)^2", condition_two(&p(&[1, 2, 1])), false));
    let pm = perfectm_shortcut(&p(&[2, -3, 1]));
    out.push(Check::new("perfect-quotient shortcut for (x - 1)(x - 2)", pm.holds, format!("m = {}, f = {}", pm.m, pm.f)));
    out.push(Check::from_result("finite H_2 route for klein", h2_finite_route(&gallery::klein()), |r| {
        (r.holds, format!("ends {} and {}", r.exterior_coinvariants, r.invariants))
    }));
    let ZCModule::ZFinite(root) = gallery::root() else { unreachable!("root is a ZFinite module") };
    out.push(Check::from_result("Jordan witness for root", jordan_witness(&root), |j| (j.holds, j.note.clone())));
    out.extend(classifier_suite());
    out.push(h2_check("klein", &gallery::klein(), FgAbelian::zero()));
    out.push(Check::new("[a^2, b^3] = c^6", Nil2::A.pow(2).commutator(Nil2::B.pow(3)) == Nil2::C.pow(6), ""));
    out.push(Check::new("tau(a) = a^-1", Nil2::A.tau() == Nil2::A.inv(), ""));
    out.push(klein::lemma61::d_squared_check());
    out.push(klein::lemma61::lattice_power_check(1));
    let d = DeterminantModel;
    let a = crate::exactalg::int_vec(&[2, 1]);
    let b = crate::exactalg::int_vec(&[-1, 3]);
    let x = LocElement { v: d.zero_v(), a: a.clone(), e: 0 };
    let y = LocElement { v: d.zero_v(), a: b.clone(), e: 0 };
    let want = LocElement {
        v: vec![BigRational::new(BigInt::from(7), BigInt::from(2))],
        a: crate::exactalg::int_vec(&[1, 4]),
        e: 0,
    };
    let got = kle_mul(&x, &y, &d);
    out.push(Check::new("(0, a, 1)(0, b, 1) = (a∧b/2, a + b, 1)", got == want, format!("{got:?}")));
    out
}
