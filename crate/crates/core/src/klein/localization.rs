use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::wedge;
use crate::report::Check;

pub type AVec = Vec<BigInt>;
pub type VVec = Vec<BigRational>;

/// An abelian group `A` with an alternating bilinear `∧: A × A -> V` into a uniquely 2-divisible `V`.
pub trait AltData {
    fn name(&self) -> String;
    fn a_rank(&self) -> usize;
    fn v_dim(&self) -> usize;
    fn wedge(&self, a: &[BigInt], b: &[BigInt]) -> VVec;

    fn half(&self, v: &[BigRational]) -> VVec {
        let two = BigRational::from_integer(2.into());
        v.iter().map(|x| x / &two).collect()
    }

    fn zero_a(&self) -> AVec {
        vec![BigInt::zero(); self.a_rank()]
    }

    fn zero_v(&self) -> VVec {
        vec![BigRational::zero(); self.v_dim()]
    }
}

/// `A = Z²`, `V = Q`, `a ∧ b = det(a, b)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DeterminantModel;

impl AltData for DeterminantModel {
    fn name(&self) -> String {
        "determinant on Z^2".into()
    }

    fn a_rank(&self) -> usize {
        2
    }

    fn v_dim(&self) -> usize {
        1
    }

    fn wedge(&self, a: &[BigInt], b: &[BigInt]) -> VVec {
        vec![BigRational::from_integer(&a[0] * &b[1] - &a[1] * &b[0])]
    }
}

/// `A = Z^r`, `V = Λ²Q^r` in the basis `e_i ∧ e_j`, `i < j`.
#[derive(Clone, Copy, Debug)]
pub struct ExteriorModel {
    pub rank: usize,
}

impl AltData for ExteriorModel {
    fn name(&self) -> String {
        format!("exterior square of Z^{}", self.rank)
    }

    fn a_rank(&self) -> usize {
        self.rank
    }

    fn v_dim(&self) -> usize {
        self.rank * (self.rank - 1) / 2
    }

    fn wedge(&self, a: &[BigInt], b: &[BigInt]) -> VVec {
        wedge(a, b).into_iter().map(BigRational::from_integer).collect()
    }
}

/// `(α, a, t^e)` in `V × A × C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocElement {
    pub v: VVec,
    pub a: AVec,
    pub e: i64,
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn vadd(x: &[BigRational], y: &[BigRational]) -> VVec {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

impl LocElement {
    pub fn identity<D: AltData + ?Sized>(d: &D) -> Self {
        LocElement { v: d.zero_v(), a: d.zero_a(), e: 0 }
    }

    /// `(α, a, t^i)⁻¹ = (-α, -(-1)^i a, t^(-i))`.
    pub fn inverse(&self) -> Self {
        let s = BigInt::from(-sign(self.e));
        LocElement { v: self.v.iter().map(|x| -x).collect(), a: self.a.iter().map(|x| x * &s).collect(), e: -self.e }
    }
}

/// `(α, a, t^i)(β, b, t^j) = (α + β + ((-1)^i / 2) a∧b, a + (-1)^i b, t^(i+j))`.
pub fn kle_mul<D: AltData + ?Sized>(x: &LocElement, y: &LocElement, d: &D) -> LocElement {
    let s = sign(x.e);
    let sb = BigInt::from(s);
    let sr = BigRational::from_integer(sb.clone());
    let w: VVec = d.half(&d.wedge(&x.a, &y.a)).into_iter().map(|t| t * &sr).collect();
    LocElement {
        v: vadd(&vadd(&x.v, &y.v), &w),
        a: x.a.iter().zip(&y.a).map(|(p, q)| p + q * &sb).collect(),
        e: x.e + y.e,
    }
}

/// `w(a, b) = ½ a∧b`.
pub fn w_cocycle<D: AltData + ?Sized>(d: &D, a: &[BigInt], b: &[BigInt]) -> VVec {
    d.half(&d.wedge(a, b))
}

/// `∂w(a, b, c) = w(b, c) - w(a + b, c) + w(a, b + c) - w(a, b)`.
pub fn w_coboundary<D: AltData + ?Sized>(d: &D, a: &[BigInt], b: &[BigInt], c: &[BigInt]) -> VVec {
    let ab: AVec = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let bc: AVec = b.iter().zip(c).map(|(x, y)| x + y).collect();
    let t1 = w_cocycle(d, b, c);
    let t2 = w_cocycle(d, &ab, c);
    let t3 = w_cocycle(d, a, &bc);
    let t4 = w_cocycle(d, a, b);
    (0..d.v_dim()).map(|k| &t1[k] - &t2[k] + &t3[k] - &t4[k]).collect()
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, bound: i64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), bound }
    }

    pub fn a_vec<D: AltData + ?Sized>(&mut self, d: &D) -> AVec {
        (0..d.a_rank()).map(|_| BigInt::from(self.rng.gen_range(-self.bound..=self.bound))).collect()
    }

    pub fn element<D: AltData + ?Sized>(&mut self, d: &D) -> LocElement {
        let v = (0..d.v_dim())
            .map(|_| {
                let n = self.rng.gen_range(-self.bound..=self.bound);
                let q = self.rng.gen_range(1..=4i64);
                BigRational::new(n.into(), q.into())
            })
            .collect();
        LocElement { v, a: self.a_vec(d), e: self.rng.gen_range(-3..=3) }
    }
}

/// Associativity, two-sided identity and inverses on random triples.
pub fn group_law_checks<D: AltData + ?Sized>(d: &D, samples: usize, seed: u64) -> Vec<Check> {
    let mut s = Sampler::new(seed, 20);
    let one = LocElement::identity(d);
    let (mut assoc, mut ident, mut inv) = (0, 0, 0);
    for _ in 0..samples {
        let (x, y, z) = (s.element(d), s.element(d), s.element(d));
        if kle_mul(&kle_mul(&x, &y, d), &z, d) != kle_mul(&x, &kle_mul(&y, &z, d), d) {
            assoc += 1;
        }
        if kle_mul(&x, &one, d) != x || kle_mul(&one, &x, d) != x {
            ident += 1;
        }
        let xi = x.inverse();
        if kle_mul(&x, &xi, d) != one || kle_mul(&xi, &x, d) != one {
            inv += 1;
        }
    }
    let n = d.name();
    vec![
        Check::new(format!("associativity ({n})"), assoc == 0, format!("{samples} triples, {assoc} failures")),
        Check::new(format!("identity ({n})"), ident == 0, format!("{samples} samples, {ident} failures")),
        Check::new(format!("inverses ({n})"), inv == 0, format!("{samples} samples, {inv} failures")),
    ]
}

/// `∂w = 0` on random triples and `w(0, ·) = w(·, 0) = 0`.
pub fn cocycle_w_check<D: AltData + ?Sized>(d: &D, samples: usize, seed: u64) -> Vec<Check> {
    let mut s = Sampler::new(seed, 1000);
    let zero = d.zero_v();
    let (mut bad, mut norm) = (0, 0);
    for _ in 0..samples {
        let (a, b, c) = (s.a_vec(d), s.a_vec(d), s.a_vec(d));
        if w_coboundary(d, &a, &b, &c) != zero {
            bad += 1;
        }
        if w_cocycle(d, &d.zero_a(), &a) != zero || w_cocycle(d, &a, &d.zero_a()) != zero {
            norm += 1;
        }
    }
    let n = d.name();
    vec![
        Check::new(format!("w is a 2-cocycle ({n})"), bad == 0, format!("{samples} triples, {bad} failures")),
        Check::new(format!("w is normalized ({n})"), norm == 0, format!("{samples} samples, {norm} failures")),
    ]
}

/// The `C`-action `(α, a) ↦ (α, -a)` respects the product of `N_w`.
pub fn action_check<D: AltData + ?Sized>(d: &D, samples: usize, seed: u64) -> Check {
    let mut s = Sampler::new(seed, 20);
    let act = |x: &LocElement| LocElement { v: x.v.clone(), a: x.a.iter().map(|t| -t).collect(), e: x.e };
    let mut bad = 0;
    for _ in 0..samples {
        let (mut x, mut y) = (s.element(d), s.element(d));
        x.e = 0;
        y.e = 0;
        if act(&kle_mul(&x, &y, d)) != kle_mul(&act(&x), &act(&y), d) {
            bad += 1;
        }
        // conjugation by t realizes the action
        let t = LocElement { v: d.zero_v(), a: d.zero_a(), e: 1 };
        if kle_mul(&kle_mul(&t, &x, d), &t.inverse(), d) != act(&x) {
            bad += 1;
        }
    }
    Check::new(format!("C acts by automorphisms ({})", d.name()), bad == 0, format!("{samples} samples, {bad} failures"))
}

pub fn commutator<D: AltData + ?Sized>(x: &LocElement, y: &LocElement, d: &D) -> LocElement {
    kle_mul(&kle_mul(&x.inverse(), &y.inverse(), d), &kle_mul(x, y, d), d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedShadow {
    /// Nontrivial sampled elements at each derived level 1, 2, 3.
    pub nontrivial: [usize; 3],
    pub samples: usize,
}

/// Samples commutators of commutators; the group is solvable of class 3 and not metabelian.
pub fn derived_series_shadow<D: AltData + ?Sized>(d: &D, samples: usize, seed: u64) -> DerivedShadow {
    let mut s = Sampler::new(seed, 6);
    let one = LocElement::identity(d);
    let mut level: Vec<LocElement> = (0..2 * samples).map(|_| s.element(d)).collect();
    let mut nontrivial = [0; 3];
    for slot in nontrivial.iter_mut() {
        let next: Vec<LocElement> = level.chunks(2).map(|p| commutator(&p[0], &p[1], d)).collect();
        *slot = next.iter().filter(|x| **x != one).count();
        // pair up consecutive commutators, padded by cycling, for the next level
        let mut paired = next.clone();
        paired.extend(next.iter().skip(1).cloned());
        paired.push(next[0].clone());
        level = paired;
    }
    DerivedShadow { nontrivial, samples }
}

pub fn derived_check<D: AltData + ?Sized>(d: &D, samples: usize, seed: u64) -> Check {
    let sh = derived_series_shadow(d, samples, seed);
    let [g1, g2, g3] = sh.nontrivial;
    Check::new(
        format!("derived series shadow ({})", d.name()),
        g1 > 0 && g2 > 0 && g3 == 0,
        format!("nontrivial commutators at levels 1, 2, 3: {g1}, {g2}, {g3} of {samples}"),
    )
}

pub fn localization_suite(samples: usize, seed: u64) -> Vec<Check> {
    let models: Vec<Box<dyn AltData>> = vec![Box::new(DeterminantModel), Box::new(ExteriorModel { rank: 3 })];
    let mut out = Vec::new();
    for (k, d) in models.iter().enumerate() {
        let seed = seed + 100 * k as u64;
        out.extend(group_law_checks(d.as_ref(), samples, seed));
        out.extend(cocycle_w_check(d.as_ref(), samples, seed + 1));
        out.push(action_check(d.as_ref(), samples.min(2000), seed + 2));
        out.push(derived_check(d.as_ref(), 200, seed + 3));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn el(v: i64, a: [i64; 2], e: i64) -> LocElement {
        LocElement { v: vec![BigRational::from_integer(v.into())], a: a.iter().map(|&x| x.into()).collect(), e }
    }

    #[test]
    fn product_at_level_zero() {
        let d = DeterminantModel;
        let p = kle_mul(&el(0, [1, 0], 0), &el(0, [0, 1], 0), &d);
        assert_eq!(p.v, vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(p.a, vec![BigInt::one(), BigInt::one()]);
        assert_eq!(p.e, 0);
    }

    #[test]
    fn inverse_at_level_zero() {
        let d = DeterminantModel;
        let x = el(3, [2, -5], 0);
        assert_eq!(x.inverse(), el(-3, [-2, 5], 0));
        assert_eq!(kle_mul(&x, &x.inverse(), &d), LocElement::identity(&d));
    }

    #[test]
    fn odd_level_twists() {
        let d = DeterminantModel;
        let p = kle_mul(&el(0, [1, 0], 1), &el(0, [0, 1], 0), &d);
        assert_eq!(p.v, vec![BigRational::new((-1).into(), 2.into())]);
        assert_eq!(p.a, vec![BigInt::one(), -BigInt::one()]);
    }

    #[test]
    fn w_is_normalized_and_closed() {
        let d = ExteriorModel { rank: 3 };
        let a = vec![BigInt::from(1), 2.into(), 3.into()];
        assert_eq!(w_cocycle(&d, &d.zero_a(), &a), d.zero_v());
        assert_eq!(w_coboundary(&d, &a, &a, &a), d.zero_v());
    }

    #[test]
    fn suite_passes_small() {
        for c in localization_suite(300, 7) {
            assert!(c.passed, "{c}");
        }
    }
}
