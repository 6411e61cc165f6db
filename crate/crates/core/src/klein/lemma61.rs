use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{exterior_square_matrix, kernel_lattice, lattice_cols, wedge, wedge_pairs, IntMatrix};
use crate::report::Check;
use crate::zcmod::tensor_to_wedge;

/// The action `c = [[-1, 1], [0, -1]]` on `Z²`.
pub fn klein_action() -> IntMatrix {
    IntMatrix::from_i64(&[&[-1, 1], &[0, -1]])
}

/// `d = c - 1`.
pub fn klein_d() -> IntMatrix {
    klein_action().sub(&IntMatrix::identity(2))
}

pub fn d_squared_check() -> Check {
    let d2 = klein_d().pow(2);
    let rhs = klein_action().scale(&BigInt::from(-4));
    Check::new("d^2 = -4c", d2 == rhs, format!("d^2 = {:?}", d2.entries()))
}

/// `d^(2n)(Z²) = 4^n Z²`, compared through Hermite bases.
pub fn lattice_power_check(n: u32) -> Check {
    let lhs = lattice_cols(&klein_d().pow(2 * n));
    let rhs = lattice_cols(&IntMatrix::identity(2).scale(&BigInt::from(4).pow(n)));
    Check::new(format!("d^{} Z^2 = 4^{n} Z^2", 2 * n), lhs == rhs, format!("hermite basis {:?}", lhs.entries()))
}

/// Index of `x e_s` in `X e_1 ⊕ X e_2` with `X = Z^r`.
fn embed(x: &[BigInt], s: usize) -> Vec<BigInt> {
    let r = x.len();
    let mut v = vec![BigInt::from(0); 2 * r];
    v[s * r..(s + 1) * r].clone_from_slice(x);
    v
}

fn add(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

/// The three action formulas of `Λ²ĉ` on `x e1 ∧ x' e1`, `y e2 ∧ y' e2`, `z e1 ∧ z' e2`,
/// checked against the second compound of `c ⊗ 1` on `X = Z^r` for random vectors.
pub fn action_formula_check(r: usize, samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chat = klein_action().kron(&IntMatrix::identity(r));
    let l2 = exterior_square_matrix(&chat);
    let mut rand_vec = || -> Vec<BigInt> { (0..r).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect() };
    let mut bad = 0;
    for _ in 0..samples {
        let (x, x2) = (rand_vec(), rand_vec());
        let (e1x, e1x2, e2x, e2x2) = (embed(&x, 0), embed(&x2, 0), embed(&x, 1), embed(&x2, 1));
        let act = |u: &[BigInt], v: &[BigInt]| l2.mul_vec(&wedge(u, v));
        // Λ²ĉ(x e1 ∧ x' e1) = x e1 ∧ x' e1
        if act(&e1x, &e1x2) != wedge(&e1x, &e1x2) {
            bad += 1;
        }
        // Λ²ĉ(y e2 ∧ y' e2) = y e1 ∧ y' e1 + y e2 ∧ y' e2 - (y e1 ∧ y' e2 - y' e1 ∧ y e2)
        let rhs = sub(
            &add(&wedge(&e1x, &e1x2), &wedge(&e2x, &e2x2)),
            &sub(&wedge(&e1x, &e2x2), &wedge(&e1x2, &e2x)),
        );
        if act(&e2x, &e2x2) != rhs {
            bad += 1;
        }
        // Λ²ĉ(z e1 ∧ z' e2) = -z e1 ∧ z' e1 + z e1 ∧ z' e2
        let rhs = sub(&wedge(&e1x, &e2x2), &wedge(&e1x, &e1x2));
        if act(&e1x, &e2x2) != rhs {
            bad += 1;
        }
    }
    Check::new(
        format!("exterior action formulas on (Z^{r})^2"),
        bad == 0,
        format!("{} samples, {bad} mismatches", samples),
    )
}

/// `ι_∧(x ∧ y) = x ⊗ y - y ⊗ x` as a matrix `Λ²Z^r -> Z^r ⊗ Z^r`.
pub fn iota_wedge(r: usize) -> IntMatrix {
    let pairs = wedge_pairs(r);
    let mut m = IntMatrix::zeros(r * r, pairs.len());
    for (k, &(a, b)) in pairs.iter().enumerate() {
        m[(a * r + b, k)] += BigInt::from(1);
        m[(b * r + a, k)] -= BigInt::from(1);
    }
    m
}

/// `ι_Γ` on the basis `γ₂(e_a)`, `e_a e_b` (`a < b`) of `Γ²Z^r`.
pub fn iota_gamma(r: usize) -> IntMatrix {
    let mut cols = Vec::new();
    for a in 0..r {
        let mut v = vec![BigInt::from(0); r * r];
        v[a * r + a] = BigInt::from(1);
        cols.push(v);
    }
    for (a, b) in wedge_pairs(r) {
        let mut v = vec![BigInt::from(0); r * r];
        v[a * r + b] = BigInt::from(1);
        v[b * r + a] = BigInt::from(1);
        cols.push(v);
    }
    IntMatrix::from_columns(&cols, r * r)
}

pub fn quadratic_functor_checks(r: usize) -> Vec<Check> {
    let pi = tensor_to_wedge(r);
    let iw = iota_wedge(r);
    let ig = iota_gamma(r);
    let n = r * (r - 1) / 2;
    let two = IntMatrix::identity(n).scale(&BigInt::from(2));
    vec![
        Check::new(format!("π_∧ ι_∧ = 2 on Λ²Z^{r}"), pi.mul(&iw) == two, ""),
        Check::new(format!("ι_∧ injective on Λ²Z^{r}"), kernel_lattice(&iw).cols() == 0, ""),
        Check::new(format!("ι_Γ injective on Γ²Z^{r}"), kernel_lattice(&ig).cols() == 0, ""),
        Check::new(
            format!("ker π_∧ = ι_Γ(Γ²Z^{r})"),
            lattice_cols(&kernel_lattice(&pi)) == lattice_cols(&ig),
            "",
        ),
    ]
}

pub fn lemma61_suite() -> Vec<Check> {
    let mut out = vec![d_squared_check()];
    out.extend((1..=8).map(lattice_power_check));
    out.push(action_formula_check(3, 200, 61));
    for r in 2..=4 {
        out.extend(quadratic_functor_checks(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        for c in lemma61_suite() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn wrong_power_fails() {
        let lhs = lattice_cols(&klein_d().pow(2));
        let rhs = lattice_cols(&IntMatrix::identity(2).scale(&BigInt::from(2)));
        assert_ne!(lhs, rhs);
    }
}
