use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{contains_cols, IntMatrix};
use crate::report::Check;

fn tensor(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

fn lin(terms: &[(i64, &[i64])]) -> Vec<i64> {
    let n = terms[0].1.len();
    (0..n).map(|k| terms.iter().map(|(c, v)| c * v[k]).sum()).collect()
}

/// `2 x⊗y = (x⊗y - y⊗x) + (x+y)⊗(x+y) - x⊗x - y⊗y`, both sides reduced mod `modulus` when given.
pub fn identity_holds(x: &[i64], y: &[i64], modulus: Option<i64>) -> bool {
    let xy = tensor(x, y);
    let yx = tensor(y, x);
    let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
    let lhs = lin(&[(2, &xy)]);
    let rhs = lin(&[(1, &xy), (-1, &yx), (1, &tensor(&s, &s)), (-1, &tensor(x, x)), (-1, &tensor(y, y))]);
    match modulus {
        None => lhs == rhs,
        Some(m) => lhs.iter().zip(&rhs).all(|(a, b)| (a - b).rem_euclid(m) == 0),
    }
}

/// Subgroup of `(Z/2^k)^(r²)` generated by all `x⊗x` and `x⊗y - y⊗x`, as a column lattice with `2^k Z^(r²)`.
pub fn squares_and_antisymmetrics(r: usize, k: u32) -> IntMatrix {
    let m = 1i64 << k;
    let elems: Vec<Vec<i64>> = (0..m.pow(r as u32))
        .map(|mut code| {
            (0..r)
                .map(|_| {
                    let v = code % m;
                    code /= m;
                    v
                })
                .collect()
        })
        .collect();
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for x in &elems {
        cols.push(tensor(x, x).iter().map(|&v| BigInt::from(v)).collect());
        for y in &elems {
            let a = lin(&[(1, &tensor(x, y)), (-1, &tensor(y, x))]);
            cols.push(a.iter().map(|&v| BigInt::from(v)).collect());
        }
    }
    let n = r * r;
    let base = IntMatrix::identity(n).scale(&BigInt::from(m));
    IntMatrix::from_columns(&cols, n).hstack(&base)
}

pub fn tensor_identity_suite(samples: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut bad = 0;
    for _ in 0..samples {
        let r = rng.gen_range(1..=4);
        let x: Vec<i64> = (0..r).map(|_| rng.gen_range(-50..=50)).collect();
        let y: Vec<i64> = (0..r).map(|_| rng.gen_range(-50..=50)).collect();
        if !identity_holds(&x, &y, None) {
            bad += 1;
        }
    }
    out.push(Check::new("2x⊗y identity on integer vectors", bad == 0, format!("{samples} samples, {bad} failures")));
    let mut bad = 0;
    for _ in 0..samples {
        let k = rng.gen_range(1..=16u32);
        let m = 1i64 << k;
        let r = rng.gen_range(1..=3);
        let x: Vec<i64> = (0..r).map(|_| rng.gen_range(0..m)).collect();
        let y: Vec<i64> = (0..r).map(|_| rng.gen_range(0..m)).collect();
        if !identity_holds(&x, &y, Some(m)) {
            bad += 1;
        }
    }
    out.push(Check::new("2x⊗y identity on truncated 2-adics", bad == 0, format!("{samples} samples, {bad} failures")));
    for k in 1..=3 {
        let s = squares_and_antisymmetrics(1, k);
        let full = contains_cols(&s, &IntMatrix::identity(1));
        out.push(Check::new(
            format!("(Z/2^{k})⊗(Z/2^{k}) generated by squares and antisymmetrics"),
            full,
            "exhaustive",
        ));
    }
    for k in 1..=2 {
        let s = squares_and_antisymmetrics(2, k);
        let twice = contains_cols(&s, &IntMatrix::identity(4).scale(&BigInt::from(2)));
        let full = contains_cols(&s, &IntMatrix::identity(4));
        out.push(Check::new(
            format!("2·((Z/2^{k})²)^⊗2 inside squares and antisymmetrics"),
            twice && !full,
            format!("contains doubles: {twice}, everything: {full}"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_case() {
        assert!(identity_holds(&[1], &[1], None));
        assert!(identity_holds(&[3, -1], &[2, 5], Some(8)));
    }

    #[test]
    fn suite_passes() {
        for c in tensor_identity_suite(500, 81) {
            assert!(c.passed, "{c}");
        }
    }
}
