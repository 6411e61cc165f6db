#![allow(dead_code)]

use hztower::exactalg::{IntMatrix, IntPoly, RatMatrix};
use hztower::zcmod::ZFinite;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub fn int_matrix(r: usize, c: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-bound..=bound, r * c)
        .prop_map(move |v| IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
}

pub fn square_int_matrix(max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(move |n| int_matrix(n, n, bound))
}

pub fn rat_matrix(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec((-4i64..=4, 1i64..=3), n * n).prop_map(move |v| {
            let data = v.into_iter().map(|(p, q)| BigRational::new(p.into(), q.into())).collect();
            RatMatrix::new(n, n, data).unwrap()
        })
    })
}

/// Product of elementary matrices and sign flips.
pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..3 * n + 3).prop_map(move |ops| {
        let mut a = IntMatrix::identity(n);
        for (i, j, q) in ops {
            if i == j {
                if q < 0 {
                    for k in 0..n {
                        a[(i, k)] = -a[(i, k)].clone();
                    }
                }
                continue;
            }
            for k in 0..n {
                let v = &a[(j, k)] * BigInt::from(q);
                a[(i, k)] += v;
            }
        }
        a
    })
}

/// `(P, P^-1)` for a random unimodular `P`.
pub fn unimodular_pair(n: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    unimodular(n).prop_map(|p| {
        let inv = p.to_rat().inverse().unwrap().to_int().unwrap();
        (p, inv)
    })
}

pub fn monic(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg).prop_flat_map(move |d| {
        proptest::collection::vec(-bound..=bound, d).prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64(&c)
        })
    })
}

/// Monic with nonzero constant term.
pub fn monic_unit_free(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    monic(max_deg, bound).prop_map(|f| if f.coeff(0) == BigInt::from(0) { f.add(&IntPoly::one()) } else { f })
}

/// Free or `(Z/k)^n` with a unimodular action, rank at most 3.
pub fn zfinite() -> impl Strategy<Value = ZFinite> {
    (1usize..=3).prop_flat_map(|n| {
        (unimodular(n), prop_oneof![Just(0i64), Just(0), Just(2), Just(3), Just(4), Just(6)]).prop_map(move |(a, k)| {
            if k == 0 {
                ZFinite::free(a)
            } else {
                ZFinite::new(IntMatrix::identity(n).scale(&BigInt::from(k)), a)
            }
        })
    })
}

pub fn free_zfinite() -> impl Strategy<Value = ZFinite> {
    (1usize..=3).prop_flat_map(|n| unimodular(n).prop_map(ZFinite::free))
}

/// Companion matrix of a monic polynomial: `t` acting on `Z[x]/(f)` in the basis `1, x, ...`.
pub fn companion(f: &IntPoly) -> IntMatrix {
    let d = f.degree().unwrap();
    let mut a = IntMatrix::zeros(d, d);
    for j in 0..d {
        if j + 1 < d {
            a[(j + 1, j)] = BigInt::from(1);
        }
        a[(j, d - 1)] = -f.coeff(j);
    }
    a
}
