use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::cochain::{coboundary, Cochain1, Cochain2, CoeffGroup};
use super::group::GroupHom;
use crate::error::{Error, Result};
use crate::exactalg::{cokernel, smith_normal_form, FgAbelian, IntMatrix};

/// Largest group order accepted by the linear-algebra routines.
pub const LINALG_ORDER_GUARD: usize = 32;

/// Unknowns: `c(g1, g2)` for `g1, g2 != 1`, then `α(h)` for `h != 1`.
struct Layout {
    n: usize,
    m: usize,
}

impl Layout {
    fn c(&self, g1: usize, g2: usize) -> Option<usize> {
        (g1 != 0 && g2 != 0).then(|| (g1 - 1) * (self.n - 1) + (g2 - 1))
    }

    fn alpha(&self, h: usize) -> Option<usize> {
        (h != 0).then(|| (self.n - 1) * (self.n - 1) + h - 1)
    }

    fn len(&self) -> usize {
        (self.n - 1) * (self.n - 1) + self.m - 1
    }
}

/// Solutions of the defining equations modulo one cyclic factor `Z/d` of `A`.
#[derive(Clone, Debug)]
pub struct FactorSpace {
    pub d: u64,
    /// Orders of the cyclic summands of the solution group (those > 1).
    pub orders: Vec<u64>,
    /// Generator vectors (mod `d`) of the summands, in unknown coordinates.
    pub gens: Vec<Vec<i64>>,
    /// Coordinates in the summands for each `B̄²` generator.
    pub boundary_coords: Vec<Vec<i64>>,
}

/// `Z̄²(f, A) = {(c, α) | f*c = -∂α, c a normalized cocycle}`.
#[derive(Clone, Debug)]
pub struct RelativeCocycles {
    pub f: GroupHom,
    pub a: CoeffGroup,
    pub factors: Vec<FactorSpace>,
}

fn add_term(row: &mut [i64], idx: Option<usize>, s: i64) {
    if let Some(i) = idx {
        row[i] += s;
    }
}

fn equations(f: &GroupHom, lay: &Layout) -> Vec<Vec<i64>> {
    let g = &f.codomain;
    let h = &f.domain;
    let (n, m) = (lay.n, lay.m);
    let mut rows = Vec::new();
    for g1 in 1..n {
        for g2 in 1..n {
            for g3 in 1..n {
                let mut r = vec![0i64; lay.len()];
                add_term(&mut r, lay.c(g2, g3), 1);
                add_term(&mut r, lay.c(g.mul(g1, g2), g3), -1);
                add_term(&mut r, lay.c(g1, g.mul(g2, g3)), 1);
                add_term(&mut r, lay.c(g1, g2), -1);
                if r.iter().any(|&x| x != 0) {
                    rows.push(r);
                }
            }
        }
    }
    for h1 in 1..m {
        for h2 in 1..m {
            let mut r = vec![0i64; lay.len()];
            add_term(&mut r, lay.c(f.apply(h1), f.apply(h2)), 1);
            add_term(&mut r, lay.alpha(h1), 1);
            add_term(&mut r, lay.alpha(h.mul(h1, h2)), -1);
            add_term(&mut r, lay.alpha(h2), 1);
            if r.iter().any(|&x| x != 0) {
                rows.push(r);
            }
        }
    }
    rows
}

/// `B̄²` generators `(-∂β, β f)` for `β = δ_g`, in unknown coordinates.
fn boundaries(f: &GroupHom, lay: &Layout) -> Vec<Vec<i64>> {
    let g = &f.codomain;
    let n = lay.n;
    (1..n)
        .map(|b| {
            let beta = |x: usize| i64::from(x == b);
            let mut v = vec![0i64; lay.len()];
            for g1 in 1..n {
                for g2 in 1..n {
                    add_term(&mut v, lay.c(g1, g2), -beta(g1) + beta(g.mul(g1, g2)) - beta(g2));
                }
            }
            for h in 1..lay.m {
                add_term(&mut v, lay.alpha(h), beta(f.apply(h)));
            }
            v
        })
        .collect()
}

fn guard(f: &GroupHom) -> Result<()> {
    let (n, m) = (f.codomain.order(), f.domain.order());
    if n > LINALG_ORDER_GUARD || m > LINALG_ORDER_GUARD {
        return Err(Error::SizeGuard(format!("group orders {m}, {n} exceed {LINALG_ORDER_GUARD}")));
    }
    Ok(())
}

pub fn relative_cocycles(f: &GroupHom, a: &CoeffGroup) -> Result<RelativeCocycles> {
    guard(f)?;
    let lay = Layout { n: f.codomain.order(), m: f.domain.order() };
    let big_n = lay.len();
    let eqs = equations(f, &lay);
    let bnd = boundaries(f, &lay);
    let e = IntMatrix::from_rows_with_cols(
        eqs.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        big_n,
    )?;
    let (diag, v) = if e.rows() == 0 || big_n == 0 {
        (vec![BigInt::zero(); big_n], IntMatrix::identity(big_n))
    } else {
        let s = smith_normal_form(&e);
        let mut d = s.d.clone();
        d.resize(big_n, BigInt::zero());
        (d, s.v)
    };
    let v_inv = if big_n == 0 {
        IntMatrix::zeros(0, 0)
    } else {
        v.to_rat().inverse().and_then(|m| m.to_int()).expect("unimodular")
    };
    let mut factors = Vec::new();
    for &d in a.factors() {
        let dd = BigInt::from(d);
        let mut orders = Vec::new();
        let mut gens = Vec::new();
        let mut slots = Vec::new();
        for (i, di) in diag.iter().enumerate() {
            let gi = dd.gcd(di).to_u64().unwrap();
            if gi > 1 {
                let step = d / gi;
                let col: Vec<i64> = (0..big_n)
                    .map(|r| (&v[(r, i)] * BigInt::from(step)).mod_floor(&dd).to_i64().unwrap())
                    .collect();
                orders.push(gi);
                gens.push(col);
                slots.push((i, step));
            }
        }
        let boundary_coords = bnd
            .iter()
            .map(|b| {
                let bb: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
                let y = v_inv.mul_vec(&bb);
                slots
                    .iter()
                    .map(|&(i, step)| {
                        let yi = y[i].mod_floor(&dd).to_u64().unwrap();
                        debug_assert_eq!(yi % step, 0, "boundary lies in the solution space");
                        (yi / step) as i64
                    })
                    .collect()
            })
            .collect();
        factors.push(FactorSpace { d, orders, gens, boundary_coords });
    }
    Ok(RelativeCocycles { f: f.clone(), a: a.clone(), factors })
}

impl RelativeCocycles {
    /// `Z̄²(f, A)` as an abstract group.
    pub fn group(&self) -> FgAbelian {
        FgAbelian::new(0, self.factors.iter().flat_map(|f| f.orders.iter().map(|&o| BigInt::from(o))).collect())
    }

    pub fn size(&self) -> usize {
        self.factors.iter().flat_map(|f| f.orders.iter()).product::<u64>() as usize
    }

    /// `H²(f, A) = Z̄² / B̄²`.
    pub fn h2(&self) -> FgAbelian {
        let mut total = FgAbelian::zero();
        for fs in &self.factors {
            let k = fs.orders.len();
            if k == 0 {
                continue;
            }
            let mut m = IntMatrix::zeros(k, k + fs.boundary_coords.len());
            for (i, &o) in fs.orders.iter().enumerate() {
                m[(i, i)] = BigInt::from(o);
            }
            for (j, b) in fs.boundary_coords.iter().enumerate() {
                for (i, &x) in b.iter().enumerate() {
                    m[(i, k + j)] = BigInt::from(x);
                }
            }
            total = total.direct_sum(&cokernel(&m));
        }
        total
    }

    fn decode(&self, per_factor: &[Vec<i64>]) -> (Cochain2, Cochain1) {
        let lay = Layout { n: self.f.codomain.order(), m: self.f.domain.order() };
        let comp = |u: usize| -> usize { self.a.encode(&per_factor.iter().map(|x| x[u]).collect::<Vec<_>>()) };
        let mut c = Cochain2::zero(lay.n);
        for g1 in 1..lay.n {
            for g2 in 1..lay.n {
                c.set(g1, g2, comp(lay.c(g1, g2).unwrap()));
            }
        }
        let mut alpha = Cochain1::zero(lay.m);
        for h in 1..lay.m {
            alpha.values[h] = comp(lay.alpha(h).unwrap());
        }
        (c, alpha)
    }

    /// Every element of `Z̄²(f, A)`.
    pub fn elements(&self) -> Vec<(Cochain2, Cochain1)> {
        let big_n = Layout { n: self.f.codomain.order(), m: self.f.domain.order() }.len();
        let per_factor: Vec<Vec<Vec<i64>>> = self
            .factors
            .iter()
            .map(|fs| {
                let mut out = vec![vec![0i64; big_n]];
                for (gen, &o) in fs.gens.iter().zip(&fs.orders) {
                    let mut next = Vec::with_capacity(out.len() * o as usize);
                    for base in &out {
                        for k in 0..o as i64 {
                            next.push(
                                base.iter().zip(gen).map(|(b, g)| (b + k * g).rem_euclid(fs.d as i64)).collect(),
                            );
                        }
                    }
                    out = next;
                }
                out
            })
            .collect();
        let mut combos: Vec<Vec<Vec<i64>>> = vec![vec![]];
        for choices in &per_factor {
            combos = combos
                .into_iter()
                .flat_map(|pre| {
                    choices.iter().map(move |c| {
                        let mut p = pre.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        combos.iter().map(|pf| self.decode(pf)).collect()
    }
}

pub fn relative_h2(f: &GroupHom, a: &CoeffGroup) -> Result<FgAbelian> {
    Ok(relative_cocycles(f, a)?.h2())
}

/// Whether `(c, α) ∈ Z̄²(f, A)`.
pub fn in_relative_cocycles(c: &Cochain2, alpha: &Cochain1, f: &GroupHom, a: &CoeffGroup) -> bool {
    if !c.is_normalized() || !alpha.is_normalized() || !c.is_cocycle(&f.codomain, a) {
        return false;
    }
    let lhs = c.pullback(f);
    let rhs = coboundary(alpha, &f.domain, a).neg(a);
    lhs == rhs
}
