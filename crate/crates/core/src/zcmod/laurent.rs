use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::zfinite::ZFinite;
use crate::error::{Error, Result};
use crate::exactalg::{IntMatrix, IntPoly, QPoly};

/// `t^-shift · poly(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentEntry {
    pub poly: IntPoly,
    pub shift: i64,
}

impl LaurentEntry {
    pub fn new(poly: IntPoly, shift: i64) -> Self {
        LaurentEntry { poly, shift }
    }

    pub fn constant(c: i64) -> Self {
        LaurentEntry { poly: IntPoly::from_i64(&[c]), shift: 0 }
    }

    pub fn zero() -> Self {
        LaurentEntry { poly: IntPoly::zero(), shift: 0 }
    }
}

/// `Z[t, t^-1]^gens / rowspan(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentModule {
    pub gens: usize,
    pub relations: Vec<Vec<LaurentEntry>>,
}

/// Structure of `M ⊗ Q` as a `Q[t, t^-1]`-module.
#[derive(Clone, Debug)]
pub struct RationalStructure {
    /// Monic invariant factors with powers of `x` removed; a zero factor means a free summand.
    pub factors: Vec<QPoly>,
}

impl RationalStructure {
    pub fn finite_rank(&self) -> bool {
        self.factors.iter().all(|f| !f.is_zero())
    }

    pub fn rank(&self) -> Option<usize> {
        self.finite_rank().then(|| self.factors.iter().map(|f| f.degree().unwrap()).sum())
    }

    pub fn chi(&self) -> QPoly {
        self.factors.iter().fold(QPoly::one(), |acc, f| acc.mul(f))
    }

    pub fn mu(&self) -> QPoly {
        self.factors.iter().fold(QPoly::one(), |acc, f| acc.lcm(f))
    }
}

impl LaurentModule {
    pub fn new(gens: usize, relations: Vec<Vec<LaurentEntry>>) -> Self {
        LaurentModule { gens, relations }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, r) in self.relations.iter().enumerate() {
            if r.len() != self.gens {
                return Err(Error::Dimension(format!("relation {i} has {} entries, expected {}", r.len(), self.gens)));
            }
        }
        Ok(())
    }

    /// Presentation of a finitely generated module: relations plus `t e_j - A e_j`.
    pub fn from_zfinite(m: &ZFinite) -> Self {
        let g = m.gens();
        let mut relations = Vec::new();
        for i in 0..m.relations.rows() {
            relations.push(
                m.relations.row(i).iter().map(|c| LaurentEntry::new(IntPoly::constant(c.clone()), 0)).collect(),
            );
        }
        for j in 0..g {
            let row = (0..g)
                .map(|i| {
                    let mut p = IntPoly::constant(-m.action[(i, j)].clone());
                    if i == j {
                        p = p.add(&IntPoly::x());
                    }
                    LaurentEntry::new(p, 0)
                })
                .collect();
            relations.push(row);
        }
        LaurentModule { gens: g, relations }
    }

    /// Rows multiplied through by a power of `t` so all entries are polynomials.
    fn polynomial_rows(&self) -> Vec<Vec<IntPoly>> {
        self.relations
            .iter()
            .map(|row| {
                let s = row.iter().filter(|e| !e.poly.is_zero()).map(|e| e.shift).max().unwrap_or(0);
                row.iter()
                    .map(|e| if e.poly.is_zero() { IntPoly::zero() } else { e.poly.shift((s - e.shift) as usize) })
                    .collect()
            })
            .collect()
    }

    pub fn rational_structure(&self) -> RationalStructure {
        let rows: Vec<Vec<QPoly>> =
            self.polynomial_rows().into_iter().map(|r| r.into_iter().map(|p| p.to_q()).collect()).collect();
        let mut d = invariant_factors(rows, self.gens);
        let x = QPoly::from_i64(&[0, 1]);
        for f in d.iter_mut() {
            while !f.is_zero() && f.coeff(0).is_zero() {
                *f = f.div_exact(&x);
            }
        }
        d.retain(|f| !f.is_one());
        RationalStructure { factors: d }
    }

    /// `M / μ(t) M` as a finitely generated module, for integral monic `μ` with `μ(0) = ±1`.
    /// Equals `M` whenever `μ` annihilates `M`, e.g. when `M` is torsion-free with minimal polynomial `μ`.
    pub fn to_zfinite_mod(&self, mu: &IntPoly) -> Result<ZFinite> {
        let a0 = mu.coeff(0);
        if !mu.is_monic() || !a0.abs().is_one() {
            return Err(Error::Precondition(format!("need monic {mu} with constant term ±1")));
        }
        let d = mu.degree().unwrap();
        let g = self.gens;
        // t^-1 mod μ
        let tinv = IntPoly::new(mu.coeffs()[1..].to_vec()).scale(&-a0.clone());
        let reduce = |p: &IntPoly| p.div_rem_monic(mu).1;
        let entry = |e: &LaurentEntry| -> IntPoly {
            let base = reduce(&e.poly);
            if e.shift >= 0 {
                (0..e.shift).fold(base, |acc, _| reduce(&acc.mul(&tinv)))
            } else {
                (0..-e.shift).fold(base, |acc, _| reduce(&acc.shift(1)))
            }
        };
        let mut rows = Vec::new();
        for rel in &self.relations {
            let reduced: Vec<IntPoly> = rel.iter().map(entry).collect();
            for j in 0..d {
                let mut v = vec![BigInt::zero(); g * d];
                for (k, p) in reduced.iter().enumerate() {
                    let q = reduce(&p.shift(j));
                    for (l, c) in q.coeffs().iter().enumerate() {
                        v[k * d + l] = c.clone();
                    }
                }
                rows.push(v);
            }
        }
        let mut action = IntMatrix::zeros(g * d, g * d);
        for k in 0..g {
            for j in 0..d {
                let img = reduce(&IntPoly::one().shift(j + 1));
                for (l, c) in img.coeffs().iter().enumerate() {
                    action[(k * d + l, k * d + j)] = c.clone();
                }
            }
        }
        Ok(ZFinite::new(IntMatrix::from_rows_with_cols(rows, g * d)?, action))
    }

    /// Image of `t^-shift p(t)` in `Z[s]/(s^i)`, `s = t - 1`.
    pub fn truncated_entry(e: &LaurentEntry, i: usize) -> Vec<BigInt> {
        let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); i];
            for (x, u) in a.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (y, v) in b.iter().enumerate().take(i - x) {
                    out[x + y] += u * v;
                }
            }
            out
        };
        let mut one_plus_s = vec![BigInt::zero(); i];
        one_plus_s[0] = BigInt::one();
        if i > 1 {
            one_plus_s[1] = BigInt::one();
        }
        let inv: Vec<BigInt> = (0..i).map(|j| if j % 2 == 0 { BigInt::one() } else { -BigInt::one() }).collect();
        let mut acc = vec![BigInt::zero(); i];
        let mut power = vec![BigInt::zero(); i];
        power[0] = BigInt::one();
        for c in e.poly.coeffs() {
            for k in 0..i {
                acc[k] += c * &power[k];
            }
            power = mul(&power, &one_plus_s);
        }
        let factor = if e.shift >= 0 { &inv } else { &one_plus_s };
        for _ in 0..e.shift.unsigned_abs() {
            acc = mul(&acc, factor);
        }
        acc
    }
}

/// Invariant factors over the Euclidean domain `Q[x]`; always `gens` of them (zero for free summands).
pub fn invariant_factors(rows: Vec<Vec<QPoly>>, gens: usize) -> Vec<QPoly> {
    let mut m = rows;
    let r = m.len();
    let c = gens;
    let n = r.min(c);
    let deg = |p: &QPoly| p.degree().unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for t in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !m[i][j].is_zero() && best.map_or(true, |(bi, bj)| deg(&m[i][j]) < deg(&m[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if m[i][t].is_zero() {
                    continue;
                }
                let (q, _) = m[i][t].div_rem(&m[t][t]);
                for j in t..c {
                    let v = m[i][j].sub(&q.mul(&m[t][j]));
                    m[i][j] = v;
                }
                dirty |= !m[i][t].is_zero();
            }
            for j in t + 1..c {
                if m[t][j].is_zero() {
                    continue;
                }
                let (q, _) = m[t][j].div_rem(&m[t][t]);
                for row in m.iter_mut().take(r).skip(t) {
                    let v = row[j].sub(&q.mul(&row[t]));
                    row[j] = v;
                }
                dirty |= !m[t][j].is_zero();
            }
            if dirty {
                let mut bi = t;
                let mut bj = t;
                for i in t + 1..r {
                    if !m[i][t].is_zero() && deg(&m[i][t]) < deg(&m[bi][bj]) {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t + 1..c {
                    if !m[t][j].is_zero() && deg(&m[t][j]) < deg(&m[bi][bj]) {
                        (bi, bj) = (t, j);
                    }
                }
                m.swap(t, bi);
                for row in m.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            let p = m[t][t].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !p.divides(&m[i][j])));
            match bad {
                Some(i) => {
                    for j in t..c {
                        let v = m[t][j].add(&m[i][j]);
                        m[t][j] = v;
                    }
                }
                None => break,
            }
        }
        out.push(m[t][t].monic());
    }
    while out.len() < gens {
        out.push(QPoly::zero());
    }
    out
}
