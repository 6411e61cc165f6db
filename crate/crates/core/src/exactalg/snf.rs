use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abelian::FgAbelian;
use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal invariants, `min(rows, cols)` of them, nonzero ones first in a divisibility chain.
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn diag_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, x) in self.d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        let s = &m[(src, j)];
        if !s.is_zero() {
            let v = s * q;
            m[(dst, j)] -= v;
        }
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        let s = &m[(i, src)];
        if !s.is_zero() {
            let v = s * q;
            m[(i, dst)] -= v;
        }
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        let v = -std::mem::take(&mut m[(r, j)]);
        m[(r, j)] = v;
    }
}

/// Nearest-integer quotient, keeps remainders small.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    let two_r: BigInt = &r * 2;
    // floor remainder has the sign of b, so stepping q up always shrinks it
    if two_r.abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Smith normal form with transforms: `u * m * v = diag(d)`.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let n = r.min(c);
    for t in 0..n {
        // minimal nonzero pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !a[(i, j)].is_zero()
                    && best.map_or(true, |(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = round_div(&a[(i, t)], &a[(t, t)]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = round_div(&a[(t, j)], &a[(t, t)]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remainder into pivot position
                let mut bi = t;
                let mut bj = t;
                for i in t + 1..r {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[(bi, bj)].abs() {
                        bi = i;
                        bj = t;
                    }
                }
                for j in t + 1..c {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[(bi, bj)].abs() {
                        bi = t;
                        bj = j;
                    }
                }
                if bi != t {
                    a.swap_rows(t, bi);
                    u.swap_rows(t, bi);
                }
                if bj != t {
                    a.swap_cols(t, bj);
                    v.swap_cols(t, bj);
                }
                continue;
            }
            // row and column are clear; enforce divisibility on the trailing block
            let p = a[(t, t)].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let neg = -BigInt::one();
                    row_axpy(&mut a, t, i, &neg);
                    row_axpy(&mut u, t, i, &neg);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
    }
    let d = (0..n).map(|i| a[(i, i)].clone()).collect();
    SnfResult { d, u, v }
}

/// Row Hermite normal form: returns `(h, u)` with `u * m = h`, `u` unimodular,
/// `h` in row echelon form with positive pivots and entries above pivots reduced into `[0, pivot)`.
/// Zero rows of `h` come last.
pub fn row_hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in row..r {
                if !a[(i, col)].is_zero() && best.map_or(true, |b| a[(i, col)].abs() < a[(b, col)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(row, b);
            u.swap_rows(row, b);
            let mut clean = true;
            for i in row + 1..r {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = round_div(&a[(i, col)], &a[(row, col)]);
                row_axpy(&mut a, i, row, &q);
                row_axpy(&mut u, i, row, &q);
                if !a[(i, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[(row, col)].is_zero() {
            continue;
        }
        if a[(row, col)].is_negative() {
            negate_row(&mut a, row);
            negate_row(&mut u, row);
        }
        let p = a[(row, col)].clone();
        for i in 0..row {
            let q = a[(i, col)].div_floor(&p);
            row_axpy(&mut a, i, row, &q);
            row_axpy(&mut u, i, row, &q);
        }
        pivots.push(col);
        row += 1;
    }
    (a, u, pivots)
}

/// Canonical basis (as rows, HNF) of the lattice spanned by the rows of `m`.
pub fn lattice_rows(m: &IntMatrix) -> IntMatrix {
    let (h, _, piv) = row_hnf(m);
    h.select_rows(&(0..piv.len()).collect::<Vec<_>>())
}

/// Canonical basis (as columns) of the lattice spanned by the columns of `m`.
pub fn lattice_cols(m: &IntMatrix) -> IntMatrix {
    lattice_rows(&m.transpose()).transpose()
}

/// Basis (as columns, Hermite-reduced) of `{x in Z^cols : m x = 0}`.
pub fn kernel_lattice(m: &IntMatrix) -> IntMatrix {
    let (_, u, piv) = row_hnf(&m.transpose());
    let k = piv.len();
    let kern = u.select_rows(&(k..m.cols()).collect::<Vec<_>>());
    let basis = lattice_rows(&kern);
    if basis.rows() == 0 {
        return IntMatrix::zeros(m.cols(), 0);
    }
    basis.transpose()
}

/// Some integer `x` with `m x = b`, if one exists.
pub fn solve_int(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let s = smith_normal_form(m);
    let ub = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, val) in ub.iter().enumerate() {
        let di = s.d.get(i).cloned().unwrap_or_default();
        if di.is_zero() {
            if !val.is_zero() {
                return None;
            }
        } else {
            let (q, r) = val.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Solves `m X = b` column by column.
pub fn solve_int_matrix(m: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let mut cols = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        cols.push(solve_int(m, &b.column(j))?);
    }
    Some(IntMatrix::from_columns(&cols, m.cols()))
}

/// Whether every column of `b` lies in the column lattice of `m`.
pub fn contains_cols(m: &IntMatrix, b: &IntMatrix) -> bool {
    (0..b.cols()).all(|j| solve_int(m, &b.column(j)).is_some())
}

/// Basis (columns) of `{x : m x in span cols(l)}`.
pub fn preimage_lattice(m: &IntMatrix, l: &IntMatrix) -> IntMatrix {
    let n = m.cols();
    if l.cols() == 0 {
        return kernel_lattice(m);
    }
    let big = m.hstack(&l.scale(&-BigInt::one()));
    let k = kernel_lattice(&big);
    let top = k.select_rows(&(0..n).collect::<Vec<_>>());
    lattice_cols(&top).pad_cols_to(n)
}

/// Cokernel of `m: Z^cols -> Z^rows`.
pub fn cokernel(m: &IntMatrix) -> FgAbelian {
    if m.cols() == 0 {
        return FgAbelian::free(m.rows());
    }
    let s = smith_normal_form(m);
    let rank = s.rank();
    FgAbelian::new(m.rows() - rank, s.d.iter().filter(|x| !x.is_zero()).cloned().collect())
}

/// The k-th determinantal divisor (gcd of all k x k minors), used as an independent check of SNF.
pub fn determinantal_divisor(m: &IntMatrix, k: usize) -> BigInt {
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }
    let mut g = BigInt::zero();
    for rs in combos(m.rows(), k) {
        let sub = m.select_rows(&rs);
        for cs in combos(m.cols(), k) {
            g = g.gcd(&sub.select_cols(&cs).det());
        }
    }
    g
}

impl IntMatrix {
    /// Returns `self` unchanged unless it has zero columns, in which case fixes the row count.
    fn pad_cols_to(self, rows: usize) -> IntMatrix {
        if self.cols() == 0 {
            IntMatrix::zeros(rows, 0)
        } else {
            self
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_div_shrinks_remainder() {
        for a in -20i64..=20 {
            for b in [-7i64, -3, -2, -1, 1, 2, 3, 7] {
                let q = round_div(&a.into(), &b.into());
                let r = BigInt::from(a) - q * b;
                assert!(&r.abs() * 2 <= BigInt::from(b.abs()), "{a} {b}");
            }
        }
    }

    #[test]
    fn snf_with_negative_pivots_terminates() {
        let m = IntMatrix::from_i64(&[
            &[3, 0, 0, 0, 0, 1, 0, 2, 2, 0],
            &[0, 3, 0, 0, 0, 0, 2, 1, 0, 2],
            &[0, 0, 3, 0, 0, 1, 0, 2, 0, 2],
            &[0, 0, 0, 3, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 3, 0, 0, 0, 1, 1],
        ]);
        assert_eq!(smith_normal_form(&m).d, vec![BigInt::one(); 5]);
    }
    use crate::exactalg::matrix::int_vec;

    fn check(m: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.diag_matrix(m.rows(), m.cols()));
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        s
    }

    #[test]
    fn snf_small() {
        let s = check(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, int_vec(&[2, 4]));
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, int_vec(&[1, 1, 1]));
        let s = check(&IntMatrix::zeros(2, 3));
        assert_eq!(s.d, int_vec(&[0, 0]));
    }

    #[test]
    fn snf_divisibility_needs_fixup() {
        let s = check(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, int_vec(&[1, 6]));
    }

    #[test]
    fn cokernel_examples() {
        let c = cokernel(&IntMatrix::from_i64(&[&[-2, 1], &[0, -2]]));
        assert_eq!(c, FgAbelian::new(0, int_vec(&[4])));
        assert_eq!(cokernel(&IntMatrix::from_i64(&[&[0]])), FgAbelian::free(1));
        assert_eq!(cokernel(&IntMatrix::from_i64(&[&[-2]])), FgAbelian::cyclic(2));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_lattice(&IntMatrix::from_i64(&[&[-2, 1], &[0, -2]])).cols(), 0);
        let k = kernel_lattice(&IntMatrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, IntMatrix::from_i64(&[&[1], &[-1]]));
        assert_eq!(kernel_lattice(&IntMatrix::zeros(2, 2)), IntMatrix::identity(2));
    }

    #[test]
    fn solve_and_preimage() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_int(&m, &int_vec(&[4, 9])), Some(int_vec(&[2, 3])));
        assert_eq!(solve_int(&m, &int_vec(&[1, 0])), None);
        // {x : 2x in 4Z} = 2Z
        let p = preimage_lattice(&IntMatrix::from_i64(&[&[2]]), &IntMatrix::from_i64(&[&[4]]));
        assert_eq!(p, IntMatrix::from_i64(&[&[2]]));
    }

    #[test]
    fn hnf_is_canonical() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let b = IntMatrix::from_i64(&[&[8, 12], &[2, 4], &[0, 4]]);
        assert_eq!(lattice_rows(&a), lattice_rows(&b));
        assert_eq!(lattice_rows(&a), IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    }
}
