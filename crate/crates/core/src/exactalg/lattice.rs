use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use super::snf::{lattice_cols, solve_int};

/// A finitely generated subgroup of `Q^n`, stored as `basis / den` with `basis` column-Hermite-reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatLattice {
    basis: IntMatrix,
    den: BigInt,
}

impl RatLattice {
    pub fn from_vectors(vs: &[Vec<BigRational>], n: usize) -> Self {
        let den = vs.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let cols: Vec<Vec<BigInt>> = vs
            .iter()
            .map(|v| v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect())
            .collect();
        Self::from_int(&IntMatrix::from_columns(&cols, n), den)
    }

    /// Lattice spanned by the columns of `m / den`.
    pub fn from_int(m: &IntMatrix, den: BigInt) -> Self {
        let n = m.rows();
        let mut basis = if m.cols() == 0 { IntMatrix::zeros(n, 0) } else { lattice_cols(m) };
        if basis.cols() == 0 {
            basis = IntMatrix::zeros(n, 0);
        }
        let g = basis.entries().iter().fold(den.clone(), |g, x| g.gcd(x));
        let basis = basis.map(|x| x / &g);
        RatLattice { basis, den: den / g }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn int_basis(&self) -> (&IntMatrix, &BigInt) {
        (&self.basis, &self.den)
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        let d = BigRational::from_integer(self.den.clone());
        self.basis.map(|x| BigRational::from_integer(x.clone()) / &d)
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigRational>> {
        self.basis_matrix().columns()
    }

    pub fn sum(&self, other: &RatLattice) -> RatLattice {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        RatLattice::from_vectors(&vs, self.dim())
    }

    pub fn image(&self, a: &RatMatrix) -> RatLattice {
        let vs: Vec<_> = self.basis_vectors().iter().map(|v| a.mul_vec(v)).collect();
        RatLattice::from_vectors(&vs, a.rows())
    }

    /// Integer coordinates of `v` in the stored basis.
    pub fn coords(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        let d = BigRational::from_integer(self.den.clone());
        let mut w = Vec::with_capacity(v.len());
        for x in v {
            let y = x * &d;
            if !y.is_integer() {
                return None;
            }
            w.push(y.to_integer());
        }
        if self.rank() == 0 {
            return w.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        solve_int(&self.basis, &w)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, other: &RatLattice) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Matrix of a linear map preserving this lattice, in the stored basis.
    pub fn restrict(&self, a: &RatMatrix) -> Option<IntMatrix> {
        let cols: Option<Vec<Vec<BigInt>>> =
            self.basis_vectors().iter().map(|v| self.coords(&a.mul_vec(v))).collect();
        Some(IntMatrix::from_columns(&cols?, self.rank()))
    }

    pub fn zero_vec(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.dim()]
    }
}
