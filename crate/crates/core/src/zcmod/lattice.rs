use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    char_poly, cokernel, exterior_square_matrix, kernel_lattice, wedge, FgAbelian, IntMatrix, IntPoly, QPoly,
    RatLattice, RatMatrix,
};

/// The `Z[t, t^-1]`-span of finitely many vectors in `Q^n`, `t` acting by an invertible rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeModule {
    pub action: RatMatrix,
    pub generators: Vec<Vec<BigRational>>,
}

/// `M_+ = Σ_{s >= 0} T^s · generators` for the integral generator `T` (`A` or `A^-1`).
/// It is finitely generated, `T`-stable, and `M = ∪_k T^-k M_+`.
#[derive(Clone, Debug)]
pub struct TameModel {
    /// `T = A^-1` instead of `A`.
    pub inverse: bool,
    pub plus: RatLattice,
    /// `T` restricted to `M_+`, in the basis of `plus`.
    pub t: IntMatrix,
}

impl TameModel {
    pub fn rank(&self) -> usize {
        self.plus.rank()
    }

    /// `T - I` on `M_+`; its image is `M_+ I` up to a unit.
    pub fn t_minus_one(&self) -> IntMatrix {
        self.t.sub(&IntMatrix::identity(self.rank()))
    }

    /// Matrix of `t` (not `T`) on `M_+ / (T - I)^i M_+`, where `T` is unipotent.
    pub fn action_mod(&self, i: u32) -> IntMatrix {
        if !self.inverse {
            return self.t.clone();
        }
        let n = self.t_minus_one();
        let r = self.rank();
        let mut acc = IntMatrix::zeros(r, r);
        let mut term = IntMatrix::identity(r);
        let neg = n.scale(&-BigInt::one());
        for _ in 0..i {
            acc = acc.add(&term);
            term = term.mul(&neg);
        }
        acc
    }
}

impl LatticeModule {
    pub fn new(action: RatMatrix, generators: Vec<Vec<BigRational>>) -> Self {
        LatticeModule { action, generators }
    }

    pub fn ambient_dim(&self) -> usize {
        self.action.rows()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.action.rows();
        if !self.action.is_square() {
            return Err(Error::Dimension(format!("action is {}x{}", n, self.action.cols())));
        }
        if let Some(g) = self.generators.iter().find(|g| g.len() != n) {
            return Err(Error::Dimension(format!("generator of length {} in dimension {n}", g.len())));
        }
        if self.action.inverse().is_none() {
            return Err(Error::InvalidModule("action not invertible over Q".into()));
        }
        Ok(())
    }

    /// Q-basis of the span `W` of the module.
    pub fn span_basis(&self) -> Vec<Vec<BigRational>> {
        let n = self.ambient_dim();
        let mut vs = self.generators.clone();
        let mut frontier = self.generators.clone();
        for _ in 0..n {
            frontier = frontier.iter().map(|v| self.action.mul_vec(v)).collect();
            vs.extend(frontier.iter().cloned());
        }
        if vs.is_empty() {
            return vec![];
        }
        let (r, piv) = RatMatrix::from_columns(&vs, n).transpose().rref();
        (0..piv.len()).map(|i| r.row_vec(i)).collect()
    }

    /// Action restricted to `W`, in the basis returned by [`Self::span_basis`].
    pub fn restricted_action(&self) -> RatMatrix {
        let basis = self.span_basis();
        let k = basis.len();
        if k == 0 {
            return RatMatrix::zeros(0, 0);
        }
        let b = RatMatrix::from_columns(&basis, self.ambient_dim());
        let images: Vec<Vec<BigRational>> = basis.iter().map(|v| self.action.mul_vec(v)).collect();
        let (r, piv) = b.hstack(&RatMatrix::from_columns(&images, self.ambient_dim())).rref();
        debug_assert_eq!(&piv[..k], &(0..k).collect::<Vec<_>>()[..]);
        r.select_rows(&(0..k).collect::<Vec<_>>()).select_cols(&(k..2 * k).collect::<Vec<_>>())
    }

    /// `Some(false)` if `t` has integral characteristic polynomial on `W`, `Some(true)` if only `t^-1` has.
    pub fn integral_generator(&self) -> Option<bool> {
        let a = self.restricted_action();
        if char_poly(&a).unwrap().is_integral() {
            return Some(false);
        }
        let inv = a.inverse().expect("action invertible");
        char_poly(&inv).unwrap().is_integral().then_some(true)
    }

    pub fn model(&self) -> Result<TameModel> {
        let inverse = self.integral_generator().ok_or_else(|| {
            Error::NotTame("characteristic polynomial is non-integral for both t and t^-1".into())
        })?;
        let t = if inverse { self.action.inverse().unwrap() } else { self.action.clone() };
        let n = self.ambient_dim();
        let mut s = RatLattice::from_vectors(&self.generators, n);
        for _ in 0..=n + 1 {
            let next = s.sum(&s.image(&t));
            if next == s {
                let t_plus = s.restrict(&t).expect("stable lattice");
                return Ok(TameModel { inverse, plus: s, t: t_plus });
            }
            s = next;
        }
        Err(Error::NotStabilized("positive orbit lattice did not stabilize".into()))
    }

    /// `M ∩ ker f(A)`, generated over `Z[C]` by `M_+ ∩ ker f(A)`.
    pub fn annihilator(&self, f: &IntPoly) -> Result<LatticeModule> {
        let m = self.model()?;
        let fa = f.eval_rat_matrix(&self.action);
        let b = m.plus.basis_matrix();
        let (img, _) = fa.mul(&b).clear_denominators();
        let k = kernel_lattice(&img);
        let gens: Vec<Vec<BigRational>> = k
            .columns()
            .iter()
            .map(|c| b.mul_vec(&c.iter().map(|x| BigRational::from_integer(x.clone())).collect::<Vec<_>>()))
            .collect();
        let sub = RatLattice::from_vectors(&gens, self.ambient_dim());
        Ok(LatticeModule::new(self.action.clone(), sub.basis_vectors()))
    }

    /// `M / K` for a subspace `K` (given by a basis) that is action-stable, realized in coordinates of a complement.
    pub fn quotient_by_subspace(&self, k: &[Vec<BigRational>]) -> LatticeModule {
        let n = self.ambient_dim();
        let mut basis: Vec<Vec<BigRational>> = k.to_vec();
        let mut rank = RatMatrix::from_columns(&basis, n).rank();
        for i in 0..n {
            let mut e = vec![BigRational::zero(); n];
            e[i] = BigRational::one();
            basis.push(e);
            let r = RatMatrix::from_columns(&basis, n).rank();
            if r > rank {
                rank = r;
            } else {
                basis.pop();
            }
        }
        let kd = k.len();
        let b = RatMatrix::from_columns(&basis, n);
        let binv = b.inverse().expect("completed basis");
        let conj = binv.mul(&self.action).mul(&b);
        let idx: Vec<usize> = (kd..n).collect();
        let action = conj.select_rows(&idx).select_cols(&idx);
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let c = binv.mul_vec(g);
                c[kd..].to_vec()
            })
            .collect();
        LatticeModule::new(action, gens)
    }

    pub fn invariants(&self) -> Result<FgAbelian> {
        let m = self.model()?;
        Ok(FgAbelian::free(kernel_lattice(&m.t_minus_one()).cols()))
    }

    pub fn coinvariants(&self) -> Result<FgAbelian> {
        let m = self.model()?;
        Ok(cokernel(&m.t_minus_one()))
    }

    pub fn tensor_square(&self) -> Result<LatticeModule> {
        let m = self.model()?;
        let b = m.plus.basis_vectors();
        let n = self.ambient_dim();
        let mut gens = Vec::new();
        for u in &b {
            for v in &b {
                gens.push((0..n * n).map(|k| &u[k / n] * &v[k % n]).collect());
            }
        }
        Ok(LatticeModule::new(self.action.kron(&self.action), gens))
    }

    pub fn exterior_square(&self) -> Result<LatticeModule> {
        let m = self.model()?;
        let b = m.plus.basis_vectors();
        let mut gens = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                gens.push(wedge(&b[i], &b[j]));
            }
        }
        Ok(LatticeModule::new(exterior_square_matrix(&self.action), gens))
    }

    pub fn rank(&self) -> usize {
        self.span_basis().len()
    }

    pub fn min_poly(&self) -> QPoly {
        crate::exactalg::min_poly(&self.restricted_action()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn scalar(n: i64, d: i64) -> LatticeModule {
        LatticeModule::new(RatMatrix::from_rows(vec![vec![q(n, d)]]).unwrap(), vec![vec![q(1, 1)]])
    }

    #[test]
    fn z_one_third() {
        let m = scalar(3, 1);
        let model = m.model().unwrap();
        assert!(!model.inverse);
        assert_eq!(model.rank(), 1);
        assert!(m.invariants().unwrap().is_zero());
        assert_eq!(m.coinvariants().unwrap(), FgAbelian::cyclic(2));
        let inv = scalar(1, 3).model().unwrap();
        assert!(inv.inverse);
    }

    #[test]
    fn untame() {
        assert!(scalar(2, 3).integral_generator().is_none());
        assert!(matches!(scalar(2, 3).model(), Err(Error::NotTame(_))));
    }

    #[test]
    fn positive_orbit_is_stable() {
        // t acts by the companion matrix of x^2 - x - 1 on Z^2, generated by e1 / 2
        let a = RatMatrix::from_i64(&[&[0, 1], &[1, 1]]);
        let m = LatticeModule::new(a.clone(), vec![vec![q(1, 2), q(0, 1)]]);
        let model = m.model().unwrap();
        assert_eq!(model.rank(), 2);
        assert!(model.plus.contains_lattice(&model.plus.image(&a)));
    }

    #[test]
    fn proper_span() {
        // generator inside the eigenline of eigenvalue 2
        let a = RatMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let m = LatticeModule::new(a, vec![vec![q(1, 1), q(0, 1)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.min_poly(), QPoly::from_i64(&[-2, 1]));
    }
}
