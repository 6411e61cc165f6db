use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    cokernel, contains_cols, exterior_square_matrix, lattice_cols, preimage_lattice, smith_normal_form, solve_int,
    solve_int_matrix, wedge, wedge_pairs, FgAbelian, IntMatrix, IntPoly,
};

/// A module whose underlying group is finitely generated: `Z^g / rowspan(relations)` with `t` acting by `v -> A v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZFinite {
    /// `r x g`, one relation per row.
    pub relations: IntMatrix,
    /// `g x g`; column `j` is the image of generator `j`.
    pub action: IntMatrix,
}

/// The torsion-free quotient of a [`ZFinite`] module in an adapted basis.
#[derive(Clone, Debug)]
pub struct FreePart {
    pub rank: usize,
    pub torsion: FgAbelian,
    /// Action on `M / tor`.
    pub action: IntMatrix,
}

impl ZFinite {
    pub fn new(relations: IntMatrix, action: IntMatrix) -> Self {
        ZFinite { relations, action }
    }

    /// `Z^g` with the given action.
    pub fn free(action: IntMatrix) -> Self {
        let g = action.rows();
        ZFinite { relations: IntMatrix::zeros(0, g), action }
    }

    pub fn gens(&self) -> usize {
        self.action.rows()
    }

    /// Relation lattice as columns (`g x r`).
    pub fn relation_cols(&self) -> IntMatrix {
        self.relations.transpose()
    }

    pub fn check_shape(&self) -> Result<()> {
        let g = self.action.rows();
        if !self.action.is_square() {
            return Err(Error::Dimension(format!("action is {}x{}", g, self.action.cols())));
        }
        if self.relations.cols() != g {
            return Err(Error::Dimension(format!(
                "relations have {} columns but there are {g} generators",
                self.relations.cols()
            )));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_shape()?;
        let rel = self.relation_cols();
        let g = self.gens();
        let moved = self.action.mul(&rel);
        if !contains_cols(&rel, &moved) {
            return Err(Error::InvalidModule("action does not preserve the relation subgroup".into()));
        }
        let aug = self.action.hstack(&rel);
        if solve_int_matrix(&aug, &IntMatrix::identity(g)).is_none() {
            return Err(Error::InvalidModule("action not invertible on the presented group".into()));
        }
        Ok(())
    }

    pub fn underlying(&self) -> FgAbelian {
        cokernel(&self.relation_cols())
    }

    pub fn free_part(&self) -> FreePart {
        let g = self.gens();
        let rel = self.relation_cols();
        if rel.cols() == 0 {
            return FreePart { rank: g, torsion: FgAbelian::zero(), action: self.action.clone() };
        }
        let s = smith_normal_form(&rel);
        let k = s.rank();
        let u_inv = s.u.to_rat().inverse().and_then(|m| m.to_int()).expect("unimodular");
        let a = s.u.mul(&self.action).mul(&u_inv);
        let idx: Vec<usize> = (k..g).collect();
        let torsion = FgAbelian::new(0, s.d.iter().take(k).cloned().collect());
        FreePart { rank: g - k, torsion, action: a.select_rows(&idx).select_cols(&idx) }
    }

    /// Basis of `{x : (A - I) x in L}`, the preimage of the invariants.
    fn preimage_of(&self, m: &IntMatrix) -> IntMatrix {
        preimage_lattice(m, &self.relation_cols().pad_empty(self.gens()))
    }

    /// The subquotient `P / L` as a module, for a lattice `L ⊆ P ⊆ Z^g` with `A P ⊆ P`.
    pub fn submodule(&self, p: &IntMatrix) -> ZFinite {
        let g = self.gens();
        let k = p.cols();
        let rel = self.relation_cols();
        let coords = if rel.cols() == 0 {
            IntMatrix::zeros(k, 0)
        } else {
            solve_int_matrix(p, &rel).expect("relations lie in the submodule")
        };
        let action = if k == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            solve_int_matrix(p, &self.action.mul(p)).expect("submodule is action-stable")
        };
        debug_assert_eq!(p.rows(), g);
        ZFinite { relations: coords.transpose(), action }
    }

    /// `Z^g / P` for a lattice `P ⊇ L` with `A P ⊆ P`.
    pub fn quotient(&self, p: &IntMatrix) -> ZFinite {
        let mut rel = self.relations.clone();
        if p.cols() > 0 {
            rel = rel.vstack(&p.transpose());
        }
        let canon = lattice_cols(&rel.transpose());
        let relations = if canon.cols() == 0 { IntMatrix::zeros(0, self.gens()) } else { canon.transpose() };
        ZFinite { relations, action: self.action.clone() }
    }

    /// Lattice `{x : f(A) x in L}` whose image is the annihilator of `f`.
    pub fn annihilator_lattice(&self, f: &IntPoly) -> IntMatrix {
        self.preimage_of(&f.eval_matrix(&self.action))
    }

    pub fn annihilator(&self, f: &IntPoly) -> ZFinite {
        self.submodule(&self.annihilator_lattice(f))
    }

    fn minus_identity(&self) -> IntMatrix {
        self.action.sub(&IntMatrix::identity(self.gens()))
    }

    pub fn invariants(&self) -> FgAbelian {
        self.annihilator(&IntPoly::linear(1)).underlying()
    }

    pub fn coinvariants(&self) -> FgAbelian {
        cokernel(&self.relation_cols().pad_empty(self.gens()).hstack(&self.minus_identity()))
    }

    /// `M ⊗ M` with diagonal action; generator `e_i ⊗ e_j` has index `i * g + j`.
    pub fn tensor_square(&self) -> ZFinite {
        let g = self.gens();
        let mut rows = Vec::new();
        for l in 0..self.relations.rows() {
            let rel = self.relations.row_vec(l);
            for j in 0..g {
                let mut left = vec![BigInt::zero(); g * g];
                let mut right = vec![BigInt::zero(); g * g];
                for i in 0..g {
                    left[i * g + j] = rel[i].clone();
                    right[j * g + i] = rel[i].clone();
                }
                rows.push(left);
                rows.push(right);
            }
        }
        let relations = IntMatrix::from_rows_with_cols(rows, g * g).unwrap();
        ZFinite { relations, action: self.action.kron(&self.action) }
    }

    /// `Λ²M` in the basis `e_a ∧ e_b`, `a < b`.
    pub fn exterior_square(&self) -> ZFinite {
        let g = self.gens();
        let n = g * g.saturating_sub(1) / 2;
        let mut rows = Vec::new();
        for l in 0..self.relations.rows() {
            let rel = self.relations.row_vec(l);
            for j in 0..g {
                let mut e = vec![BigInt::zero(); g];
                e[j] = BigInt::one();
                rows.push(wedge(&rel, &e));
            }
        }
        let relations = IntMatrix::from_rows_with_cols(rows, n).unwrap();
        ZFinite { relations, action: exterior_square_matrix(&self.action) }
    }

    /// Whether `v` represents zero.
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        self.relations.rows() > 0 && solve_int(&self.relation_cols(), v).is_some()
    }

    /// Whether `M = MI`.
    pub fn is_perfect(&self) -> bool {
        self.coinvariants().is_zero()
    }
}

/// Projection `e_i ⊗ e_j -> e_i ∧ e_j` from the tensor square to the exterior square of `Z^g`.
pub fn tensor_to_wedge(g: usize) -> IntMatrix {
    let pairs = wedge_pairs(g);
    let mut m = IntMatrix::zeros(pairs.len(), g * g);
    for (k, &(a, b)) in pairs.iter().enumerate() {
        m[(k, a * g + b)] = BigInt::one();
        m[(k, b * g + a)] = -BigInt::one();
    }
    m
}

impl IntMatrix {
    /// A `rows x 0` placeholder stays well-shaped for hstack.
    pub(crate) fn pad_empty(self, rows: usize) -> IntMatrix {
        if self.cols() == 0 {
            IntMatrix::zeros(rows, 0)
        } else {
            self
        }
    }
}
