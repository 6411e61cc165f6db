use num_bigint::BigInt;

use super::zfinite::{tensor_to_wedge, ZFinite};
use crate::exactalg::{cokernel, contains_cols, preimage_lattice, solve_int_matrix, FgAbelian, IntMatrix};

/// The surjection `(M ⊗ M)_C -> (Λ²M)_C` and its kernel.
#[derive(Clone, Debug)]
pub struct SquareCoinvariants {
    pub domain: FgAbelian,
    pub codomain: FgAbelian,
    pub kernel: FgAbelian,
    /// Whether the kernel is stable under `m ⊗ m' -> mt ⊗ m'`, the extra module structure on `(M ⊗ M)_C`.
    pub kernel_stable: bool,
    /// A kernel element (coordinates on `e_i ⊗ e_j`, index `i * g + j`) whose image leaves the kernel.
    pub witness: Option<Vec<BigInt>>,
}

fn coinvariant_relations(m: &ZFinite) -> IntMatrix {
    let n = m.gens();
    m.relation_cols().pad_empty(n).hstack(&m.action.sub(&IntMatrix::identity(n)))
}

pub fn square_coinvariants_map(m: &ZFinite) -> SquareCoinvariants {
    let g = m.gens();
    let tensor = m.tensor_square();
    let ext = m.exterior_square();
    let rel_t = coinvariant_relations(&tensor);
    let rel_e = coinvariant_relations(&ext);
    let domain = cokernel(&rel_t);
    let codomain = cokernel(&rel_e);
    let pi = tensor_to_wedge(g);
    let p = if rel_e.rows() == 0 {
        IntMatrix::identity(g * g)
    } else {
        preimage_lattice(&pi, &rel_e)
    };
    let coords = solve_int_matrix(&p, &rel_t).expect("relations map to zero");
    let kernel = cokernel(&coords);
    let first = m.action.kron(&IntMatrix::identity(g));
    let mut witness = None;
    for j in 0..p.cols() {
        let col = IntMatrix::from_columns(&[first.mul_vec(&p.column(j))], g * g);
        if !contains_cols(&p, &col) {
            witness = Some(p.column(j));
            break;
        }
    }
    SquareCoinvariants { domain, codomain, kernel, kernel_stable: witness.is_none(), witness }
}
