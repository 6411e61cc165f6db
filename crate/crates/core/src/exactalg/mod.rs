//! Exact integer and rational linear algebra, integer polynomials.

pub mod abelian;
pub mod charpoly;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod snf;

pub use abelian::FgAbelian;
pub use charpoly::{char_poly, min_poly, vector_min_poly};
pub use lattice::RatLattice;
pub use matrix::{exterior_square_matrix, int_vec, rat_vec, wedge, wedge_pairs, IntMatrix, Matrix, RatMatrix};
pub use poly::{poly_gcd_rational, reciprocal, squarefree_decomposition, IntPoly, QPoly};
pub use snf::{
    cokernel, contains_cols, determinantal_divisor, kernel_lattice, lattice_cols, lattice_rows, preimage_lattice,
    row_hnf, smith_normal_form, solve_int, solve_int_matrix, SnfResult,
};
