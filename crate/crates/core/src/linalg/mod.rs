//! Exact scalars, dense matrices and the polynomial helpers built on them.

pub mod matrix;
pub mod poly;
pub mod scalar;

pub use matrix::{
    axpy, combine, invert, is_zero_vector, kernel_basis, kronecker, solve, solve_many, unit_vector, vec_add,
    vec_scale, vec_sub, zero_vector, Coordinates, IncrementalBasis, Matrix, QuotientSpace, Vector,
};
pub use poly::{roots, Poly};
pub use scalar::{Field, Scalar};
