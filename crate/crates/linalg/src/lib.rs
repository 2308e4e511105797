//! Exact dense linear algebra over prime fields GF(p).
//!
//! Every map in the higher layers is an [`FpMatrix`]; vectors are columns and
//! the matrix of a map `V -> W` has shape `dim W x dim V`. All operations are
//! pure and deterministic: a solution, basis or complement is always the one
//! read off the reduced row echelon form, with free variables set to zero.
//!
//! Over GF(2) the eliminations run on bit-packed rows.
//!
//! The prime is carried at runtime inside each matrix rather than as a type
//! parameter, because instances are read from documents that choose it.

mod echelon;
mod error;
pub mod field;
mod matrix;
mod ops;
mod subspace;

pub use echelon::RowEchelon;
pub use error::{LinalgError, Result};
pub use matrix::FpMatrix;
pub use ops::{
    cokernel, inverse, is_injective, is_invertible, is_surjective, kernel_basis, kernel_columns,
    kernel_from_reduced, quotient_space, rank, row_reduce, solve_in_span, solve_linear, RowReduction,
};
pub use subspace::SubspaceBasis;
