//! Exact scalar arithmetic and dense exact linear algebra.
//!
//! Everything here is computed over Q or a fixed real quadratic field
//! Q(sqrt d) with arbitrary-precision rationals; there is no floating
//! point anywhere. All values are immutable after construction and all
//! operations are pure functions.

mod linalg;
mod matrix;
mod scalar;

pub use linalg::{
    determinant, eigensplit, kernel_basis, leading_principal_minors, rank, row_reduce,
    solve_linear, LinearError,
};
pub use matrix::Matrix;
pub use scalar::{ExactScalar, ParseScalarError};
