//! Exact field arithmetic and dense linear algebra over Q and F_p.
//!
//! Everything downstream reduces to matrix identities under one tensor
//! convention: `e_i ⊗ e_j` has flat index `i·n + j` (left factor major).

mod echelon;
mod linalg;
mod matrix;
mod quotient;
pub mod rational;
mod scalar;

pub use echelon::EchelonBasis;
pub use linalg::{invert, kernel_basis, rank, rref, solve, Rref};
pub use matrix::{kron_all, permute_legs, twist, Matrix};
pub use quotient::{quotient_by_iter, quotient_by_rows, QuotientSpace};
pub use rational::Rational;
pub use scalar::{FieldSpec, Scalar};

/// Work size (roughly scalar operations per step) above which loops fan out to rayon.
#[cfg(feature = "parallel")]
pub(crate) const PAR_THRESHOLD: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("field mismatch at {at:?}: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec, at: (usize, usize) },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Kronecker product with a field check.
pub fn kronecker(a: &Matrix, b: &Matrix) -> Result<Matrix, LinAlgError> {
    if a.field() != b.field() {
        return Err(LinAlgError::FieldMismatch { expected: a.field(), found: b.field(), at: (0, 0) });
    }
    Ok(a.kron(b))
}
