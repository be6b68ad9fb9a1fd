//! Exact linear algebra over the Gaussian rationals.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::QiMatrix;
pub use scalar::{GaussianRational, Qi};
pub use subspace::{intersect, quotient_dim, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
  #[error("dimension mismatch: expected {expected}, found {found}")]
  DimensionMismatch { expected: usize, found: usize },
  #[error("denominator subspace is not contained in the numerator")]
  NotContained,
  #[error("matrix is singular")]
  Singular,
  #[error("matrix is not square ({rows}x{cols})")]
  NotSquare { rows: usize, cols: usize },
  #[error("empty list of subspaces")]
  Empty,
}
