//! Hermitian metrics, adjoints, harmonic spaces and symplectic operators.

pub mod cohomology;
pub mod harmonic;
pub mod metric;
pub mod space;
pub mod symplectic;

pub use cohomology::{aeppli_laplacian, bc_laplacian, bott_chern_aeppli, cohomology, quotient, PairReport, Quotient};
pub use harmonic::{all_bidegrees, all_degrees, all_gradings, harmonic, image_in, kernel_on, HarmonicReport};
pub use metric::HermitianMetric;
pub use space::{j_operator, wedge_operator, AntiLinear, InnerProductSpace};
pub use symplectic::{
  dc_and_dlambda, is_almost_kahler, lefschetz_pair, sl2_weight, star_conjugate, LefschetzPair, SymplecticOps,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HodgeError {
  #[error("metric matrix is not Hermitian")]
  NotHermitian,
  #[error("metric is not positive definite (leading minor {minor})")]
  NotPositiveDefinite { minor: usize },
  #[error("metric has dimension {found}, model has {expected}")]
  DimensionMismatch { expected: usize, found: usize },
}
