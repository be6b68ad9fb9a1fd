//! Scalar literals, manifold files and the built-in catalog.

pub mod catalog;
pub mod manifold;
pub mod report;
pub mod scalar;

pub use catalog::{catalog, catalog_names, catalog_source, UnknownManifold};
pub use manifold::{parse_manifold, write_manifold, ManifoldFile, RealCoframe};
pub use report::{BasisBlock, IdentityRow, ReportDocument, Table};
pub use scalar::parse_scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
  #[error("line {line}, column {col}: {message}")]
  Syntax { line: usize, col: usize, message: String },
  #[error("line {line}, column {col}: {message}")]
  Semantic { line: usize, col: usize, message: String },
  #[error("invalid model: {message}")]
  Invalid { message: String },
}
