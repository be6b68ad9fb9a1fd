//! The bigraded invariant complex of an almost-complex Lie algebra.

pub mod basis;
pub mod form;
pub mod model;
pub mod operator;

pub use basis::{build_basis, Algebra, BidegreeBasis, DegreeBasis, FormVector, Grading};
pub use form::{Form, Monomial};
pub use model::{
  bidegree_components, exterior_d, validate, validate_complex, Check, CochainComplex, Components, ModelError, StructureModel,
  ValidationReport,
};
pub use operator::{BlockWitness, GradedOperator};
