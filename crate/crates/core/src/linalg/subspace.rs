//! Linear subspaces of Q(i)^N given by a column basis.

use num_traits::Zero;

use super::{matrix::QiMatrix, scalar::Qi, LinalgError};

/// A subspace of `Q(i)^ambient_dim`, stored as a matrix whose columns are a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
  ambient_dim: usize,
  basis: QiMatrix,
}

impl Subspace {
  pub fn zero(ambient_dim: usize) -> Self {
    Self { ambient_dim, basis: QiMatrix::zeros(ambient_dim, 0) }
  }

  pub fn full(ambient_dim: usize) -> Self {
    Self { ambient_dim, basis: QiMatrix::identity(ambient_dim) }
  }

  /// Span of arbitrary vectors. The stored basis is the reduced row echelon
  /// basis, so equal spans built this way have equal bases.
  pub fn span(ambient_dim: usize, vectors: &[Vec<Qi>]) -> Self {
    if vectors.is_empty() {
      return Self::zero(ambient_dim);
    }
    let rows = QiMatrix::from_rows(ambient_dim, vectors.to_vec());
    let (r, pivots) = rows.rref();
    let columns: Vec<Vec<Qi>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    Self { ambient_dim, basis: QiMatrix::from_columns(ambient_dim, &columns) }
  }

  /// Wraps columns already known to be independent.
  pub(crate) fn from_independent(ambient_dim: usize, basis: QiMatrix) -> Self {
    debug_assert_eq!(basis.rows(), ambient_dim);
    Self { ambient_dim, basis }
  }

  pub fn ambient_dim(&self) -> usize {
    self.ambient_dim
  }

  pub fn dim(&self) -> usize {
    self.basis.cols()
  }

  pub fn is_zero(&self) -> bool {
    self.dim() == 0
  }

  /// Basis vectors as columns.
  pub fn basis(&self) -> &QiMatrix {
    &self.basis
  }

  pub fn vectors(&self) -> Vec<Vec<Qi>> {
    self.basis.columns()
  }

  pub fn contains(&self, v: &[Qi]) -> bool {
    assert_eq!(v.len(), self.ambient_dim, "vector length");
    if v.iter().all(Zero::is_zero) {
      return true;
    }
    self.basis.solve(v).is_some()
  }

  /// `other ⊆ self`.
  pub fn contains_subspace(&self, other: &Subspace) -> bool {
    self.ambient_dim == other.ambient_dim
      && other.dim() <= self.dim()
      && (other.is_zero() || self.basis.hstack(&other.basis).rank() == self.dim())
  }

  pub fn span_eq(&self, other: &Subspace) -> bool {
    self.dim() == other.dim() && self.contains_subspace(other)
  }

  pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
    self.check_ambient(other)?;
    let mut vs = self.vectors();
    vs.extend(other.vectors());
    Ok(Subspace::span(self.ambient_dim, &vs))
  }

  pub fn intersect_with(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
    self.check_ambient(other)?;
    if self.is_zero() || other.is_zero() {
      return Ok(Subspace::zero(self.ambient_dim));
    }
    let k = self.basis.hstack(&other.basis.neg()).kernel();
    let a = self.dim();
    let vs: Vec<Vec<Qi>> = k.vectors().iter().map(|x| self.basis.mul_vec(&x[..a])).collect();
    Ok(Subspace::span(self.ambient_dim, &vs))
  }

  /// `dim self − dim denominator`, requiring `denominator ⊆ self`.
  pub fn quotient_dim(&self, denominator: &Subspace) -> Result<usize, LinalgError> {
    self.check_ambient(denominator)?;
    if !self.contains_subspace(denominator) {
      return Err(LinalgError::NotContained);
    }
    Ok(self.dim() - denominator.dim())
  }

  /// Coordinates of `v` in this basis, if `v` lies in the subspace.
  pub fn coordinates(&self, v: &[Qi]) -> Option<Vec<Qi>> {
    self.basis.solve(v)
  }

  /// Image under a linear map with `ambient_dim` columns.
  pub fn map(&self, m: &QiMatrix) -> Subspace {
    assert_eq!(m.cols(), self.ambient_dim, "map source dimension");
    let vs: Vec<Vec<Qi>> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
    Subspace::span(m.rows(), &vs)
  }

  fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
    if self.ambient_dim != other.ambient_dim {
      return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
    }
    Ok(())
  }
}

/// Intersection of a non-empty list of subspaces of a common ambient space.
pub fn intersect(spaces: &[Subspace]) -> Result<Subspace, LinalgError> {
  let (first, rest) = spaces.split_first().ok_or(LinalgError::Empty)?;
  rest.iter().try_fold(first.clone(), |acc, s| acc.intersect_with(s))
}

/// `dim numerator − dim denominator`, requiring containment.
pub fn quotient_dim(numerator: &Subspace, denominator: &Subspace) -> Result<usize, LinalgError> {
  numerator.quotient_dim(denominator)
}

#[cfg(test)]
mod tests {
  use num_traits::One;
  use proptest::prelude::*;

  use super::*;

  fn e(n: usize, k: usize) -> Vec<Qi> {
    let mut v = vec![Qi::zero(); n];
    v[k] = Qi::one();
    v
  }

  #[test]
  fn coordinate_planes_meet_in_a_line() {
    let a = Subspace::span(3, &[e(3, 0), e(3, 1)]);
    let b = Subspace::span(3, &[e(3, 1), e(3, 2)]);
    let c = intersect(&[a, b]).unwrap();
    assert!(c.span_eq(&Subspace::span(3, &[e(3, 1)])));
  }

  #[test]
  fn intersect_with_full_space() {
    let v = Subspace::span(3, &[vec![Qi::one(), Qi::i(), Qi::zero()]]);
    assert!(intersect(&[v.clone(), Subspace::full(3)]).unwrap().span_eq(&v));
  }

  #[test]
  fn mismatched_ambient_is_an_error() {
    let r = intersect(&[Subspace::full(2), Subspace::full(3)]);
    assert!(matches!(r, Err(LinalgError::DimensionMismatch { .. })));
  }

  #[test]
  fn quotient_dims() {
    let v = Subspace::span(3, &[e(3, 0), e(3, 2)]);
    assert_eq!(quotient_dim(&v, &v).unwrap(), 0);
    assert_eq!(quotient_dim(&v, &Subspace::zero(3)).unwrap(), 2);
    let outside = Subspace::span(3, &[e(3, 1)]);
    assert!(matches!(quotient_dim(&v, &outside), Err(LinalgError::NotContained)));
  }

  #[test]
  fn span_drops_dependent_vectors() {
    let v = vec![Qi::one(), Qi::i()];
    let w: Vec<Qi> = v.iter().map(|x| x * &Qi::i()).collect();
    assert_eq!(Subspace::span(2, &[v, w]).dim(), 1);
  }

  fn vectors3() -> impl Strategy<Value = Vec<Vec<Qi>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2, -2i64..=2).prop_map(|(a, b)| Qi::gaussian(a, b)), 3), 0..4)
  }

  proptest! {
    #[test]
    fn intersection_laws(a in vectors3(), b in vectors3()) {
      let a = Subspace::span(3, &a);
      let b = Subspace::span(3, &b);
      let ab = intersect(&[a.clone(), b.clone()]).unwrap();
      let ba = intersect(&[b.clone(), a.clone()]).unwrap();
      prop_assert!(ab.span_eq(&ba));
      prop_assert!(a.contains_subspace(&ab) && b.contains_subspace(&ab));
      prop_assert!(intersect(&[a.clone(), a.clone()]).unwrap().span_eq(&a));
      let s = a.sum(&b).unwrap();
      prop_assert_eq!(s.dim() + ab.dim(), a.dim() + b.dim());
    }
  }
}
