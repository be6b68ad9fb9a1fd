//! Dense matrices over Q(i) with exact Gaussian elimination.

use std::{
  fmt,
  ops::{Index, IndexMut},
};

use num_traits::{One, Zero};

use super::{scalar::Qi, subspace::Subspace, LinalgError};

/// Row-major dense matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QiMatrix {
  rows: usize,
  cols: usize,
  data: Vec<Qi>,
}

impl QiMatrix {
  pub fn zeros(rows: usize, cols: usize) -> Self {
    Self { rows, cols, data: vec![Qi::zero(); rows * cols] }
  }

  pub fn identity(n: usize) -> Self {
    let mut m = Self::zeros(n, n);
    for i in 0..n {
      m[(i, i)] = Qi::one();
    }
    m
  }

  /// Scalar multiple of the identity.
  pub fn scalar(n: usize, s: &Qi) -> Self {
    let mut m = Self::zeros(n, n);
    for i in 0..n {
      m[(i, i)] = s.clone();
    }
    m
  }

  /// Builds from row-major data. Panics if the length is not `rows * cols`.
  pub fn from_vec(rows: usize, cols: usize, data: Vec<Qi>) -> Self {
    assert_eq!(data.len(), rows * cols, "matrix data length");
    Self { rows, cols, data }
  }

  /// Builds from a list of rows; `cols` is needed for the zero-row case.
  pub fn from_rows(cols: usize, rows: Vec<Vec<Qi>>) -> Self {
    let n = rows.len();
    let mut data = Vec::with_capacity(n * cols);
    for row in rows {
      assert_eq!(row.len(), cols, "ragged rows");
      data.extend(row);
    }
    Self { rows: n, cols, data }
  }

  /// Builds a matrix whose columns are the given vectors of length `rows`.
  pub fn from_columns(rows: usize, columns: &[Vec<Qi>]) -> Self {
    let mut m = Self::zeros(rows, columns.len());
    for (j, c) in columns.iter().enumerate() {
      assert_eq!(c.len(), rows, "column length");
      for (i, x) in c.iter().enumerate() {
        m[(i, j)] = x.clone();
      }
    }
    m
  }

  pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
    Self::from_vec(rows, cols, entries.iter().map(|&x| Qi::from(x)).collect())
  }

  pub fn rows(&self) -> usize {
    self.rows
  }

  pub fn cols(&self) -> usize {
    self.cols
  }

  pub fn is_square(&self) -> bool {
    self.rows == self.cols
  }

  pub fn entries(&self) -> &[Qi] {
    &self.data
  }

  pub fn row(&self, i: usize) -> &[Qi] {
    &self.data[i * self.cols..(i + 1) * self.cols]
  }

  pub fn column(&self, j: usize) -> Vec<Qi> {
    (0..self.rows).map(|i| self[(i, j)].clone()).collect()
  }

  pub fn columns(&self) -> Vec<Vec<Qi>> {
    (0..self.cols).map(|j| self.column(j)).collect()
  }

  pub fn is_zero(&self) -> bool {
    self.data.iter().all(Zero::is_zero)
  }

  /// First nonzero entry as `(row, col)`.
  pub fn first_nonzero(&self) -> Option<(usize, usize)> {
    self.data.iter().position(|x| !x.is_zero()).map(|k| (k / self.cols, k % self.cols))
  }

  pub fn transpose(&self) -> Self {
    let mut t = Self::zeros(self.cols, self.rows);
    for i in 0..self.rows {
      for j in 0..self.cols {
        t[(j, i)] = self[(i, j)].clone();
      }
    }
    t
  }

  /// Entry-wise complex conjugate.
  pub fn conj(&self) -> Self {
    Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(Qi::conj).collect() }
  }

  pub fn conj_transpose(&self) -> Self {
    let mut t = Self::zeros(self.cols, self.rows);
    for i in 0..self.rows {
      for j in 0..self.cols {
        t[(j, i)] = self[(i, j)].conj();
      }
    }
    t
  }

  pub fn scale(&self, s: &Qi) -> Self {
    if s.is_zero() {
      return Self::zeros(self.rows, self.cols);
    }
    Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
  }

  pub fn neg(&self) -> Self {
    Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
  }

  pub fn try_add(&self, other: &Self) -> Result<Self, LinalgError> {
    self.check_same_shape(other)?;
    Ok(Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
  }

  pub fn try_sub(&self, other: &Self) -> Result<Self, LinalgError> {
    self.check_same_shape(other)?;
    Ok(Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() })
  }

  /// Sum; panics on shape mismatch.
  pub fn add(&self, other: &Self) -> Self {
    self.try_add(other).expect("matrix shapes differ")
  }

  /// Difference; panics on shape mismatch.
  pub fn sub(&self, other: &Self) -> Self {
    self.try_sub(other).expect("matrix shapes differ")
  }

  pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
    if self.cols != other.rows {
      return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
    }
    let mut out = Self::zeros(self.rows, other.cols);
    for i in 0..self.rows {
      for k in 0..self.cols {
        let a = &self[(i, k)];
        if a.is_zero() {
          continue;
        }
        for j in 0..other.cols {
          let b = &other[(k, j)];
          if !b.is_zero() {
            out[(i, j)] += a * b;
          }
        }
      }
    }
    Ok(out)
  }

  /// Product; panics on shape mismatch.
  pub fn mul(&self, other: &Self) -> Self {
    self.try_mul(other).expect("matrix shapes incompatible")
  }

  pub fn mul_vec(&self, v: &[Qi]) -> Vec<Qi> {
    assert_eq!(v.len(), self.cols, "vector length");
    (0..self.rows)
      .map(|i| self.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
      .collect()
  }

  /// Columns of `self` followed by columns of `other`.
  pub fn hstack(&self, other: &Self) -> Self {
    assert_eq!(self.rows, other.rows, "hstack row counts");
    let mut m = Self::zeros(self.rows, self.cols + other.cols);
    for i in 0..self.rows {
      for j in 0..self.cols {
        m[(i, j)] = self[(i, j)].clone();
      }
      for j in 0..other.cols {
        m[(i, self.cols + j)] = other[(i, j)].clone();
      }
    }
    m
  }

  /// Rows of `self` followed by rows of `other`.
  pub fn vstack(&self, other: &Self) -> Self {
    assert_eq!(self.cols, other.cols, "vstack column counts");
    let mut data = self.data.clone();
    data.extend(other.data.iter().cloned());
    Self { rows: self.rows + other.rows, cols: self.cols, data }
  }

  /// Reduced row echelon form and pivot columns.
  pub fn rref(&self) -> (Self, Vec<usize>) {
    let mut m = self.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
      if r == m.rows {
        break;
      }
      let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
      m.swap_rows(r, p);
      let inv = m[(r, c)].inv().expect("pivot is nonzero");
      for j in c..m.cols {
        if !m[(r, j)].is_zero() {
          m[(r, j)] = &m[(r, j)] * &inv;
        }
      }
      for i in 0..m.rows {
        if i == r || m[(i, c)].is_zero() {
          continue;
        }
        let f = m[(i, c)].clone();
        for j in c..m.cols {
          if !m[(r, j)].is_zero() {
            let t = &f * &m[(r, j)];
            m[(i, j)] -= &t;
          }
        }
      }
      pivots.push(c);
      r += 1;
    }
    (m, pivots)
  }

  pub fn rank(&self) -> usize {
    self.rref().1.len()
  }

  /// Null space; basis vectors have a 1 in their free column.
  pub fn kernel(&self) -> Subspace {
    let (r, pivots) = self.rref();
    let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
    let columns: Vec<Vec<Qi>> = free
      .iter()
      .map(|&f| {
        let mut v = vec![Qi::zero(); self.cols];
        v[f] = Qi::one();
        for (row, &pc) in pivots.iter().enumerate() {
          v[pc] = -&r[(row, f)];
        }
        v
      })
      .collect();
    Subspace::from_independent(self.cols, QiMatrix::from_columns(self.cols, &columns))
  }

  /// Column space.
  pub fn image(&self) -> Subspace {
    Subspace::span(self.rows, &self.columns())
  }

  pub fn inverse(&self) -> Result<Self, LinalgError> {
    if !self.is_square() {
      return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
    }
    let n = self.rows;
    let (r, pivots) = self.hstack(&Self::identity(n)).rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
      return Err(LinalgError::Singular);
    }
    let mut inv = Self::zeros(n, n);
    for i in 0..n {
      for j in 0..n {
        inv[(i, j)] = r[(i, n + j)].clone();
      }
    }
    Ok(inv)
  }

  /// Some solution of `self · x = b`, or `None` if inconsistent.
  pub fn solve(&self, b: &[Qi]) -> Option<Vec<Qi>> {
    assert_eq!(b.len(), self.rows, "right-hand side length");
    let aug = self.hstack(&QiMatrix::from_columns(self.rows, &[b.to_vec()]));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&self.cols) {
      return None;
    }
    let mut x = vec![Qi::zero(); self.cols];
    for (row, &pc) in pivots.iter().enumerate() {
      x[pc] = r[(row, self.cols)].clone();
    }
    Some(x)
  }

  /// Determinant by elimination.
  pub fn determinant(&self) -> Result<Qi, LinalgError> {
    if !self.is_square() {
      return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
    }
    let mut m = self.clone();
    let mut det = Qi::one();
    for c in 0..m.cols {
      let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else { return Ok(Qi::zero()) };
      if p != c {
        m.swap_rows(c, p);
        det = -det;
      }
      let pivot = m[(c, c)].clone();
      det *= &pivot;
      let inv = pivot.inv().expect("pivot is nonzero");
      for i in c + 1..m.rows {
        if m[(i, c)].is_zero() {
          continue;
        }
        let f = &m[(i, c)] * &inv;
        for j in c..m.cols {
          let t = &f * &m[(c, j)];
          m[(i, j)] -= &t;
        }
      }
    }
    Ok(det)
  }

  /// Top-left `k × k` block.
  pub fn leading_minor(&self, k: usize) -> Self {
    let mut m = Self::zeros(k, k);
    for i in 0..k {
      for j in 0..k {
        m[(i, j)] = self[(i, j)].clone();
      }
    }
    m
  }

  /// Sub-matrix picking the given rows and columns in order.
  pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
    let mut m = Self::zeros(rows.len(), cols.len());
    for (a, &i) in rows.iter().enumerate() {
      for (b, &j) in cols.iter().enumerate() {
        m[(a, b)] = self[(i, j)].clone();
      }
    }
    m
  }

  pub fn is_hermitian(&self) -> bool {
    self.is_square() && *self == self.conj_transpose()
  }

  fn swap_rows(&mut self, a: usize, b: usize) {
    if a == b {
      return;
    }
    for j in 0..self.cols {
      self.data.swap(a * self.cols + j, b * self.cols + j);
    }
  }

  fn check_same_shape(&self, other: &Self) -> Result<(), LinalgError> {
    if self.rows != other.rows {
      return Err(LinalgError::DimensionMismatch { expected: self.rows, found: other.rows });
    }
    if self.cols != other.cols {
      return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.cols });
    }
    Ok(())
  }
}

impl Index<(usize, usize)> for QiMatrix {
  type Output = Qi;

  fn index(&self, (i, j): (usize, usize)) -> &Qi {
    &self.data[i * self.cols + j]
  }
}

impl IndexMut<(usize, usize)> for QiMatrix {
  fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Qi {
    &mut self.data[i * self.cols + j]
  }
}

impl fmt::Debug for QiMatrix {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "QiMatrix {}x{} [", self.rows, self.cols)?;
    for i in 0..self.rows {
      let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
      writeln!(f, "  [{}]", row.join(", "))?;
    }
    write!(f, "]")
  }
}

#[cfg(test)]
mod tests {
  use proptest::prelude::*;

  use super::*;

  fn i() -> Qi {
    Qi::i()
  }

  #[test]
  fn rref_identity_and_zero() {
    let id = QiMatrix::identity(3);
    assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
    let z = QiMatrix::zeros(2, 3);
    assert_eq!(z.rref(), (z.clone(), vec![]));
  }

  #[test]
  fn rref_dependent_complex_rows() {
    let m = QiMatrix::from_rows(2, vec![vec![Qi::one(), i()], vec![i(), -Qi::one()]]);
    let expected = QiMatrix::from_rows(2, vec![vec![Qi::one(), i()], vec![Qi::zero(), Qi::zero()]]);
    assert_eq!(m.rref(), (expected, vec![0]));
  }

  #[test]
  fn kernel_trivial_cases() {
    assert_eq!(QiMatrix::identity(4).kernel().dim(), 0);
    assert_eq!(QiMatrix::zeros(2, 3).kernel().dim(), 3);
  }

  #[test]
  fn inverse_round_trip() {
    let m = QiMatrix::from_rows(2, vec![vec![Qi::gaussian(1, 1), Qi::from(2)], vec![i(), Qi::from(3)]]);
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv), QiMatrix::identity(2));
    assert!(QiMatrix::zeros(2, 2).inverse().is_err());
  }

  #[test]
  fn determinant_matches_formula() {
    let m = QiMatrix::from_rows(2, vec![vec![Qi::gaussian(1, 1), Qi::from(2)], vec![i(), Qi::from(3)]]);
    let expected = &(&Qi::gaussian(1, 1) * &Qi::from(3)) - &(&Qi::from(2) * &i());
    assert_eq!(m.determinant().unwrap(), expected);
  }

  #[test]
  fn solve_inconsistent() {
    let m = QiMatrix::from_i64(2, 1, &[1, 1]);
    assert!(m.solve(&[Qi::from(1), Qi::from(2)]).is_none());
    assert_eq!(m.solve(&[Qi::from(3), Qi::from(3)]), Some(vec![Qi::from(3)]));
  }

  fn small_qi() -> impl Strategy<Value = Qi> {
    (-3i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, d)| Qi::from_fractions(a, d, b, 1))
  }

  fn small_matrix() -> impl Strategy<Value = QiMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
      prop::collection::vec(prop_oneof![Just(Qi::zero()), small_qi()], r * c).prop_map(move |d| QiMatrix::from_vec(r, c, d))
    })
  }

  proptest! {
    #[test]
    fn kernel_is_annihilated(m in small_matrix()) {
      let k = m.kernel();
      prop_assert!(m.mul(k.basis()).is_zero());
    }

    #[test]
    fn rank_nullity(m in small_matrix()) {
      prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn rank_is_conjugate_transpose_invariant(m in small_matrix()) {
      prop_assert_eq!(m.rank(), m.conj_transpose().rank());
    }
  }
}
