//! Linear operators on the graded space `A^• = ⊕ A^k`, homogeneous in total degree.

use std::{collections::BTreeSet, fmt, sync::Arc};

use num_traits::{One, Zero};

use super::basis::Algebra;
use crate::linalg::{Qi, QiMatrix};

/// A linear map `A^k → A^{k+shift}` for every `k`, stored as one matrix per source degree.
///
/// Bidegree blocks are sub-matrices selected by the block ranges of the degree
/// bases; a block that is not present in the matrix is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedOperator {
  alg: Arc<Algebra>,
  shift: i64,
  mats: Vec<QiMatrix>,
}

/// A nonzero entry of an operator, located by bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockWitness {
  pub source: (usize, usize),
  pub target: (usize, usize),
  /// Source basis vector, in degree coordinates.
  pub vector: Vec<Qi>,
  /// Its image, in degree coordinates of the target.
  pub image: Vec<Qi>,
}

impl GradedOperator {
  pub fn from_fn(alg: &Arc<Algebra>, shift: i64, mut f: impl FnMut(usize) -> QiMatrix) -> Self {
    let mats = (0..=alg.top())
      .map(|k| {
        let m = f(k);
        assert_eq!((m.rows(), m.cols()), (alg.dim(k as i64 + shift), alg.dim(k as i64)), "block shape in degree {k}");
        m
      })
      .collect();
    Self { alg: alg.clone(), shift, mats }
  }

  pub fn zero(alg: &Arc<Algebra>, shift: i64) -> Self {
    Self::from_fn(alg, shift, |k| QiMatrix::zeros(alg.dim(k as i64 + shift), alg.dim(k as i64)))
  }

  pub fn identity(alg: &Arc<Algebra>) -> Self {
    Self::from_fn(alg, 0, |k| QiMatrix::identity(alg.dim(k as i64)))
  }

  /// Diagonal operator acting on `A^{p,q}` by the scalar `f(p, q)`.
  pub fn bidegree_diagonal(alg: &Arc<Algebra>, f: impl Fn(usize, usize) -> Qi) -> Self {
    Self::from_fn(alg, 0, |k| {
      let basis = alg.degree(k);
      let mut m = QiMatrix::zeros(basis.len(), basis.len());
      for i in 0..basis.len() {
        let (p, q) = basis.bidegree_of(i);
        m[(i, i)] = f(p, q);
      }
      m
    })
  }

  /// Diagonal operator acting on `A^k` by `f(k)`.
  pub fn degree_diagonal(alg: &Arc<Algebra>, f: impl Fn(usize) -> Qi) -> Self {
    Self::from_fn(alg, 0, |k| QiMatrix::scalar(alg.dim(k as i64), &f(k)))
  }

  /// The signed permutation `K` with `conj(x) = K·x̄` in coordinates.
  pub fn conjugation(alg: &Arc<Algebra>) -> Self {
    let n = alg.n;
    Self::from_fn(alg, 0, |k| {
      let basis = alg.degree(k);
      let mut m = QiMatrix::zeros(basis.len(), basis.len());
      for (j, mono) in basis.monomials().iter().enumerate() {
        let (neg, image) = mono.conjugate(n);
        let i = basis.index_of(image).expect("conjugate has the same degree");
        m[(i, j)] = if neg { -Qi::one() } else { Qi::one() };
      }
      m
    })
  }

  pub fn algebra(&self) -> &Arc<Algebra> {
    &self.alg
  }

  pub fn n(&self) -> usize {
    self.alg.n
  }

  /// Change of total degree.
  pub fn shift(&self) -> i64 {
    self.shift
  }

  /// Matrix `A^k → A^{k+shift}`.
  pub fn matrix(&self, k: usize) -> &QiMatrix {
    &self.mats[k]
  }

  pub fn matrices(&self) -> &[QiMatrix] {
    &self.mats
  }

  /// Source degrees whose target lies in `[0, 2n]`.
  pub fn source_degrees(&self) -> impl Iterator<Item = usize> + '_ {
    let top = self.alg.top() as i64;
    (0..=self.alg.top()).filter(move |&k| (0..=top).contains(&(k as i64 + self.shift)))
  }

  fn target_degree(&self, k: usize) -> Option<usize> {
    let t = k as i64 + self.shift;
    (0..=self.alg.top() as i64).contains(&t).then_some(t as usize)
  }

  /// Block `A^{p,q} → A^{r,s}`; a zero matrix of the right shape when absent.
  pub fn block(&self, (p, q): (usize, usize), (r, s): (usize, usize)) -> QiMatrix {
    let k = p + q;
    let n = self.alg.n;
    if k > self.alg.top() || self.target_degree(k) != Some(r + s) || p > n || q > n || r > n || s > n {
      let rows = if r <= n && s <= n { super::basis::build_basis(n, r, s).len() } else { 0 };
      let cols = if p <= n && q <= n { super::basis::build_basis(n, p, q).len() } else { 0 };
      return QiMatrix::zeros(rows, cols);
    }
    let rows: Vec<usize> = self.alg.degree(r + s).block_range(r, s).collect();
    let cols: Vec<usize> = self.alg.degree(k).block_range(p, q).collect();
    self.mats[k].select(&rows, &cols)
  }

  /// Columns of the source block `(p, q)`, all target rows.
  pub fn on_bidegree(&self, p: usize, q: usize) -> QiMatrix {
    let k = p + q;
    let m = &self.mats[k];
    let cols: Vec<usize> = self.alg.degree(k).block_range(p, q).collect();
    let rows: Vec<usize> = (0..m.rows()).collect();
    m.select(&rows, &cols)
  }

  /// Bidegree offsets `(r − p, s − q)` of the nonzero blocks.
  pub fn bidegree_shifts(&self) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for k in self.source_degrees() {
      let t = self.target_degree(k).expect("source degree has a target");
      let (src, tgt) = (self.alg.degree(k), self.alg.degree(t));
      let m = &self.mats[k];
      for i in 0..m.rows() {
        for j in 0..m.cols() {
          if !m[(i, j)].is_zero() {
            let (p, q) = src.bidegree_of(j);
            let (r, s) = tgt.bidegree_of(i);
            out.insert((r as i64 - p as i64, s as i64 - q as i64));
          }
        }
      }
    }
    out
  }

  /// Keeps only the blocks with bidegree offset `(dp, dq)`.
  pub fn bidegree_part(&self, (dp, dq): (i64, i64)) -> Self {
    let alg = self.alg.clone();
    Self::from_fn(&alg, self.shift, |k| {
      let mut m = self.mats[k].clone();
      if let Some(t) = self.target_degree(k) {
        let (src, tgt) = (alg.degree(k), alg.degree(t));
        for i in 0..m.rows() {
          for j in 0..m.cols() {
            let (p, q) = src.bidegree_of(j);
            let (r, s) = tgt.bidegree_of(i);
            if (r as i64 - p as i64, s as i64 - q as i64) != (dp, dq) {
              m[(i, j)] = Qi::zero();
            }
          }
        }
      }
      m
    })
  }

  /// `self ∘ other`.
  pub fn compose(&self, other: &Self) -> Self {
    let alg = self.alg.clone();
    let shift = self.shift + other.shift;
    Self::from_fn(&alg, shift, |k| match other.target_degree(k) {
      Some(t) => self.mats[t].mul(&other.mats[k]),
      None => QiMatrix::zeros(alg.dim(k as i64 + shift), alg.dim(k as i64)),
    })
  }

  pub fn add(&self, other: &Self) -> Self {
    assert_eq!(self.shift, other.shift, "adding operators of different degree");
    Self { alg: self.alg.clone(), shift: self.shift, mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect() }
  }

  pub fn sub(&self, other: &Self) -> Self {
    assert_eq!(self.shift, other.shift, "subtracting operators of different degree");
    Self { alg: self.alg.clone(), shift: self.shift, mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.sub(b)).collect() }
  }

  pub fn scale(&self, s: &Qi) -> Self {
    Self { alg: self.alg.clone(), shift: self.shift, mats: self.mats.iter().map(|m| m.scale(s)).collect() }
  }

  pub fn neg(&self) -> Self {
    self.scale(&-Qi::one())
  }

  /// Sum of operators of equal degree; `None` for an empty list.
  pub fn sum<'a>(ops: impl IntoIterator<Item = &'a GradedOperator>) -> Option<Self> {
    let mut it = ops.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, op| acc.add(op)))
  }

  /// Entry-wise conjugate matrices (not the conjugate operator).
  pub fn conj_entries(&self) -> Self {
    Self { alg: self.alg.clone(), shift: self.shift, mats: self.mats.iter().map(QiMatrix::conj).collect() }
  }

  /// The conjugate operator `x ↦ conj(A conj(x))`.
  pub fn conjugate(&self) -> Self {
    let k = Self::conjugation(&self.alg);
    k.compose(&self.conj_entries()).compose(&k)
  }

  /// `AB − BA`.
  pub fn commutator(&self, other: &Self) -> Self {
    self.compose(other).sub(&other.compose(self))
  }

  /// `AB + BA`.
  pub fn anticommutator(&self, other: &Self) -> Self {
    self.compose(other).add(&other.compose(self))
  }

  pub fn is_zero(&self) -> bool {
    self.mats.iter().all(QiMatrix::is_zero)
  }

  /// Applies the degree-`k` matrix to coordinates.
  pub fn apply(&self, k: usize, v: &[Qi]) -> Vec<Qi> {
    self.mats[k].mul_vec(v)
  }

  /// First nonzero entry, in degree order.
  pub fn first_nonzero(&self) -> Option<BlockWitness> {
    self.source_degrees().find_map(|k| {
      let (i, j) = self.mats[k].first_nonzero()?;
      let t = self.target_degree(k)?;
      let mut vector = vec![Qi::zero(); self.alg.dim(k as i64)];
      vector[j] = Qi::one();
      Some(BlockWitness {
        source: self.alg.degree(k).bidegree_of(j),
        target: self.alg.degree(t).bidegree_of(i),
        image: self.mats[k].column(j),
        vector,
      })
    })
  }

  /// Where `self` and `other` first differ, if anywhere.
  pub fn first_difference(&self, other: &Self) -> Option<BlockWitness> {
    self.sub(other).first_nonzero()
  }
}

impl fmt::Debug for GradedOperator {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "GradedOperator(n={}, shift={})", self.alg.n, self.shift)?;
    for (k, m) in self.mats.iter().enumerate() {
      if m.rows() > 0 && m.cols() > 0 {
        writeln!(f, "degree {k}: {m:?}")?;
      }
    }
    Ok(())
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn conjugation_squares_to_identity() {
    let alg = Algebra::new(2);
    let k = GradedOperator::conjugation(&alg);
    assert_eq!(k.compose(&k), GradedOperator::identity(&alg));
  }

  #[test]
  fn bidegree_diagonal_blocks() {
    let alg = Algebra::new(2);
    let j = GradedOperator::bidegree_diagonal(&alg, |p, q| Qi::i_pow(p as i64 - q as i64));
    assert_eq!(j.block((1, 1), (1, 1)), QiMatrix::identity(4));
    assert_eq!(j.block((2, 0), (2, 0)), QiMatrix::scalar(1, &-Qi::one()));
    assert_eq!(j.bidegree_shifts().into_iter().collect::<Vec<_>>(), [(0, 0)]);
  }

  #[test]
  fn compose_out_of_range_is_zero() {
    let alg = Algebra::new(1);
    let up = GradedOperator::from_fn(&alg, 1, |k| QiMatrix::zeros(alg.dim(k as i64 + 1), alg.dim(k as i64)));
    let up2 = up.compose(&up);
    assert_eq!(up2.shift(), 2);
    assert!(up2.is_zero());
    assert!(up2.first_nonzero().is_none());
  }
}
