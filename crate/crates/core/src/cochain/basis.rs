//! Ordered monomial bases of `A^{p,q}` and `A^k`, and coordinate vectors in them.

use std::{collections::HashMap, fmt, sync::Arc};

use itertools::Itertools;
use num_traits::Zero;

use super::form::{Form, Monomial};
use crate::linalg::Qi;

/// Basis of `A^{p,q}`: monomials `φ^I φ̄^J` sorted lexicographically by `(I, J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidegreeBasis {
  pub n: usize,
  pub p: usize,
  pub q: usize,
  monomials: Vec<Monomial>,
}

/// Canonical basis of `A^{p,q}`; empty when `p` or `q` lies outside `[0, n]`.
pub fn build_basis(n: usize, p: usize, q: usize) -> BidegreeBasis {
  let mut monomials = Vec::new();
  if p <= n && q <= n {
    for holo in (1..=n).combinations(p) {
      for anti in (1..=n).combinations(q) {
        monomials.push(Monomial::from_indices(n, &holo, &anti).expect("indices in range"));
      }
    }
  }
  BidegreeBasis { n, p, q, monomials }
}

impl BidegreeBasis {
  pub fn len(&self) -> usize {
    self.monomials.len()
  }

  pub fn is_empty(&self) -> bool {
    self.monomials.is_empty()
  }

  pub fn monomials(&self) -> &[Monomial] {
    &self.monomials
  }
}

/// Basis of `A^k`: the blocks `A^{k-q,q}` concatenated with `q` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBasis {
  pub n: usize,
  pub k: usize,
  blocks: Vec<BidegreeBasis>,
  offsets: Vec<usize>,
  monomials: Vec<Monomial>,
  index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
  pub fn new(n: usize, k: usize) -> Self {
    let blocks: Vec<BidegreeBasis> =
      if k > 2 * n { Vec::new() } else { (k.saturating_sub(n)..=k.min(n)).map(|q| build_basis(n, k - q, q)).collect() };
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut monomials = Vec::new();
    for b in &blocks {
      offsets.push(monomials.len());
      monomials.extend_from_slice(b.monomials());
    }
    let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    Self { n, k, blocks, offsets, monomials, index }
  }

  pub fn len(&self) -> usize {
    self.monomials.len()
  }

  pub fn is_empty(&self) -> bool {
    self.monomials.is_empty()
  }

  pub fn monomials(&self) -> &[Monomial] {
    &self.monomials
  }

  pub fn index_of(&self, m: Monomial) -> Option<usize> {
    self.index.get(&m).copied()
  }

  pub fn blocks(&self) -> &[BidegreeBasis] {
    &self.blocks
  }

  /// Index range of the `(p, q)` block, empty if absent.
  pub fn block_range(&self, p: usize, q: usize) -> std::ops::Range<usize> {
    match self.blocks.iter().position(|b| b.p == p && b.q == q) {
      Some(i) => self.offsets[i]..self.offsets[i] + self.blocks[i].len(),
      None => 0..0,
    }
  }

  pub fn bidegree_of(&self, index: usize) -> (usize, usize) {
    self.monomials[index].bidegree(self.n)
  }
}

/// All degree bases of the exterior algebra on `2n` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
  pub n: usize,
  degrees: Vec<DegreeBasis>,
}

impl Algebra {
  pub fn new(n: usize) -> Arc<Self> {
    Arc::new(Self { n, degrees: (0..=2 * n).map(|k| DegreeBasis::new(n, k)).collect() })
  }

  pub fn top(&self) -> usize {
    2 * self.n
  }

  pub fn degree(&self, k: usize) -> &DegreeBasis {
    &self.degrees[k]
  }

  /// Dimension of `A^k`, zero outside `[0, 2n]`.
  pub fn dim(&self, k: i64) -> usize {
    if k < 0 || k as usize > self.top() {
      0
    } else {
      self.degrees[k as usize].len()
    }
  }

  pub fn total_dim(&self) -> usize {
    self.degrees.iter().map(DegreeBasis::len).sum()
  }

  /// Coordinates of a homogeneous form in the degree-`k` basis.
  pub fn coords(&self, k: usize, form: &Form) -> Vec<Qi> {
    let basis = self.degree(k);
    let mut v = vec![Qi::zero(); basis.len()];
    for (m, c) in form.terms() {
      let i = basis.index_of(*m).unwrap_or_else(|| panic!("monomial {} is not of degree {k}", m.word(self.n)));
      v[i] = c.clone();
    }
    v
  }

  pub fn form(&self, k: usize, coords: &[Qi]) -> Form {
    let basis = self.degree(k);
    let mut f = Form::zero(self.n);
    for (m, c) in basis.monomials().iter().zip(coords) {
      f.add_term(*m, c.clone());
    }
    f
  }
}

/// A total degree `k` or a single bidegree `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grading {
  Degree(usize),
  Bidegree(usize, usize),
}

impl Grading {
  pub fn total_degree(self) -> usize {
    match self {
      Grading::Degree(k) => k,
      Grading::Bidegree(p, q) => p + q,
    }
  }
}

impl fmt::Display for Grading {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      Grading::Degree(k) => write!(f, "{k}"),
      Grading::Bidegree(p, q) => write!(f, "({p},{q})"),
    }
  }
}

/// Exact coordinates of a form in the basis of its grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormVector {
  pub grading: Grading,
  pub coords: Vec<Qi>,
}

impl FormVector {
  /// Checks the coordinate count against the basis of `grading`.
  pub fn new(alg: &Algebra, grading: Grading, coords: Vec<Qi>) -> Option<Self> {
    let expected = match grading {
      Grading::Degree(k) => alg.dim(k as i64),
      Grading::Bidegree(p, q) => build_basis(alg.n, p, q).len(),
    };
    (coords.len() == expected).then_some(Self { grading, coords })
  }

  /// Embeds into total-degree coordinates.
  pub fn to_degree(&self, alg: &Algebra) -> Vec<Qi> {
    match self.grading {
      Grading::Degree(_) => self.coords.clone(),
      Grading::Bidegree(p, q) => {
        let basis = alg.degree(p + q);
        let mut v = vec![Qi::zero(); basis.len()];
        for (i, c) in basis.block_range(p, q).zip(&self.coords) {
          v[i] = c.clone();
        }
        v
      }
    }
  }

  pub fn to_form(&self, alg: &Algebra) -> Form {
    alg.form(self.grading.total_degree(), &self.to_degree(alg))
  }
}
