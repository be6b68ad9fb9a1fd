//! Gram matrices, adjoints, Laplacians and the anti-linear Hodge star.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::{metric::HermitianMetric, HodgeError};
use crate::{
  cochain::{Algebra, Form, GradedOperator, Monomial},
  linalg::{Qi, QiMatrix},
};

/// An anti-linear map `A^k → A^{2n−k}`, `x ↦ M_k · x̄` in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiLinear {
  alg: Arc<Algebra>,
  mats: Vec<QiMatrix>,
}

impl AntiLinear {
  pub fn matrix(&self, k: usize) -> &QiMatrix {
    &self.mats[k]
  }

  pub fn apply(&self, k: usize, x: &[Qi]) -> Vec<Qi> {
    let xc: Vec<Qi> = x.iter().map(Qi::conj).collect();
    self.mats[k].mul_vec(&xc)
  }

  /// `op ∘ self`, still anti-linear; `op` must preserve degree.
  pub fn after(&self, op: &GradedOperator) -> AntiLinear {
    assert_eq!(op.shift(), 0, "only degree-preserving maps keep the star shape");
    let top = self.alg.top();
    AntiLinear { alg: self.alg.clone(), mats: (0..=top).map(|k| op.matrix(top - k).mul(&self.mats[k])).collect() }
  }

  /// The linear operator `self ∘ op ∘ inner`.
  pub fn sandwich(&self, op: &GradedOperator, inner: &AntiLinear) -> GradedOperator {
    let top = self.alg.top();
    let s = op.shift();
    GradedOperator::from_fn(&self.alg, -s, |k| {
      let mid = top - k;
      let t = mid as i64 + s;
      if t < 0 || t > top as i64 {
        return QiMatrix::zeros(self.alg.dim(k as i64 - s), self.alg.dim(k as i64));
      }
      self.mats[t as usize].mul(&op.matrix(mid).conj()).mul(&inner.mats[k].conj())
    })
  }

  /// The linear operator `self ∘ other`.
  pub fn then_after(&self, other: &AntiLinear) -> GradedOperator {
    let top = self.alg.top();
    GradedOperator::from_fn(&self.alg, 0, |k| self.mats[top - k].mul(&other.mats[k].conj()))
  }
}

/// Invariant forms with the Hermitian pairing induced by a metric.
#[derive(Clone, Debug)]
pub struct InnerProductSpace {
  pub alg: Arc<Algebra>,
  pub metric: HermitianMetric,
  gram: Vec<QiMatrix>,
  gram_inv: Vec<QiMatrix>,
  omega: Form,
  vol: Form,
  star: AntiLinear,
}

impl InnerProductSpace {
  pub fn new(alg: &Arc<Algebra>, metric: &HermitianMetric) -> Result<Self, HodgeError> {
    if metric.n() != alg.n {
      return Err(HodgeError::DimensionMismatch { expected: alg.n, found: metric.n() });
    }
    let n = alg.n;
    let gram: Vec<QiMatrix> = (0..=alg.top())
      .map(|k| {
        let ms = alg.degree(k).monomials();
        let mut g = QiMatrix::zeros(ms.len(), ms.len());
        for (a, ma) in ms.iter().enumerate() {
          for (b, mb) in ms.iter().enumerate() {
            g[(b, a)] = metric.monomial_pairing(*ma, *mb);
          }
        }
        g
      })
      .collect();
    let gram_inv = gram.iter().map(|g| g.inverse().expect("Gram matrix is positive definite")).collect();
    let omega = metric.omega();
    let mut vol = Form::constant(n, Qi::one());
    for k in 1..=n {
      vol = vol.wedge(&omega).scale(&(Qi::one() / Qi::from(k as i64)));
    }
    let top_mono = Monomial((1u32 << (2 * n)) - 1);
    let v = vol.coefficient(top_mono);
    let mut space = Self {
      alg: alg.clone(),
      metric: metric.clone(),
      gram,
      gram_inv,
      omega,
      vol,
      star: AntiLinear { alg: alg.clone(), mats: Vec::new() },
    };
    let mats = (0..=alg.top())
      .map(|k| {
        let (src, dual) = (alg.degree(k), alg.degree(2 * n - k));
        let mut w = QiMatrix::zeros(src.len(), dual.len());
        for (b, eb) in src.monomials().iter().enumerate() {
          for (c, fc) in dual.monomials().iter().enumerate() {
            if let Some((neg, _)) = eb.wedge(*fc) {
              let s = if neg { -Qi::one() } else { Qi::one() };
              w[(b, c)] = &s / &v;
            }
          }
        }
        w.inverse().expect("wedge pairing is perfect").mul(&space.gram[k].transpose())
      })
      .collect();
    space.star = AntiLinear { alg: alg.clone(), mats };
    Ok(space)
  }

  pub fn n(&self) -> usize {
    self.alg.n
  }

  /// Gram matrix on `A^k`, with `⟨x, y⟩ = yᴴ G x`.
  pub fn gram(&self, k: usize) -> &QiMatrix {
    &self.gram[k]
  }

  pub fn inner(&self, k: usize, x: &[Qi], y: &[Qi]) -> Qi {
    let gx = self.gram[k].mul_vec(x);
    y.iter().zip(&gx).map(|(a, b)| &a.conj() * b).sum()
  }

  pub fn omega(&self) -> &Form {
    &self.omega
  }

  /// `ω^n / n!`.
  pub fn vol(&self) -> &Form {
    &self.vol
  }

  /// The anti-linear Hodge star, `β ∧ *α = ⟨β, α⟩ vol`.
  pub fn star(&self) -> &AntiLinear {
    &self.star
  }

  /// Gram adjoint: `⟨Dx, y⟩ = ⟨x, D*y⟩`.
  pub fn adjoint(&self, d: &GradedOperator) -> GradedOperator {
    let s = d.shift();
    GradedOperator::from_fn(&self.alg, -s, |k| {
      let src = k as i64 - s;
      if src < 0 || src > self.alg.top() as i64 {
        return QiMatrix::zeros(0, self.alg.dim(k as i64));
      }
      let src = src as usize;
      self.gram_inv[src].mul(&d.matrix(src).conj_transpose()).mul(&self.gram[k])
    })
  }

  /// `−*D*` as a linear operator.
  pub fn star_adjoint(&self, d: &GradedOperator) -> GradedOperator {
    self.star.sandwich(d, &self.star).neg()
  }

  /// `D D* + D* D`.
  pub fn laplacian(&self, d: &GradedOperator) -> GradedOperator {
    let da = self.adjoint(d);
    d.compose(&da).add(&da.compose(d))
  }

  /// `J = i^{p−q}` on `A^{p,q}`.
  pub fn j(&self) -> GradedOperator {
    j_operator(&self.alg)
  }

  /// The symplectic star `⋆ = J *`.
  pub fn symplectic_star(&self) -> AntiLinear {
    self.star.after(&self.j())
  }
}

/// `J = i^{p−q}` on `A^{p,q}`.
pub fn j_operator(alg: &Arc<Algebra>) -> GradedOperator {
  GradedOperator::bidegree_diagonal(alg, |p, q| Qi::i_pow(p as i64 - q as i64))
}

/// Left multiplication `x ↦ form ∧ x` by a homogeneous form.
pub fn wedge_operator(alg: &Arc<Algebra>, form: &Form) -> GradedOperator {
  let r = form.homogeneous_degree().unwrap_or(0);
  GradedOperator::from_fn(alg, r as i64, |k| {
    let rows = alg.dim((k + r) as i64);
    let src = alg.degree(k);
    let mut m = QiMatrix::zeros(rows, src.len());
    if rows == 0 {
      return m;
    }
    for (j, mono) in src.monomials().iter().enumerate() {
      let image = form.wedge(&Form::term(alg.n, *mono, Qi::one()));
      for (i, c) in alg.coords(k + r, &image).into_iter().enumerate() {
        if !c.is_zero() {
          m[(i, j)] = c;
        }
      }
    }
    m
  })
}
