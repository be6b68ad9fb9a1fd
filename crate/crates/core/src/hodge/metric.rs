//! Hermitian metrics on the coframe and the induced fundamental form.

use num_traits::{One, Signed, Zero};

use super::HodgeError;
use crate::{
  cochain::{Form, Monomial},
  linalg::{Qi, QiMatrix},
};

/// A Hermitian positive definite `n × n` matrix `h` with `⟨φ^i, φ^j⟩ = 2 h_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMetric {
  h: QiMatrix,
}

impl HermitianMetric {
  pub fn new(h: QiMatrix) -> Result<Self, HodgeError> {
    if !h.is_hermitian() {
      return Err(HodgeError::NotHermitian);
    }
    for k in 1..=h.rows() {
      let minor = h.leading_minor(k).determinant().expect("square");
      if !minor.is_real() || !minor.re().is_positive() {
        return Err(HodgeError::NotPositiveDefinite { minor: k });
      }
    }
    Ok(Self { h })
  }

  pub fn identity(n: usize) -> Self {
    Self { h: QiMatrix::identity(n) }
  }

  pub fn diagonal(entries: &[Qi]) -> Result<Self, HodgeError> {
    let mut h = QiMatrix::zeros(entries.len(), entries.len());
    for (i, e) in entries.iter().enumerate() {
      h[(i, i)] = e.clone();
    }
    Self::new(h)
  }

  pub fn n(&self) -> usize {
    self.h.rows()
  }

  pub fn matrix(&self) -> &QiMatrix {
    &self.h
  }

  pub fn is_identity(&self) -> bool {
    self.h == QiMatrix::identity(self.n())
  }

  /// `⟨φ^I φ̄^J, φ^K φ̄^L⟩ = det(2h_{I,K}) · det(2 h̄_{J,L})`.
  pub fn monomial_pairing(&self, a: Monomial, b: Monomial) -> Qi {
    let n = self.n();
    let (ai, aj) = a.indices(n);
    let (bi, bj) = b.indices(n);
    if ai.len() != bi.len() || aj.len() != bj.len() {
      return Qi::zero();
    }
    let two = Qi::from(2);
    let block = |rows: &[usize], cols: &[usize], conj: bool| {
      let r: Vec<usize> = rows.iter().map(|i| i - 1).collect();
      let c: Vec<usize> = cols.iter().map(|i| i - 1).collect();
      let m = self.h.select(&r, &c).scale(&two);
      let m = if conj { m.conj() } else { m };
      if m.rows() == 0 {
        Qi::one()
      } else {
        m.determinant().expect("square")
      }
    };
    &block(&ai, &bi, false) * &block(&aj, &bj, true)
  }

  /// Coefficients `w_jk` of `ω = (1/2i) Σ w_jk φ^j ∧ φ̄^k`.
  ///
  /// The pairing is on covectors, so `ω` uses the conjugate of `h⁻¹`; for
  /// `h = Id` this is `ω = (1/2i) Σ φ^j ∧ φ̄^j`.
  pub fn omega_coefficients(&self) -> QiMatrix {
    self.h.inverse().expect("positive definite").conj()
  }

  /// The fundamental form `ω`.
  pub fn omega(&self) -> Form {
    let n = self.n();
    let w = self.omega_coefficients();
    let c = Qi::one() / Qi::gaussian(0, 2);
    let mut f = Form::zero(n);
    for j in 0..n {
      for k in 0..n {
        let m = Monomial::from_indices(n, &[j + 1], &[k + 1]).expect("in range");
        f.add_term(m, &c * &w[(j, k)]);
      }
    }
    f
  }
}
