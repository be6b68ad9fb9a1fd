//! Harmonic spaces as kernel intersections, and their reports.

use std::collections::BTreeMap;

use super::space::InnerProductSpace;
use crate::{
  cochain::{Algebra, Form, GradedOperator, Grading},
  linalg::{QiMatrix, Subspace},
};

/// All total degrees `0..=2n`.
pub fn all_degrees(n: usize) -> Vec<Grading> {
  (0..=2 * n).map(Grading::Degree).collect()
}

/// All bidegrees `(p, q)` with `0 ≤ p, q ≤ n`.
pub fn all_bidegrees(n: usize) -> Vec<Grading> {
  (0..=n).flat_map(|p| (0..=n).map(move |q| Grading::Bidegree(p, q))).collect()
}

/// Every degree and every bidegree.
pub fn all_gradings(n: usize) -> Vec<Grading> {
  let mut g = all_degrees(n);
  g.extend(all_bidegrees(n));
  g
}

/// Columns of `op` acting on the given grading.
pub fn restrict(op: &GradedOperator, grading: Grading) -> QiMatrix {
  match grading {
    Grading::Degree(k) => op.matrix(k).clone(),
    Grading::Bidegree(p, q) => op.on_bidegree(p, q),
  }
}

/// Embeds block coordinates of `(p, q)` into degree coordinates.
pub fn embed(alg: &Algebra, grading: Grading, space: &Subspace) -> Subspace {
  match grading {
    Grading::Degree(_) => space.clone(),
    Grading::Bidegree(p, q) => {
      let k = p + q;
      let basis = alg.degree(k);
      let range = basis.block_range(p, q);
      let mut m = QiMatrix::zeros(basis.len(), range.len());
      for (c, i) in range.enumerate() {
        m[(i, c)] = num_traits::One::one();
      }
      space.map(&m)
    }
  }
}

/// `⋂ Ker op` on the grading, in degree coordinates.
pub fn kernel_on(alg: &Algebra, grading: Grading, ops: &[&GradedOperator]) -> Subspace {
  let cols = match grading {
    Grading::Degree(k) => alg.dim(k as i64),
    Grading::Bidegree(p, q) => alg.degree(p + q).block_range(p, q).len(),
  };
  let stacked = ops.iter().fold(QiMatrix::zeros(0, cols), |acc, op| acc.vstack(&restrict(op, grading)));
  embed(alg, grading, &stacked.kernel())
}

/// Image of `op` landing in the grading, in degree coordinates.
///
/// For a bidegree, this is the image intersected with `A^{p,q}`.
pub fn image_in(alg: &Algebra, grading: Grading, op: &GradedOperator) -> Subspace {
  let k = grading.total_degree() as i64;
  let src = k - op.shift();
  let full = if src < 0 || src > alg.top() as i64 { Subspace::zero(alg.dim(k)) } else { op.matrix(src as usize).image() };
  match grading {
    Grading::Degree(_) => full,
    Grading::Bidegree(p, q) => {
      full.intersect_with(&embed(alg, grading, &Subspace::full(alg.degree(p + q).block_range(p, q).len()))).expect("same ambient")
    }
  }
}

/// Harmonic (or cohomology representative) spaces for a set of gradings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicReport {
  pub label: String,
  pub n: usize,
  pub spaces: BTreeMap<Grading, Subspace>,
  /// Gradings where an independent characterization was compared, with the verdict.
  pub crosschecks: BTreeMap<Grading, bool>,
}

impl HarmonicReport {
  pub fn compute(label: impl Into<String>, n: usize, gradings: &[Grading], mut f: impl FnMut(Grading) -> Subspace) -> Self {
    let spaces = gradings.iter().map(|&g| (g, f(g))).collect();
    Self { label: label.into(), n, spaces, crosschecks: BTreeMap::new() }
  }

  pub fn space(&self, g: Grading) -> Option<&Subspace> {
    self.spaces.get(&g)
  }

  pub fn dim(&self, g: Grading) -> Option<usize> {
    self.spaces.get(&g).map(Subspace::dim)
  }

  /// Dimension of the degree-`k` space. Panics if it was not computed.
  pub fn degree_dim(&self, k: usize) -> usize {
    self.dim(Grading::Degree(k)).expect("degree not computed")
  }

  /// Dimension of the `(p, q)` space. Panics if it was not computed.
  pub fn bidegree_dim(&self, p: usize, q: usize) -> usize {
    self.dim(Grading::Bidegree(p, q)).expect("bidegree not computed")
  }

  /// Degree dims `[h^0, …, h^{2n}]` where computed.
  pub fn degree_dims(&self) -> Vec<usize> {
    (0..=2 * self.n).filter_map(|k| self.dim(Grading::Degree(k))).collect()
  }

  /// Whether the degree-`k` space equals the sum of its `(p, q)` slices,
  /// when the degree and all its slices were computed.
  pub fn decomposable(&self, k: usize) -> Option<bool> {
    let total = self.space(Grading::Degree(k))?;
    let mut sum = Subspace::zero(total.ambient_dim());
    for q in k.saturating_sub(self.n)..=k.min(self.n) {
      sum = sum.sum(self.space(Grading::Bidegree(k - q, q))?).expect("same ambient");
    }
    Some(sum.span_eq(total))
  }

  /// Basis of the space as forms.
  pub fn basis_forms(&self, alg: &Algebra, g: Grading) -> Vec<Form> {
    let k = g.total_degree();
    self.space(g).map(|s| s.vectors().iter().map(|v| alg.form(k, v)).collect()).unwrap_or_default()
  }

  /// True when every comparison with an independent characterization agreed.
  pub fn consistent(&self) -> bool {
    self.crosschecks.values().all(|&b| b)
  }
}

/// `Ker D ∩ Ker D*` on each grading, cross-checked against `Ker Δ_D`.
pub fn harmonic(space: &InnerProductSpace, label: &str, d: &GradedOperator, gradings: &[Grading]) -> HarmonicReport {
  let da = space.adjoint(d);
  let lap = d.compose(&da).add(&da.compose(d));
  let alg = &space.alg;
  let mut report = HarmonicReport::compute(label, alg.n, gradings, |g| kernel_on(alg, g, &[d, &da]));
  for (&g, s) in &report.spaces {
    report.crosschecks.insert(g, kernel_on(alg, g, &[&lap]).span_eq(s));
  }
  report
}
