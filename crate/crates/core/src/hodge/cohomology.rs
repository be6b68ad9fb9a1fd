//! Cohomology as subspace quotients, and Bott-Chern/Aeppli spaces of an anticommuting pair.

use std::collections::BTreeMap;

use super::{
  harmonic::{image_in, kernel_on, HarmonicReport},
  space::InnerProductSpace,
};
use crate::{
  cochain::{Algebra, GradedOperator, Grading},
  linalg::{LinalgError, Qi, Subspace},
};

/// `numerator / denominator` with representatives of a complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
  pub dim: usize,
  /// Vectors of the numerator whose classes form a basis of the quotient.
  pub representatives: Vec<Vec<Qi>>,
}

pub fn quotient(numerator: &Subspace, denominator: &Subspace) -> Result<Quotient, LinalgError> {
  let dim = numerator.quotient_dim(denominator)?;
  let mut span = denominator.clone();
  let mut representatives = Vec::with_capacity(dim);
  for v in numerator.vectors() {
    if representatives.len() == dim {
      break;
    }
    if !span.contains(&v) {
      span = span.sum(&Subspace::span(v.len(), std::slice::from_ref(&v)))?;
      representatives.push(v);
    }
  }
  Ok(Quotient { dim, representatives })
}

/// `Ker D / Im D` in degree `k`. Requires `D² = 0`.
pub fn cohomology(alg: &Algebra, d: &GradedOperator, k: usize) -> Quotient {
  let g = Grading::Degree(k);
  quotient(&kernel_on(alg, g, &[d]), &image_in(alg, g, d)).expect("D² = 0")
}

/// Harmonic spaces and cohomology of `(A, D1, D2)` for square-zero, anticommuting `D1`, `D2`.
#[derive(Clone, Debug)]
pub struct PairReport {
  /// `Ker D1 ∩ Ker D2 ∩ Ker (D1D2)*`, cross-checked against `Ker Δ_BC`.
  pub bc: HarmonicReport,
  /// `Ker D1* ∩ Ker D2* ∩ Ker D1D2`, cross-checked against `Ker Δ_A`.
  pub aeppli: HarmonicReport,
  /// `(Ker D1 ∩ Ker D2) / Im D1D2` by degree.
  pub bc_cohomology: BTreeMap<usize, Quotient>,
  /// `Ker D1D2 / (Im D1 + Im D2)` by degree.
  pub aeppli_cohomology: BTreeMap<usize, Quotient>,
}

impl PairReport {
  /// Harmonic and quotient dimensions agree wherever both were computed.
  pub fn hodge_isomorphic(&self) -> bool {
    self.bc_cohomology.iter().all(|(&k, q)| self.bc.dim(Grading::Degree(k)) == Some(q.dim))
      && self.aeppli_cohomology.iter().all(|(&k, q)| self.aeppli.dim(Grading::Degree(k)) == Some(q.dim))
  }

  /// `h^k_BC = h^{2n−k}_A` for every degree.
  pub fn dual(&self) -> bool {
    let top = 2 * self.bc.n;
    (0..=top).all(|k| self.bc.dim(Grading::Degree(k)) == self.aeppli.dim(Grading::Degree(top - k)))
  }
}

/// Fourth-order Bott-Chern Laplacian of the pair.
pub fn bc_laplacian(space: &InnerProductSpace, d1: &GradedOperator, d2: &GradedOperator) -> GradedOperator {
  let adj = |x: &GradedOperator| space.adjoint(x);
  let dd = d1.compose(d2);
  let dd_a = adj(&dd);
  let x = adj(d2).compose(d1);
  let x_a = adj(&x);
  GradedOperator::sum([
    &dd.compose(&dd_a),
    &dd_a.compose(&dd),
    &x.compose(&x_a),
    &x_a.compose(&x),
    &adj(d2).compose(d2),
    &adj(d1).compose(d1),
  ])
  .expect("nonempty")
}

/// Fourth-order Aeppli Laplacian of the pair.
pub fn aeppli_laplacian(space: &InnerProductSpace, d1: &GradedOperator, d2: &GradedOperator) -> GradedOperator {
  let adj = |x: &GradedOperator| space.adjoint(x);
  let dd = d1.compose(d2);
  let dd_a = adj(&dd);
  let y = d2.compose(&adj(d1));
  let y_a = adj(&y);
  GradedOperator::sum([
    &d1.compose(&adj(d1)),
    &d2.compose(&adj(d2)),
    &dd_a.compose(&dd),
    &dd.compose(&dd_a),
    &y_a.compose(&y),
    &y.compose(&y_a),
  ])
  .expect("nonempty")
}

pub fn bott_chern_aeppli(
  space: &InnerProductSpace,
  label: &str,
  d1: &GradedOperator,
  d2: &GradedOperator,
  gradings: &[Grading],
) -> PairReport {
  let alg = &space.alg;
  let dd = d1.compose(d2);
  let (d1a, d2a, dda) = (space.adjoint(d1), space.adjoint(d2), space.adjoint(&dd));
  let mut bc = HarmonicReport::compute(format!("bc-{label}"), alg.n, gradings, |g| kernel_on(alg, g, &[d1, d2, &dda]));
  let mut aeppli = HarmonicReport::compute(format!("aeppli-{label}"), alg.n, gradings, |g| kernel_on(alg, g, &[&d1a, &d2a, &dd]));
  let (lbc, la) = (bc_laplacian(space, d1, d2), aeppli_laplacian(space, d1, d2));
  for (report, lap) in [(&mut bc, &lbc), (&mut aeppli, &la)] {
    let checks: Vec<_> = report.spaces.iter().map(|(&g, s)| (g, kernel_on(alg, g, &[lap]).span_eq(s))).collect();
    report.crosschecks.extend(checks);
  }

  let mut bc_cohomology = BTreeMap::new();
  let mut aeppli_cohomology = BTreeMap::new();
  for &g in gradings {
    let Grading::Degree(k) = g else { continue };
    let closed = kernel_on(alg, g, &[d1, d2]);
    bc_cohomology.insert(k, quotient(&closed, &image_in(alg, g, &dd)).expect("Im D1D2 ⊆ Ker D1 ∩ Ker D2"));
    let exact = image_in(alg, g, d1).sum(&image_in(alg, g, d2)).expect("same ambient");
    aeppli_cohomology.insert(k, quotient(&kernel_on(alg, g, &[&dd]), &exact).expect("Im D1 + Im D2 ⊆ Ker D1D2"));
  }
  PairReport { bc, aeppli, bc_cohomology, aeppli_cohomology }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::{
    cochain::{CochainComplex, Form, StructureModel},
    hodge::{all_degrees, HermitianMetric},
  };

  #[test]
  fn quotient_representatives_complement_the_denominator() {
    let e = |i: usize| (0..3).map(|j| Qi::from((i == j) as i64)).collect::<Vec<_>>();
    let num = Subspace::span(3, &[e(0), e(1)]);
    let den = Subspace::span(3, &[e(0)]);
    let q = quotient(&num, &den).unwrap();
    assert_eq!(q.dim, 1);
    assert!(!den.contains(&q.representatives[0]) && num.contains(&q.representatives[0]));
    assert!(quotient(&den, &num).is_err());
  }

  #[test]
  fn torus_pair_spaces_are_everything() {
    let cx = CochainComplex::new(&StructureModel::new("t", 2, vec![Form::zero(2), Form::zero(2)]).unwrap());
    let s = InnerProductSpace::new(&cx.alg, &HermitianMetric::identity(2)).unwrap();
    let r = bott_chern_aeppli(&s, "t", &cx.delta, &cx.deltabar, &all_degrees(2));
    assert_eq!(r.bc.degree_dims(), [1, 4, 6, 4, 1]);
    assert_eq!(r.aeppli.degree_dims(), [1, 4, 6, 4, 1]);
    assert!(r.bc.consistent() && r.aeppli.consistent() && r.hodge_isomorphic() && r.dual());
  }
}
