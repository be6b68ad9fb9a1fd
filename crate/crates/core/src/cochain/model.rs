//! Structure equations, the exterior derivative and its bidegree splitting.

use std::sync::Arc;

use super::{
  basis::Algebra,
  form::{Form, Monomial, MAX_N},
  operator::{BlockWitness, GradedOperator},
};
use crate::linalg::{Qi, QiMatrix};

/// Complex structure equations `dφ^i` of a Lie algebra with an almost-complex structure.
///
/// Only `dφ^i` is stored; `dφ̄^i` is always its conjugate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureModel {
  pub name: String,
  pub n: usize,
  d_phi: Vec<Form>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
  #[error("complex dimension must be between 1 and {MAX_N}, got {0}")]
  Dimension(usize),
  #[error("expected {expected} structure equations, got {found}")]
  EquationCount { expected: usize, found: usize },
  #[error("d phi{index} must be a 2-form")]
  NotTwoForm { index: usize },
  #[error("d phi{index} uses forms of dimension {found}, expected {expected}")]
  WrongAmbient { index: usize, expected: usize, found: usize },
}

impl StructureModel {
  pub fn new(name: impl Into<String>, n: usize, d_phi: Vec<Form>) -> Result<Self, ModelError> {
    if n == 0 || n > MAX_N {
      return Err(ModelError::Dimension(n));
    }
    if d_phi.len() != n {
      return Err(ModelError::EquationCount { expected: n, found: d_phi.len() });
    }
    for (i, f) in d_phi.iter().enumerate() {
      if f.n() != n {
        return Err(ModelError::WrongAmbient { index: i + 1, expected: n, found: f.n() });
      }
      if !f.is_zero() && f.homogeneous_degree() != Some(2) {
        return Err(ModelError::NotTwoForm { index: i + 1 });
      }
    }
    Ok(Self { name: name.into(), n, d_phi })
  }

  /// `dφ^i` (1-based).
  pub fn d_phi(&self, i: usize) -> &Form {
    &self.d_phi[i - 1]
  }

  pub fn structure_equations(&self) -> &[Form] {
    &self.d_phi
  }

  /// The `(p, q)` component of `dφ^i`, with `p + q = 2`.
  pub fn d_phi_component(&self, i: usize, p: usize, q: usize) -> Form {
    self.d_phi(i).component(p, q)
  }

  /// `d` of a single generator (bit position `g`).
  fn d_generator(&self, g: usize) -> Form {
    if g < self.n {
      self.d_phi[g].clone()
    } else {
      self.d_phi[g - self.n].conjugate()
    }
  }

  /// `d` of a form, extended from the coframe by the graded Leibniz rule.
  pub fn d_form(&self, form: &Form) -> Form {
    let mut out = Form::zero(self.n);
    for (m, c) in form.terms() {
      out = out.add(&self.d_monomial(*m).scale(c));
    }
    out
  }

  fn d_monomial(&self, m: Monomial) -> Form {
    let gens: Vec<usize> = m.generators().collect();
    let mut out = Form::zero(self.n);
    for (j, &g) in gens.iter().enumerate() {
      let prefix = Form::term(self.n, Monomial(gens[..j].iter().map(|&x| 1u32 << x).sum()), Qi::from(1));
      let suffix = Form::term(self.n, Monomial(gens[j + 1..].iter().map(|&x| 1u32 << x).sum()), Qi::from(1));
      let term = prefix.wedge(&self.d_generator(g)).wedge(&suffix);
      out = out.add(&if j % 2 == 1 { term.scale(&Qi::from(-1)) } else { term });
    }
    out
  }
}

/// The exterior derivative as a degree `+1` operator.
pub fn exterior_d(model: &StructureModel, alg: &Arc<Algebra>) -> GradedOperator {
  assert_eq!(alg.n, model.n, "algebra dimension");
  GradedOperator::from_fn(alg, 1, |k| {
    let src = alg.degree(k);
    let rows = alg.dim(k as i64 + 1);
    let mut m = QiMatrix::zeros(rows, src.len());
    if rows == 0 {
      return m;
    }
    let tgt = alg.degree(k + 1);
    for (j, mono) in src.monomials().iter().enumerate() {
      for (t, c) in model.d_monomial(*mono).terms() {
        m[(tgt.index_of(*t).expect("d raises degree by one"), j)] = c.clone();
      }
    }
    m
  })
}

/// The four pieces of `d` by bidegree offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
  /// Offset `(+2, −1)`.
  pub mu: GradedOperator,
  /// Offset `(+1, 0)`.
  pub del: GradedOperator,
  /// Offset `(0, +1)`.
  pub delbar: GradedOperator,
  /// Offset `(−1, +2)`.
  pub mubar: GradedOperator,
}

pub fn bidegree_components(d: &GradedOperator) -> Components {
  Components {
    mu: d.bidegree_part((2, -1)),
    del: d.bidegree_part((1, 0)),
    delbar: d.bidegree_part((0, 1)),
    mubar: d.bidegree_part((-1, 2)),
  }
}

/// `d`, its components, and `δ = ∂ + μ̄`, `δ̄ = ∂̄ + μ` for one model.
#[derive(Clone, Debug)]
pub struct CochainComplex {
  pub model: StructureModel,
  pub alg: Arc<Algebra>,
  pub d: GradedOperator,
  pub mu: GradedOperator,
  pub del: GradedOperator,
  pub delbar: GradedOperator,
  pub mubar: GradedOperator,
  pub delta: GradedOperator,
  pub deltabar: GradedOperator,
}

impl CochainComplex {
  pub fn new(model: &StructureModel) -> Self {
    let alg = Algebra::new(model.n);
    let d = exterior_d(model, &alg);
    let Components { mu, del, delbar, mubar } = bidegree_components(&d);
    let delta = del.add(&mubar);
    let deltabar = delbar.add(&mu);
    Self { model: model.clone(), alg, d, mu, del, delbar, mubar, delta, deltabar }
  }

  pub fn n(&self) -> usize {
    self.model.n
  }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
  pub name: String,
  /// A nonzero block, for identities between operators.
  pub witness: Option<BlockWitness>,
  /// Why the check failed, for identities that are not operator equalities.
  pub detail: Option<String>,
}

impl Check {
  /// Passes when `op` is the zero operator.
  pub fn vanishes(name: impl Into<String>, op: &GradedOperator) -> Self {
    Self { name: name.into(), witness: op.first_nonzero(), detail: None }
  }

  /// Passes when `ok`; otherwise carries `detail`.
  pub fn condition(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
    Self { name: name.into(), witness: None, detail: (!ok).then(detail) }
  }

  pub fn holds(&self) -> bool {
    self.witness.is_none() && self.detail.is_none()
  }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
  pub model: String,
  pub d_squared: Check,
  /// The seven graded relations implied by `d² = 0`.
  pub relations: Vec<Check>,
  /// `d` vanishes on `A^{2n−1}`.
  pub unimodular: Check,
  /// `μ` and `μ̄` vanish on 1-forms.
  pub integrable: bool,
}

impl ValidationReport {
  pub fn is_valid(&self) -> bool {
    self.d_squared.holds() && self.relations.iter().all(Check::holds) && self.unimodular.holds()
  }

  pub fn checks(&self) -> impl Iterator<Item = &Check> {
    std::iter::once(&self.d_squared).chain(&self.relations).chain(std::iter::once(&self.unimodular))
  }

  /// The first failing check, if any.
  pub fn first_failure(&self) -> Option<&Check> {
    self.checks().find(|c| !c.holds())
  }
}

pub fn validate(model: &StructureModel) -> ValidationReport {
  validate_complex(&CochainComplex::new(model))
}

pub fn validate_complex(cx: &CochainComplex) -> ValidationReport {
  let (mu, del, delbar, mubar) = (&cx.mu, &cx.del, &cx.delbar, &cx.mubar);
  let sq = |a: &GradedOperator| a.compose(a);
  let relations = vec![
    Check::vanishes("mu^2 = 0", &sq(mu)),
    Check::vanishes("mu del + del mu = 0", &mu.anticommutator(del)),
    Check::vanishes("del^2 + mu delbar + delbar mu = 0", &sq(del).add(&mu.anticommutator(delbar))),
    Check::vanishes(
      "del delbar + delbar del + mu mubar + mubar mu = 0",
      &del.anticommutator(delbar).add(&mu.anticommutator(mubar)),
    ),
    Check::vanishes("delbar^2 + mubar del + del mubar = 0", &sq(delbar).add(&mubar.anticommutator(del))),
    Check::vanishes("mubar delbar + delbar mubar = 0", &mubar.anticommutator(delbar)),
    Check::vanishes("mubar^2 = 0", &sq(mubar)),
  ];
  let top = cx.alg.top();
  let top_d = GradedOperator::from_fn(&cx.alg, 1, |k| {
    if k + 1 == top {
      cx.d.matrix(k).clone()
    } else {
      QiMatrix::zeros(cx.alg.dim(k as i64 + 1), cx.alg.dim(k as i64))
    }
  });
  ValidationReport {
    model: cx.model.name.clone(),
    d_squared: Check::vanishes("d^2 = 0", &sq(&cx.d)),
    relations,
    unimodular: Check::vanishes("d = 0 on (2n-1)-forms", &top_d),
    integrable: mu.matrix(1).is_zero() && mubar.matrix(1).is_zero(),
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::Qi;

  fn word(n: usize, holo: &[usize], anti: &[usize], c: Qi) -> Form {
    Form::term(n, Monomial::from_indices(n, holo, anti).unwrap(), c)
  }

  /// `1/(2i) = −i/2`.
  fn half_over_i() -> Qi {
    Qi::from_fractions(0, 1, -1, 2)
  }

  fn kodaira_thurston(mubar_coeff: Qi) -> StructureModel {
    let n = 2;
    let c = half_over_i();
    let d2 = word(n, &[1, 2], &[], c.clone())
      .add(&word(n, &[1], &[2], c.clone()))
      .add(&word(n, &[2], &[1], -c.clone()))
      .add(&word(n, &[], &[1, 2], mubar_coeff));
    StructureModel::new("kt", n, vec![Form::zero(n), d2]).unwrap()
  }

  fn torus() -> StructureModel {
    StructureModel::new("torus", 2, vec![Form::zero(2), Form::zero(2)]).unwrap()
  }

  #[test]
  fn d_of_constant_is_zero() {
    let model = kodaira_thurston(half_over_i());
    assert!(model.d_form(&Form::constant(2, Qi::from(1))).is_zero());
  }

  #[test]
  fn d_phi12_by_hand() {
    // d(φ^{12}) = −φ^1 ∧ dφ^2; the μ̄-part gives −(1/2i)φ^{11̄2̄}, the ∂̄-part (1/2i)φ^{121̄}.
    let model = kodaira_thurston(half_over_i());
    let phi12 = word(2, &[1, 2], &[], Qi::from(1));
    let mubar_part = word(2, &[1], &[1, 2], -half_over_i());
    let expected = mubar_part.add(&word(2, &[1, 2], &[1], half_over_i()));
    assert_eq!(model.d_form(&phi12), expected);
    let cx = CochainComplex::new(&model);
    let v = cx.alg.coords(2, &phi12);
    assert_eq!(cx.alg.form(3, &cx.d.apply(2, &v)), expected);
    assert_eq!(cx.alg.form(3, &cx.mubar.apply(2, &v)), mubar_part);
  }

  #[test]
  fn components_reconstruct_d() {
    let cx = CochainComplex::new(&kodaira_thurston(half_over_i()));
    let sum = GradedOperator::sum([&cx.mu, &cx.del, &cx.delbar, &cx.mubar]).unwrap();
    assert_eq!(sum, cx.d);
    assert!(cx.mu.on_bidegree(1, 0).is_zero());
    let alg = &cx.alg;
    let phi2 = alg.coords(1, &Form::phi(2, 2));
    let mubar_phi2 = alg.form(2, &cx.mubar.apply(1, &phi2));
    assert_eq!(mubar_phi2, word(2, &[], &[1, 2], half_over_i()));
    assert!(cx.mubar.apply(1, &alg.coords(1, &Form::phi(2, 1))).iter().all(|x| *x == Qi::from(0)));
  }

  #[test]
  fn torus_components_vanish() {
    let cx = CochainComplex::new(&torus());
    assert!(cx.d.is_zero());
    let report = validate(&torus());
    assert!(report.is_valid() && report.integrable);
  }

  #[test]
  fn kodaira_thurston_is_valid_and_non_integrable() {
    let report = validate(&kodaira_thurston(half_over_i()));
    assert!(report.is_valid(), "{:?}", report.first_failure());
    assert!(!report.integrable);
  }

  #[test]
  fn altered_mubar_breaks_d_squared() {
    let report = validate(&kodaira_thurston(Qi::from(1)));
    assert!(!report.d_squared.holds());
    assert!(!report.is_valid());
  }

  #[test]
  fn conjugation_symmetry_of_components() {
    let cx = CochainComplex::new(&kodaira_thurston(half_over_i()));
    assert_eq!(cx.mu.conjugate(), cx.mubar);
    assert_eq!(cx.del.conjugate(), cx.delbar);
    assert_eq!(cx.d.conjugate(), cx.d);
  }

  #[test]
  fn model_rejects_bad_equations() {
    assert!(matches!(StructureModel::new("x", 0, vec![]), Err(ModelError::Dimension(0))));
    assert!(matches!(StructureModel::new("x", 2, vec![Form::zero(2)]), Err(ModelError::EquationCount { expected: 2, found: 1 })));
    assert!(matches!(StructureModel::new("x", 1, vec![Form::phi(1, 1)]), Err(ModelError::NotTwoForm { index: 1 })));
  }
}
