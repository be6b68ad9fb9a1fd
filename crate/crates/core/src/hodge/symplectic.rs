//! Lefschetz operators, `d^c`, `d^Λ` and the symplectic star.

use num_traits::One;

use super::space::{wedge_operator, InnerProductSpace};
use crate::{
  cochain::{CochainComplex, GradedOperator},
  linalg::Qi,
};

/// `L = ω ∧ −` and `Λ`, its Gram adjoint.
#[derive(Clone, Debug)]
pub struct LefschetzPair {
  pub l: GradedOperator,
  pub lambda: GradedOperator,
  /// `Λ = ⋆L⋆` holds exactly.
  pub matches_star_l_star: bool,
  /// `Λ = −⋆L⋆` holds exactly.
  pub matches_minus_star_l_star: bool,
}

pub fn lefschetz_pair(space: &InnerProductSpace) -> LefschetzPair {
  let l = wedge_operator(&space.alg, space.omega());
  let lambda = space.adjoint(&l);
  let ss = space.symplectic_star();
  let sls = ss.sandwich(&l, &ss);
  LefschetzPair { matches_star_l_star: sls == lambda, matches_minus_star_l_star: sls.neg() == lambda, l, lambda }
}

/// `(n − k)·Id` on `A^k`.
pub fn sl2_weight(space: &InnerProductSpace) -> GradedOperator {
  let n = space.n() as i64;
  GradedOperator::degree_diagonal(&space.alg, |k| Qi::from(n - k as i64))
}

/// Multiplies the degree-`k` part of `op` by `f(k)`, `k` the source degree.
pub fn signed_by_degree(op: &GradedOperator, f: impl Fn(usize) -> Qi) -> GradedOperator {
  op.compose(&GradedOperator::degree_diagonal(op.algebra(), f))
}

/// `(−1)^{k+1}` on `A^k`.
pub fn alternating(k: usize) -> Qi {
  if k.is_multiple_of(2) {
    -Qi::one()
  } else {
    Qi::one()
  }
}

/// `d^c = J⁻¹dJ` and `d^Λ = [d, Λ]`.
#[derive(Clone, Debug)]
pub struct SymplecticOps {
  pub dc: GradedOperator,
  pub dlambda: GradedOperator,
  /// `d^c = i(δ̄ − δ)`.
  pub dc_matches_delta: bool,
}

pub fn dc_and_dlambda(space: &InnerProductSpace, cx: &CochainComplex, pair: &LefschetzPair) -> SymplecticOps {
  let j = space.j();
  let j_inv = GradedOperator::bidegree_diagonal(&space.alg, |p, q| Qi::i_pow(q as i64 - p as i64));
  let dc = j_inv.compose(&cx.d).compose(&j);
  let via_delta = cx.deltabar.sub(&cx.delta).scale(&Qi::i());
  SymplecticOps { dc_matches_delta: dc == via_delta, dlambda: cx.d.commutator(&pair.lambda), dc }
}

/// `(−1)^{k+1} ⋆D⋆` on `A^k`.
pub fn star_conjugate(space: &InnerProductSpace, op: &GradedOperator) -> GradedOperator {
  let ss = space.symplectic_star();
  signed_by_degree(&ss.sandwich(op, &ss), alternating)
}

/// `dω = 0` for the metric's fundamental form.
pub fn is_almost_kahler(cx: &CochainComplex, space: &InnerProductSpace) -> bool {
  cx.model.d_form(space.omega()).is_zero()
}
