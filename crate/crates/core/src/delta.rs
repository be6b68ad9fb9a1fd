//! `δ = ∂ + μ̄`, `δ̄ = ∂̄ + μ` and the harmonic theory built on them.

use crate::{
  cochain::{Check, CochainComplex, GradedOperator, Grading},
  hodge::{
    bc_laplacian, bott_chern_aeppli, cohomology, dc_and_dlambda, harmonic, is_almost_kahler, kernel_on, lefschetz_pair,
    sl2_weight, star_conjugate, HarmonicReport, InnerProductSpace, PairReport,
  },
  linalg::{Qi, Subspace},
};

/// An identity verdict: exact operator equality, or a subspace relation.
pub type IdentityReport = Check;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeltaError {
  #[error("the fundamental form is not closed, so the structure is not almost-Kähler")]
  NotAlmostKahler,
  #[error("Lefschetz power {k} exceeds the complex dimension {n}")]
  PowerOutOfRange { k: usize, n: usize },
}

fn equal(name: &str, lhs: &GradedOperator, rhs: &GradedOperator) -> IdentityReport {
  Check::vanishes(name, &lhs.sub(rhs))
}

/// `δ`, `δ̄` and the relations forced by `d² = 0`.
#[derive(Clone, Debug)]
pub struct DeltaOps {
  pub delta: GradedOperator,
  pub deltabar: GradedOperator,
  pub checks: Vec<IdentityReport>,
}

pub fn delta_ops(cx: &CochainComplex) -> DeltaOps {
  let (delta, deltabar) = (cx.delta.clone(), cx.deltabar.clone());
  let sq = |x: &GradedOperator| x.compose(x);
  let checks = vec![
    equal("d = delta + deltabar", &cx.d, &delta.add(&deltabar)),
    Check::vanishes("delta^2 + deltabar^2 = 0", &sq(&delta).add(&sq(&deltabar))),
    equal("delta^2 = del^2 - delbar^2", &sq(&delta), &sq(&cx.del).sub(&sq(&cx.delbar))),
    Check::vanishes("delta deltabar + deltabar delta = 0", &delta.anticommutator(&deltabar)),
  ];
  DeltaOps { delta, deltabar, checks }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
  Delta,
  Deltabar,
}

/// `Ker δ̄ ∩ Ker δ̄*` (or the `δ` version). On bidegrees the space is also
/// compared with `Ker ∂̄ ∩ Ker ∂̄* ∩ Ker μ ∩ Ker μ*` (conjugated for `δ`).
pub fn delta_harmonic(space: &InnerProductSpace, cx: &CochainComplex, which: Which, gradings: &[Grading]) -> HarmonicReport {
  let (op, label, parts) = match which {
    Which::Delta => (&cx.delta, "delta", [&cx.del, &cx.mubar]),
    Which::Deltabar => (&cx.deltabar, "deltabar", [&cx.delbar, &cx.mu]),
  };
  let mut report = harmonic(space, label, op, gradings);
  let adj: Vec<_> = parts.iter().map(|p| space.adjoint(p)).collect();
  let four = [parts[0], &adj[0], parts[1], &adj[1]];
  for (g, s) in &report.spaces {
    if let Grading::Bidegree(..) = g {
      let agree = kernel_on(&space.alg, *g, &four).span_eq(s);
      *report.crosschecks.get_mut(g).expect("laplacian crosscheck") &= agree;
    }
  }
  report
}

/// Bott-Chern and Aeppli spaces of `(δ, δ̄)`.
pub fn bc_aeppli_delta(space: &InnerProductSpace, cx: &CochainComplex, gradings: &[Grading]) -> PairReport {
  bott_chern_aeppli(space, "delta", &cx.delta, &cx.deltabar, gradings)
}

/// Every identity the almost-Kähler condition is expected to give, as exact matrix checks.
///
/// On a structure that is not almost-Kähler the suite still runs; failures are data.
pub fn ak_identity_suite(space: &InnerProductSpace, cx: &CochainComplex) -> Vec<IdentityReport> {
  let adj = |x: &GradedOperator| space.adjoint(x);
  let (delta, deltabar) = (&cx.delta, &cx.deltabar);
  let pair = lefschetz_pair(space);
  let (l, lambda) = (&pair.l, &pair.lambda);
  let i = Qi::i();
  let mi = -Qi::i();
  let lap_delta = space.laplacian(delta);
  let lap_deltabar = space.laplacian(deltabar);
  let x = delta.compose(&adj(deltabar)).add(&adj(deltabar).compose(delta));
  let y = deltabar.compose(&adj(delta)).add(&adj(delta).compose(deltabar));
  let e_j = x.add(&y);
  let f_j = GradedOperator::sum([
    &delta.compose(&x).compose(&adj(deltabar)).neg(),
    &x.compose(&adj(delta)).compose(deltabar),
    &adj(delta).compose(deltabar).compose(&x),
    &adj(delta).compose(&x).compose(deltabar).neg(),
  ])
  .expect("four terms");
  let bc_rhs = GradedOperator::sum([
    &lap_deltabar.compose(&lap_deltabar),
    &adj(deltabar).compose(deltabar),
    &adj(delta).compose(delta),
    &f_j,
  ])
  .expect("four terms");
  let ops = dc_and_dlambda(space, cx, &pair);
  let sq = |x: &GradedOperator| x.compose(x);
  vec![
    equal("[delta, Lambda] = i deltabar*", &delta.commutator(lambda), &adj(deltabar).scale(&i)),
    equal("[deltabar, Lambda] = -i delta*", &deltabar.commutator(lambda), &adj(delta).scale(&mi)),
    equal("[del, Lambda] = i delbar*", &cx.del.commutator(lambda), &adj(&cx.delbar).scale(&i)),
    equal("[delbar, Lambda] = -i del*", &cx.delbar.commutator(lambda), &adj(&cx.del).scale(&mi)),
    equal("[mubar, Lambda] = i mu*", &cx.mubar.commutator(lambda), &adj(&cx.mu).scale(&i)),
    equal("[mu, Lambda] = -i mubar*", &cx.mu.commutator(lambda), &adj(&cx.mubar).scale(&mi)),
    equal("Lap_delta = Lap_deltabar", &lap_delta, &lap_deltabar),
    equal("Lap_d = Lap_delta + Lap_deltabar + E_J", &space.laplacian(&cx.d), &lap_delta.add(&lap_deltabar).add(&e_j)),
    equal("E_J = 2(delta deltabar* + deltabar* delta)", &e_j, &x.scale(&Qi::from(2))),
    equal("deltabar delta* + delta* deltabar = delta deltabar* + deltabar* delta", &y, &x),
    equal("Lap_BC = Lap_deltabar^2 + deltabar* deltabar + delta* delta + F_J", &bc_laplacian(space, delta, deltabar), &bc_rhs),
    Check::vanishes("[L, Lap_deltabar] = 0", &l.commutator(&lap_deltabar)),
    Check::vanishes("[Lambda, Lap_deltabar] = 0", &lambda.commutator(&lap_deltabar)),
    equal("[Lambda, L] = (n-k) Id", &lambda.commutator(l), &sl2_weight(space)),
    equal("d^Lambda = (-1)^{k+1} *d*", &ops.dlambda, &star_conjugate(space, &cx.d)),
    equal("(d^c)* = -d^Lambda", &adj(&ops.dc), &ops.dlambda.neg()),
    equal(
      "d d^c + d^c d = 4i(delbar^2 - del^2)",
      &cx.d.anticommutator(&ops.dc),
      &sq(&cx.delbar).sub(&sq(&cx.del)).scale(&Qi::gaussian(0, 4)),
    ),
  ]
}

/// `Δ_d = 2Δ_δ`, equivalently `E_J = 0`: the Kähler equality.
pub fn kahler_equality(space: &InnerProductSpace, cx: &CochainComplex) -> IdentityReport {
  equal("Lap_d = 2 Lap_delta", &space.laplacian(&cx.d), &space.laplacian(&cx.delta).scale(&Qi::from(2)))
}

/// `Ker d ∩ Ker d^Λ ∩ Ker (dd^Λ)*`, compared with `Ker Δ_d` on bidegrees.
pub fn ddlambda_harmonic(
  space: &InnerProductSpace,
  cx: &CochainComplex,
  gradings: &[Grading],
) -> Result<HarmonicReport, DeltaError> {
  if !is_almost_kahler(cx, space) {
    return Err(DeltaError::NotAlmostKahler);
  }
  let alg = &space.alg;
  let dlambda = cx.d.commutator(&lefschetz_pair(space).lambda);
  let third = space.adjoint(&cx.d.compose(&dlambda));
  let lap = space.laplacian(&cx.d);
  let mut report = HarmonicReport::compute("d+dLambda", alg.n, gradings, |g| kernel_on(alg, g, &[&cx.d, &dlambda, &third]));
  for (&g, s) in &report.spaces {
    if let Grading::Bidegree(..) = g {
      report.crosschecks.insert(g, kernel_on(alg, g, &[&lap]).span_eq(s));
    }
  }
  Ok(report)
}

/// The five harmonic spaces on `A^{p,q}` that coincide on almost-Kähler structures.
#[derive(Clone, Debug)]
pub struct ChainReport {
  pub bidegree: (usize, usize),
  /// Dimensions of `H_{d+d^Λ}`, `H_δ ∩ H_δ̄`, `H_∂̄ ∩ H_∂ ∩ H_μ̄ ∩ H_μ`, `H_∂̄ ∩ H_μ` and `H_d`.
  pub dims: [usize; 5],
  pub check: IdentityReport,
}

pub const CHAIN_LABELS: [&str; 5] = ["d+dLambda", "delta & deltabar", "delbar & del & mubar & mu", "delbar & mu", "d"];

pub fn equality_chain_check(
  space: &InnerProductSpace,
  cx: &CochainComplex,
  p: usize,
  q: usize,
) -> Result<ChainReport, DeltaError> {
  let g = Grading::Bidegree(p, q);
  let alg = &space.alg;
  let first = ddlambda_harmonic(space, cx, &[g])?.spaces.remove(&g).expect("computed");
  let adj = |x: &GradedOperator| space.adjoint(x);
  let k = |ops: &[&GradedOperator]| kernel_on(alg, g, ops);
  let (da, dba) = (adj(&cx.delta), adj(&cx.deltabar));
  let (dela, delba, mua, mubara) = (adj(&cx.del), adj(&cx.delbar), adj(&cx.mu), adj(&cx.mubar));
  let da_full = adj(&cx.d);
  let spaces: [Subspace; 5] = [
    first,
    k(&[&cx.delta, &da, &cx.deltabar, &dba]),
    k(&[&cx.delbar, &delba, &cx.del, &dela, &cx.mubar, &mubara, &cx.mu, &mua]),
    k(&[&cx.delbar, &delba, &cx.mu, &mua]),
    k(&[&cx.d, &da_full]),
  ];
  let dims = spaces.clone().map(|s| s.dim());
  let mismatch = (1..5).find(|&i| !spaces[i].span_eq(&spaces[0]));
  let check = Check::condition(format!("equality chain on ({p},{q})"), mismatch.is_none(), || {
    let i = mismatch.expect("mismatch");
    format!("H_{} differs from H_{} (dims {:?})", CHAIN_LABELS[i], CHAIN_LABELS[0], dims)
  });
  Ok(ChainReport { bidegree: (p, q), dims, check })
}

/// Invariant Betti numbers `dim Ker d / Im d`.
pub fn betti(cx: &CochainComplex) -> Vec<usize> {
  (0..=cx.alg.top()).map(|k| cohomology(&cx.alg, &cx.d, k).dim).collect()
}

#[derive(Clone, Debug)]
pub struct LefschetzReport {
  pub k: usize,
  pub source_dim: usize,
  pub target_dim: usize,
  pub rank: usize,
  pub check: IdentityReport,
}

/// `L^k: H^{n−k}_BC → H^{n+k}_BC` lands in the target and is bijective.
pub fn hard_lefschetz_check(space: &InnerProductSpace, cx: &CochainComplex, k: usize) -> Result<LefschetzReport, DeltaError> {
  if !is_almost_kahler(cx, space) {
    return Err(DeltaError::NotAlmostKahler);
  }
  let n = space.n();
  if k > n {
    return Err(DeltaError::PowerOutOfRange { k, n });
  }
  let (lo, hi) = (Grading::Degree(n - k), Grading::Degree(n + k));
  let bc = bc_aeppli_delta(space, cx, &[lo, hi]).bc;
  let l = lefschetz_pair(space).l;
  let lk = (0..k).fold(GradedOperator::identity(&space.alg), |acc, _| l.compose(&acc));
  let (src, tgt) = (bc.space(lo).expect("computed"), bc.space(hi).expect("computed"));
  let image = src.map(lk.matrix(n - k));
  let lands = tgt.contains_subspace(&image);
  let bijective = image.dim() == src.dim() && image.dim() == tgt.dim();
  let check = Check::condition(format!("L^{k}: H^{}_BC -> H^{}_BC bijective", n - k, n + k), lands && bijective, || {
    format!("image dim {}, source dim {}, target dim {}, lands in target: {lands}", image.dim(), src.dim(), tgt.dim())
  });
  Ok(LefschetzReport { k, source_dim: src.dim(), target_dim: tgt.dim(), rank: image.dim(), check })
}

/// One degree of the `h_δ̄` versus `b` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
  pub k: usize,
  pub h_deltabar: usize,
  pub betti: usize,
  /// Every δ̄-harmonic basis vector lies in `Ker Δ_d`.
  pub contained: bool,
  /// The degree-`k` space equals the sum of its `(p, q)` slices.
  pub decomposable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
  pub almost_kahler: bool,
  pub rows: Vec<ComparisonRow>,
}

pub fn comparison_report(space: &InnerProductSpace, cx: &CochainComplex) -> ComparisonReport {
  let n = space.n();
  let r = delta_harmonic(space, cx, Which::Deltabar, &crate::hodge::all_gradings(n));
  let lap = space.laplacian(&cx.d);
  let b = betti(cx);
  let rows = (0..=2 * n)
    .map(|k| {
      let s = r.space(Grading::Degree(k)).expect("computed");
      let contained = s.vectors().iter().all(|v| lap.apply(k, v).iter().all(num_traits::Zero::is_zero));
      ComparisonRow { k, h_deltabar: s.dim(), betti: b[k], contained, decomposable: r.decomposable(k).expect("computed") }
    })
    .collect();
  ComparisonReport { almost_kahler: is_almost_kahler(cx, space), rows }
}
