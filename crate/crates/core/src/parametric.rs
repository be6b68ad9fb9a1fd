//! The family `D_{a,b,c,e} = a∂̄ + b∂ + cμ + eμ̄` and its cohomologies.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{
  cochain::{Check, CochainComplex, FormVector, GradedOperator, Grading},
  hodge::{
    bott_chern_aeppli, cohomology, harmonic, is_almost_kahler, lefschetz_pair, star_conjugate, HarmonicReport, InnerProductSpace,
    PairReport, Quotient,
  },
  linalg::Qi,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
  #[error("parameter {name} must be nonzero")]
  ZeroParameter { name: &'static str },
  #[error("pairs {first} and {second} do not anticommute: a·e ≠ b·c")]
  NotAnticommuting { first: Box<ParamPair>, second: Box<ParamPair> },
  #[error("Bott-Chern and Aeppli spaces need two distinct pairs, got {0} twice")]
  SamePair(Box<ParamPair>),
  #[error("the fundamental form is not closed, so the structure is not almost-Kähler")]
  NotAlmostKahler,
}

fn nonzero(name: &'static str, v: &Qi) -> Result<(), ParamError> {
  if v.is_zero() {
    Err(ParamError::ZeroParameter { name })
  } else {
    Ok(())
  }
}

/// `(a, b)` selecting the square-zero operator `D_{a,b} = D_{a, b, b²/a, a²/b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPair {
  a: Qi,
  b: Qi,
}

impl ParamPair {
  pub fn new(a: Qi, b: Qi) -> Result<Self, ParamError> {
    nonzero("a", &a)?;
    nonzero("b", &b)?;
    Ok(Self { a, b })
  }

  pub fn a(&self) -> &Qi {
    &self.a
  }

  pub fn b(&self) -> &Qi {
    &self.b
  }

  pub fn quad(&self) -> ParamQuad {
    let c = &self.b * &self.b / &self.a;
    let e = &self.a * &self.a / &self.b;
    ParamQuad { a: self.a.clone(), b: self.b.clone(), c, e }
  }

  /// `a = b̄`, the criterion for `D_{a,b}` to be a real operator.
  pub fn is_real(&self) -> bool {
    self.a == self.b.conj()
  }

  /// `|a| = |b|`, decided as `a·ā = b·b̄`.
  pub fn equal_modulus(&self) -> bool {
    self.a.norm_sqr() == self.b.norm_sqr()
  }

  /// `a·e = b·c` for the second pair `(c, e)`.
  pub fn anticommutes_with(&self, other: &ParamPair) -> bool {
    &self.a * &other.b == &self.b * &other.a
  }
}

impl fmt::Display for ParamPair {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "({}, {})", self.a, self.b)
  }
}

/// Four free coefficients; square-zero is computed, not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamQuad {
  pub a: Qi,
  pub b: Qi,
  pub c: Qi,
  pub e: Qi,
}

impl ParamQuad {
  pub fn new(a: Qi, b: Qi, c: Qi, e: Qi) -> Result<Self, ParamError> {
    for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("e", &e)] {
      nonzero(name, v)?;
    }
    Ok(Self { a, b, c, e })
  }

  /// `c = b²/a` and `e = a²/b`.
  pub fn is_pair(&self) -> bool {
    &self.c * &self.a == &self.b * &self.b && &self.e * &self.b == &self.a * &self.a
  }
}

/// `(1,1), (i,−i), (1,2), (i,1), (1+i,1−i), (3,1+2i)`.
pub fn default_pairs() -> Vec<ParamPair> {
  [(1, 0, 1, 0), (0, 1, 0, -1), (1, 0, 2, 0), (0, 1, 1, 0), (1, 1, 1, -1), (3, 0, 1, 2)]
    .into_iter()
    .map(|(ar, ai, br, bi)| ParamPair::new(Qi::gaussian(ar, ai), Qi::gaussian(br, bi)).expect("nonzero"))
    .collect()
}

/// Nonzero Gaussian rationals with small numerators and denominators.
pub fn random_scalar(rng: &mut impl Rng) -> Qi {
  loop {
    let q = Qi::from_fractions(rng.gen_range(-6..=6), rng.gen_range(1..=4), rng.gen_range(-6..=6), rng.gen_range(1..=4));
    if !q.is_zero() {
      return q;
    }
  }
}

/// `count` pairs drawn from a ChaCha stream seeded with `seed`.
pub fn random_pairs(seed: u64, count: usize) -> Vec<ParamPair> {
  let mut rng = ChaCha8Rng::seed_from_u64(seed);
  (0..count).map(|_| ParamPair::new(random_scalar(&mut rng), random_scalar(&mut rng)).expect("nonzero")).collect()
}

pub fn build_d(cx: &CochainComplex, q: &ParamQuad) -> GradedOperator {
  let parts = [cx.delbar.scale(&q.a), cx.del.scale(&q.b), cx.mu.scale(&q.c), cx.mubar.scale(&q.e)];
  GradedOperator::sum(&parts).expect("four terms")
}

pub fn d_ab(cx: &CochainComplex, p: &ParamPair) -> GradedOperator {
  build_d(cx, &p.quad())
}

/// `D_{a,b,c,e}² = 0`, with a nonzero block of `D²` on failure.
pub fn square_zero_check(cx: &CochainComplex, q: &ParamQuad) -> Check {
  let d = build_d(cx, q);
  Check::vanishes("D^2 = 0", &d.compose(&d))
}

/// `D_{a,b}D_{c,e} + D_{c,e}D_{a,b} = 0`.
pub fn anticommute_check(cx: &CochainComplex, p1: &ParamPair, p2: &ParamPair) -> Check {
  Check::vanishes(format!("[D{p1}, D{p2}] = 0"), &d_ab(cx, p1).anticommutator(&d_ab(cx, p2)))
}

/// `D_{a,b}` equals its own complex conjugate.
pub fn is_real_operator(cx: &CochainComplex, p: &ParamPair) -> bool {
  let d = d_ab(cx, p);
  d.conjugate() == d
}

/// `Ker D_{a,b} ∩ Ker D_{a,b}*`, cross-checked against the Laplacian.
pub fn dab_harmonic(space: &InnerProductSpace, cx: &CochainComplex, p: &ParamPair, gradings: &[Grading]) -> HarmonicReport {
  harmonic(space, &format!("D{p}"), &d_ab(cx, p), gradings)
}

/// `Ker D_{a,b} / Im D_{a,b}` in degree `k`.
pub fn dab_cohomology(cx: &CochainComplex, p: &ParamPair, k: usize) -> Quotient {
  cohomology(&cx.alg, &d_ab(cx, p), k)
}

/// `(a/b)^q` on `A^{p,q}`.
pub fn rescale_operator(cx: &CochainComplex, p: &ParamPair) -> GradedOperator {
  let r = &p.a / &p.b;
  GradedOperator::bidegree_diagonal(&cx.alg, |_, q| r.pow(q as i64))
}

/// Multiplies the `(p, q)` component of `alpha` by `(a/b)^q`.
pub fn rescale_map(cx: &CochainComplex, p: &ParamPair, alpha: &FormVector) -> FormVector {
  let coords = match alpha.grading {
    Grading::Degree(k) => rescale_operator(cx, p).apply(k, &alpha.coords),
    Grading::Bidegree(_, q) => {
      let s = (&p.a / &p.b).pow(q as i64);
      alpha.coords.iter().map(|c| c * &s).collect()
    }
  };
  FormVector { grading: alpha.grading, coords }
}

/// Bott-Chern and Aeppli spaces of `(D_{a,b}, D_{c,e})`.
pub fn param_bc_aeppli(
  space: &InnerProductSpace,
  cx: &CochainComplex,
  p1: &ParamPair,
  p2: &ParamPair,
  gradings: &[Grading],
) -> Result<PairReport, ParamError> {
  if p1 == p2 {
    return Err(ParamError::SamePair(Box::new(p1.clone())));
  }
  if !p1.anticommutes_with(p2) {
    return Err(ParamError::NotAnticommuting { first: Box::new(p1.clone()), second: Box::new(p2.clone()) });
  }
  Ok(bott_chern_aeppli(space, &format!("D{p1},D{p2}"), &d_ab(cx, p1), &d_ab(cx, p2), gradings))
}

/// `D_a = D_{a,ā}`, `D_a^Λ = [D_a, Λ]`, the identities tying them together and their cohomologies.
#[derive(Clone, Debug)]
pub struct DaLambda {
  pub a: Qi,
  pub da: GradedOperator,
  pub da_lambda: GradedOperator,
  pub checks: Vec<Check>,
  /// `Ker D_a^Λ / Im D_a^Λ` by degree.
  pub lambda_cohomology: Vec<Quotient>,
  pub pair: PairReport,
}

impl DaLambda {
  pub fn holds(&self) -> bool {
    self.checks.iter().all(Check::holds)
  }
}

pub fn da_lambda_suite(space: &InnerProductSpace, cx: &CochainComplex, a: &Qi) -> Result<DaLambda, ParamError> {
  if !is_almost_kahler(cx, space) {
    return Err(ParamError::NotAlmostKahler);
  }
  let p = ParamPair::new(a.clone(), a.conj())?;
  let lambda = lefschetz_pair(space).lambda;
  let da = d_ab(cx, &p);
  let da_lambda = da.commutator(&lambda);
  // [D_{a,b}, Λ] = −i D*_{−b̄,ā} with b = ā
  let partner = ParamPair::new(-a.clone(), a.conj())?;
  let lemma = space.adjoint(&d_ab(cx, &partner)).scale(&-Qi::i());
  let dlambda = cx.d.commutator(&lambda);
  let mut checks = vec![
    Check::vanishes("(D_a^L)^2 = 0", &da_lambda.compose(&da_lambda)),
    Check::vanishes("D_a D_a^L + D_a^L D_a = 0", &da.anticommutator(&da_lambda)),
    Check::vanishes("[D_a, L*] = -i D*_{-a,conj a}", &da_lambda.sub(&lemma)),
    Check::vanishes("D_a^L = (-1)^{k+1} *D_a*", &da_lambda.sub(&star_conjugate(space, &da))),
  ];
  if *a == Qi::from(1) {
    checks.push(Check::vanishes("D_1^L = d^L", &da_lambda.sub(&dlambda)));
  }
  let top = cx.alg.top();
  let lambda_cohomology = (0..=top).map(|k| cohomology(&cx.alg, &da_lambda, k)).collect();
  let degrees: Vec<_> = (0..=top).map(Grading::Degree).collect();
  let pair = bott_chern_aeppli(space, &format!("D_{a},D_{a}^L"), &da, &da_lambda, &degrees);
  Ok(DaLambda { a: a.clone(), da, da_lambda, checks, lambda_cohomology, pair })
}

/// The parametric laws for each pair, as checks.
///
/// The "iff" criteria are only meaningful when `J` is not integrable; on an
/// integrable structure every combination squares to zero and anticommutes,
/// so those checks are skipped there.
pub fn parametric_law_suite(space: &InnerProductSpace, cx: &CochainComplex, pairs: &[ParamPair]) -> Vec<Check> {
  let integrable = crate::cochain::validate_complex(cx).integrable;
  let top = cx.alg.top();
  let degrees: Vec<_> = (0..=top).map(Grading::Degree).collect();
  let de_rham = harmonic(space, "d", &cx.d, &degrees);
  let mut checks = Vec::new();
  for (idx, p) in pairs.iter().enumerate() {
    let d = d_ab(cx, p);
    checks.push(Check::vanishes(format!("D{p}^2 = 0"), &d.compose(&d)));
    let real = is_real_operator(cx, p);
    checks.push(Check::condition(format!("D{p} real iff a = conj b"), real == p.is_real(), || {
      format!("operator real: {real}, a = conj b: {}", p.is_real())
    }));
    if !integrable {
      let quad = p.quad();
      for off in
        [ParamQuad { e: &quad.e + &Qi::from(1), ..quad.clone() }, ParamQuad { c: &quad.c * &Qi::from(2), ..quad.clone() }]
      {
        let sq = square_zero_check(cx, &off).holds();
        checks.push(Check::condition(
          format!("D({}, {}, {}, {})^2 = 0 iff c = b^2/a and e = a^2/b", off.a, off.b, off.c, off.e),
          sq == off.is_pair(),
          || format!("square zero: {sq}, criterion: {}", off.is_pair()),
        ));
      }
      let scaled = ParamPair::new(p.a() * &Qi::from(3), p.b() * &Qi::from(3)).expect("nonzero");
      for other in [Some(&scaled), pairs.get((idx + 1) % pairs.len())].into_iter().flatten() {
        let anti = anticommute_check(cx, p, other).holds();
        checks.push(Check::condition(
          format!("D{p}, D{other} anticommute iff ae = bc"),
          anti == p.anticommutes_with(other),
          || format!("anticommute: {anti}, ae = bc: {}", p.anticommutes_with(other)),
        ));
      }
    }
    let r = dab_harmonic(space, cx, p, &degrees);
    let dims = r.degree_dims();
    let cohom: Vec<_> = (0..=top).map(|k| dab_cohomology(cx, p, k).dim).collect();
    checks.push(Check::condition(format!("D{p}: harmonic dims = Ker/Im dims"), r.consistent() && dims == cohom, || {
      format!("harmonic {dims:?}, quotient {cohom:?}")
    }));
    checks.push(Check::condition(format!("D{p}: h^k = h^(2n-k)"), dims.iter().eq(dims.iter().rev()), || format!("{dims:?}")));
    if p.equal_modulus() {
      let m = rescale_operator(cx, p);
      let ok = (0..=top).all(|k| {
        let src = de_rham.space(Grading::Degree(k)).expect("computed");
        let image = src.map(m.matrix(k));
        image.dim() == src.dim() && image.span_eq(r.space(Grading::Degree(k)).expect("computed"))
      });
      checks.push(Check::condition(format!("D{p}: rescaling maps Lap_d-harmonics onto D-harmonics"), ok, || {
        "image differs from the D-harmonic space".into()
      }));
    }
  }
  checks
}

#[cfg(test)]
mod tests {
  use num_traits::One;
  use proptest::prelude::*;

  use super::*;
  use crate::{
    cochain::{Form, Monomial},
    hodge::{all_degrees, HermitianMetric},
    io::catalog,
  };

  fn setup(name: &str) -> (CochainComplex, InnerProductSpace) {
    let f = catalog(name).unwrap();
    let cx = CochainComplex::new(&f.model());
    let s = InnerProductSpace::new(&cx.alg, &f.metric()).unwrap();
    (cx, s)
  }

  fn q(re: i64, im: i64) -> Qi {
    Qi::gaussian(re, im)
  }

  fn pair(a: Qi, b: Qi) -> ParamPair {
    ParamPair::new(a, b).unwrap()
  }

  fn w(holo: &[usize], anti: &[usize], c: Qi) -> Form {
    Form::term(2, Monomial::from_indices(2, holo, anti).unwrap(), c)
  }

  #[test]
  fn zero_parameters_are_rejected() {
    assert_eq!(ParamPair::new(Qi::zero(), Qi::one()), Err(ParamError::ZeroParameter { name: "a" }));
    assert!(ParamQuad::new(Qi::one(), Qi::one(), Qi::one(), Qi::zero()).is_err());
  }

  #[test]
  fn unit_pair_is_d() {
    let (cx, _) = setup("kodaira_thurston");
    assert_eq!(build_d(&cx, &ParamQuad::new(Qi::one(), Qi::one(), Qi::one(), Qi::one()).unwrap()), cx.d);
  }

  #[test]
  fn i_minus_i_is_dc() {
    let (cx, _) = setup("kodaira_thurston");
    let p = pair(Qi::i(), -Qi::i());
    assert_eq!(p.quad(), ParamQuad::new(Qi::i(), -Qi::i(), Qi::i(), -Qi::i()).unwrap());
    assert_eq!(d_ab(&cx, &p), cx.deltabar.sub(&cx.delta).scale(&Qi::i()));
  }

  #[test]
  fn kt_d_ab_on_phi2() {
    let (cx, _) = setup("kodaira_thurston");
    let half_i = Qi::one() / Qi::gaussian(0, 2);
    for p in default_pairs() {
      let (a, b) = (p.a().clone(), p.b().clone());
      let expected = w(&[1], &[2], &a * &half_i)
        .add(&w(&[2], &[1], -(&a * &half_i)))
        .add(&w(&[1, 2], &[], &b * &half_i))
        .add(&w(&[], &[1, 2], &a * &a / &b * &half_i));
      let v = d_ab(&cx, &p).apply(1, &cx.alg.coords(1, &Form::phi(2, 2)));
      assert_eq!(cx.alg.form(2, &v), expected, "{p}");
    }
  }

  #[test]
  fn square_zero_examples() {
    let (cx, _) = setup("kodaira_thurston");
    let quad = |a: Qi, b: Qi, c: Qi, e: Qi| ParamQuad::new(a, b, c, e).unwrap();
    let one = Qi::one;
    assert!(square_zero_check(&cx, &quad(one(), one(), one(), one())).holds());
    let half = Qi::from_fractions(1, 2, 0, 1);
    assert!(square_zero_check(&cx, &quad(q(2, 0), one(), half, q(4, 0))).holds());
    let bad = square_zero_check(&cx, &quad(one(), one(), one(), q(2, 0)));
    let witness = bad.witness.expect("nonzero D^2");
    assert!(witness.image.iter().any(|c| !c.is_zero()));
  }

  #[test]
  fn anticommute_examples() {
    let (cx, _) = setup("kodaira_thurston");
    assert!(anticommute_check(&cx, &pair(q(1, 0), q(1, 0)), &pair(q(2, 0), q(2, 0))).holds());
    assert!(!anticommute_check(&cx, &pair(q(1, 0), q(1, 0)), &pair(Qi::i(), -Qi::i())).holds());
    assert!(anticommute_check(&cx, &pair(q(1, 0), q(2, 0)), &pair(q(2, 0), q(4, 0))).holds());
  }

  #[test]
  fn kt_harmonic_and_cohomology_agree() {
    let (cx, s) = setup("kodaira_thurston");
    for p in default_pairs() {
      let r = dab_harmonic(&s, &cx, &p, &all_degrees(2));
      assert!(r.consistent());
      assert_eq!(r.degree_dim(2), 4, "{p}");
      for k in 0..=4 {
        assert_eq!(dab_cohomology(&cx, &p, k).dim, r.degree_dim(k), "{p} k={k}");
        assert_eq!(r.degree_dim(k), r.degree_dim(4 - k), "{p} k={k}");
      }
    }
    assert_eq!(dab_cohomology(&cx, &pair(q(1, 0), q(1, 0)), 1).dim, 3);
    assert_eq!(dab_cohomology(&cx, &pair(Qi::i(), -Qi::i()), 2).dim, 4);
  }

  #[test]
  fn kt_listed_representatives_span_degree_two() {
    let (cx, s) = setup("kodaira_thurston");
    for p in default_pairs() {
      let (a, b) = (p.a(), p.b());
      let ab = a * &b.conj();
      let t = Qi::from_rational(a.norm_sqr() - b.norm_sqr()) / &ab;
      let u = b * &a.conj() / &ab;
      let listed = [
        w(&[1], &[1], Qi::one()),
        w(&[2], &[2], Qi::one()),
        w(&[1], &[2], Qi::one()).add(&w(&[2], &[1], Qi::one())),
        w(&[], &[1, 2], Qi::one()).add(&w(&[1], &[2], -t)).add(&w(&[1, 2], &[], -u)),
      ];
      let vectors: Vec<_> = listed.iter().map(|f| cx.alg.coords(2, f)).collect();
      let r = dab_harmonic(&s, &cx, &p, &[Grading::Degree(2)]);
      let span = crate::linalg::Subspace::span(6, &vectors);
      assert!(span.span_eq(r.space(Grading::Degree(2)).unwrap()), "{p}");
    }
  }

  #[test]
  fn rescale_examples() {
    let (cx, s) = setup("kodaira_thurston");
    let v = FormVector { grading: Grading::Degree(2), coords: (0..6).map(|i| q(i, 1)).collect() };
    assert_eq!(rescale_map(&cx, &pair(q(1, 0), q(1, 0)), &v), v);
    let flipped = rescale_map(&cx, &pair(Qi::i(), -Qi::i()), &v);
    let sign = GradedOperator::bidegree_diagonal(&cx.alg, |_, q| Qi::from(if q % 2 == 0 { 1 } else { -1 }));
    assert_eq!(flipped.coords, sign.apply(2, &v.coords));
    // i^{-k} J α for k = 2
    let j = s.j();
    assert_eq!(flipped.coords, j.apply(2, &v.coords).iter().map(|c| -c.clone()).collect::<Vec<_>>());

    let p = pair(q(1, 1), q(1, -1));
    assert!(p.equal_modulus());
    let de_rham = harmonic(&s, "d", &cx.d, &all_degrees(2));
    let target = dab_harmonic(&s, &cx, &p, &all_degrees(2));
    for k in 0..=4 {
      let image = de_rham.space(Grading::Degree(k)).unwrap().map(rescale_operator(&cx, &p).matrix(k));
      assert_eq!(image.dim(), de_rham.degree_dim(k));
      assert!(image.span_eq(target.space(Grading::Degree(k)).unwrap()), "k={k}");
    }
  }

  #[test]
  fn bc_aeppli_examples() {
    let (cx, s) = setup("kodaira_thurston");
    let r = param_bc_aeppli(&s, &cx, &pair(q(1, 0), q(1, 0)), &pair(q(2, 0), q(2, 0)), &all_degrees(2)).unwrap();
    // D_{2,2} = 2d, so the space is Ker d: b_2 = 4 plus the one-dimensional Im d.
    assert_eq!(r.bc.degree_dim(2), 5);
    assert_eq!(r.bc_cohomology[&2].dim, 5);
    assert!(r.bc.consistent() && r.aeppli.consistent() && r.hodge_isomorphic() && r.dual());
    let r = param_bc_aeppli(&s, &cx, &pair(q(1, 0), q(2, 0)), &pair(q(2, 0), q(4, 0)), &all_degrees(2)).unwrap();
    assert!(r.bc.consistent() && r.aeppli.consistent() && r.hodge_isomorphic() && r.dual());

    let err = param_bc_aeppli(&s, &cx, &pair(q(1, 0), q(1, 0)), &pair(Qi::i(), -Qi::i()), &[]).unwrap_err();
    assert!(matches!(err, ParamError::NotAnticommuting { .. }));
    assert!(matches!(
      param_bc_aeppli(&s, &cx, &pair(q(1, 0), q(1, 0)), &pair(q(1, 0), q(1, 0)), &[]),
      Err(ParamError::SamePair(_))
    ));

    let (tcx, ts) = setup("torus4");
    let r = param_bc_aeppli(&ts, &tcx, &pair(q(1, 0), q(2, 0)), &pair(q(3, 0), q(6, 0)), &all_degrees(2)).unwrap();
    assert_eq!(r.bc.degree_dims(), [1, 4, 6, 4, 1]);
    assert_eq!(r.aeppli.degree_dims(), [1, 4, 6, 4, 1]);
  }

  #[test]
  fn da_lambda_on_kt() {
    let (cx, s) = setup("kodaira_thurston");
    for a in [Qi::one(), Qi::i(), q(1, 1), q(3, 2)] {
      let suite = da_lambda_suite(&s, &cx, &a).unwrap();
      assert!(suite.holds(), "{a}: {:?}", suite.checks.iter().find(|c| !c.holds()).map(|c| &c.name));
      assert!(suite.pair.bc.consistent() && suite.pair.aeppli.consistent() && suite.pair.hodge_isomorphic());
    }
    let suite = da_lambda_suite(&s, &cx, &Qi::one()).unwrap();
    assert_eq!(suite.checks.len(), 5);
  }

  #[test]
  fn da_lambda_on_torus_is_full() {
    let (cx, s) = setup("torus4");
    let suite = da_lambda_suite(&s, &cx, &q(2, 1)).unwrap();
    let dims: Vec<_> = suite.lambda_cohomology.iter().map(|c| c.dim).collect();
    assert_eq!(dims, [1, 4, 6, 4, 1]);
    assert_eq!(suite.pair.bc_cohomology.values().map(|c| c.dim).collect::<Vec<_>>(), [1, 4, 6, 4, 1]);
    assert_eq!(suite.pair.aeppli_cohomology.values().map(|c| c.dim).collect::<Vec<_>>(), [1, 4, 6, 4, 1]);
  }

  #[test]
  fn da_lambda_needs_closed_omega() {
    let (cx, s) = setup("filiform4");
    assert_eq!(da_lambda_suite(&s, &cx, &Qi::one()).unwrap_err(), ParamError::NotAlmostKahler);
  }

  #[test]
  fn general_metric_keeps_kt_dimensions() {
    let f = catalog("kodaira_thurston").unwrap();
    let cx = CochainComplex::new(&f.model());
    let g = HermitianMetric::diagonal(&[q(2, 0), q(1, 0)]).unwrap();
    let s = InnerProductSpace::new(&cx.alg, &g).unwrap();
    let r = dab_harmonic(&s, &cx, &pair(q(1, 0), q(2, 0)), &all_degrees(2));
    assert_eq!(r.degree_dims(), [1, 3, 4, 3, 1]);
  }

  #[test]
  fn law_suite_on_kt() {
    let (cx, s) = setup("kodaira_thurston");
    let mut pairs = default_pairs();
    pairs.extend(random_pairs(3, 4));
    let checks = parametric_law_suite(&s, &cx, &pairs);
    let failed: Vec<_> = checks.iter().filter(|c| !c.holds()).map(|c| &c.name).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(checks.iter().any(|c| c.name.contains("rescaling")));
  }

  #[test]
  fn random_pairs_keep_kt_dimensions() {
    let (cx, s) = setup("kodaira_thurston");
    for p in random_pairs(11, 6) {
      assert_eq!(dab_harmonic(&s, &cx, &p, &all_degrees(2)).degree_dims(), [1, 3, 4, 3, 1], "{p}");
    }
  }

  #[test]
  fn random_pairs_are_reproducible() {
    assert_eq!(random_pairs(7, 5), random_pairs(7, 5));
    assert_ne!(random_pairs(7, 5), random_pairs(8, 5));
  }

  proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kt_parametric_laws(seed in 0u64..1000) {
      let (cx, _) = setup("kodaira_thurston");
      let ps = random_pairs(seed, 2);
      let (p, r) = (&ps[0], &ps[1]);
      let d = d_ab(&cx, p);
      prop_assert!(d.compose(&d).is_zero());
      prop_assert_eq!(is_real_operator(&cx, p), p.is_real());
      let conj = ParamPair::new(p.b().conj(), p.b().clone()).unwrap();
      prop_assert!(is_real_operator(&cx, &conj));
      prop_assert_eq!(anticommute_check(&cx, p, r).holds(), p.anticommutes_with(r));
      prop_assert_eq!(anticommute_check(&cx, p, r).holds(), anticommute_check(&cx, r, p).holds());
      let scaled = ParamPair::new(p.a() * r.a(), p.b() * r.a()).unwrap();
      prop_assert!(anticommute_check(&cx, p, &scaled).holds());
      let off = ParamQuad { e: p.quad().e + Qi::one(), ..p.quad() };
      prop_assert_eq!(square_zero_check(&cx, &off).holds(), off.is_pair());
    }
  }
}
