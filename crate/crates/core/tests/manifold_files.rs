use ac_hodge::{
  cochain::CochainComplex,
  delta::{delta_harmonic, Which},
  hodge::{all_gradings, HermitianMetric, InnerProductSpace},
  io::{catalog, catalog_names, parse_manifold, write_manifold},
  linalg::Qi,
};

const IWASAWA_REAL: &str = "\
manifold iwasawa6 ncomplex 3
real 6
d e1 = 0
d e2 = 0
d e3 = 0
d e4 = 0
d e5 = -e1^e3 + e2^e4
d e6 = -e1^e4 - e2^e3
phi1 = e1 + i*e6
phi2 = e2 + i*e5
phi3 = e3 + i*e4
metric identity
";

#[test]
fn iwasawa_real_coframe_gives_the_catalog_equations() {
  let from_real = parse_manifold(IWASAWA_REAL).unwrap();
  let listed = catalog("iwasawa6").unwrap();
  assert_eq!(from_real.model(), listed.model());
}

#[test]
fn catalog_survives_writing_and_reparsing() {
  for name in catalog_names() {
    let f = catalog(name).unwrap();
    let text = write_manifold(&f.model(), &f.metric());
    let back = parse_manifold(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
    assert_eq!(back.model(), f.model(), "{name}");
    assert_eq!(back.metric(), f.metric(), "{name}");
  }
}

#[test]
fn written_metric_is_read_back() {
  let f = catalog("kodaira_thurston").unwrap();
  let h = HermitianMetric::diagonal(&[Qi::from(2), Qi::from_fractions(1, 3, 0, 1)]).unwrap();
  let back = parse_manifold(&write_manifold(&f.model(), &h)).unwrap();
  assert_eq!(back.metric(), h);
}

#[test]
fn kt_deltabar_duality_under_another_metric() {
  let f = catalog("kodaira_thurston").unwrap();
  let text = format!("{}metric h\n  3 i\n  -i 1\n", write_manifold(&f.model(), &f.metric()).replace("metric identity\n", ""));
  let g = parse_manifold(&text).unwrap();
  assert!(g.metric.is_some());
  let cx = CochainComplex::new(&g.model());
  let s = InnerProductSpace::new(&cx.alg, &g.metric()).unwrap();
  let r = delta_harmonic(&s, &cx, Which::Deltabar, &all_gradings(2));
  assert!(r.consistent());
  let dims = r.degree_dims();
  assert!(dims.iter().eq(dims.iter().rev()), "{dims:?}");
  assert_eq!(dims[0], 1);
}
