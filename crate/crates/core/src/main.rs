use std::{path::PathBuf, process::ExitCode};

use ac_hodge::{
  cochain::{validate_complex, Check, CochainComplex, Grading},
  delta::{
    ak_identity_suite, bc_aeppli_delta, betti, comparison_report, ddlambda_harmonic, delta_harmonic, delta_ops,
    equality_chain_check, hard_lefschetz_check, kahler_equality, Which,
  },
  hodge::{
    all_bidegrees, all_degrees, all_gradings, cohomology, dc_and_dlambda, harmonic, is_almost_kahler, lefschetz_pair,
    HarmonicReport, InnerProductSpace, Quotient,
  },
  io::{catalog_names, catalog_source, parse_manifold, parse_scalar, ManifoldFile, ReportDocument, Table},
  linalg::Qi,
  parametric::{
    build_d, d_ab, da_lambda_suite, dab_cohomology, default_pairs, param_bc_aeppli, parametric_law_suite, random_pairs,
    square_zero_check, ParamPair, ParamQuad,
  },
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ac-hodge", version, about = "Exact harmonic forms and cohomologies of invariant almost-complex structures")]
struct Cli {
  #[command(subcommand)]
  command: Command,
}

#[derive(Subcommand)]
enum Command {
  /// Check d² = 0, the graded relations and unimodularity.
  Validate(Common),
  /// Invariant Betti numbers.
  Betti(Common),
  /// Harmonic spaces with bases.
  Harmonic(Query),
  /// Ker/Im cohomology with representatives.
  Cohomology(Query),
  /// Table of (p,q) harmonic dimensions.
  Diamond(Query),
  /// Run an identity suite.
  Verify(Verify),
  /// Built-in manifolds.
  #[command(subcommand)]
  Catalog(CatalogCmd),
}

#[derive(Args)]
struct Common {
  /// Manifold file.
  file: Option<PathBuf>,
  /// Built-in manifold instead of a file.
  #[arg(long, conflicts_with = "file")]
  catalog: Option<String>,
  /// Emit JSON instead of text.
  #[arg(long)]
  json: bool,
}

#[derive(Args)]
struct Params {
  /// First pair (a,b); values are Gaussian rationals such as 2, -i/3 or (1+2i).
  #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
  a: Option<Qi>,
  /// See --a.
  #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
  b: Option<Qi>,
  /// Second pair (c,e): a four-parameter operator for dab, the partner pair for bc-param and aeppli-param.
  #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
  c: Option<Qi>,
  /// See --c.
  #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
  e: Option<Qi>,
}

#[derive(Args)]
struct Query {
  #[command(flatten)]
  common: Common,
  /// Which harmonic or cohomology space.
  #[arg(long, value_enum)]
  space: Space,
  #[command(flatten)]
  params: Params,
  /// Restrict to total degree k (default: every degree and bidegree).
  #[arg(long, conflicts_with = "bidegree")]
  degree: Option<usize>,
  /// Restrict to bidegree (p,q).
  #[arg(long, num_args = 2, value_names = ["P", "Q"])]
  bidegree: Option<Vec<usize>>,
}

#[derive(Args)]
struct Verify {
  #[command(flatten)]
  common: Common,
  #[arg(long, value_enum)]
  suite: Suite,
  /// Parameter pairs "a,b;c,e;..." (default: the built-in sample set).
  #[arg(long, allow_hyphen_values = true)]
  pairs: Option<String>,
  /// Number of extra seeded random pairs.
  #[arg(long, default_value_t = 0)]
  random: usize,
  /// Seed for the random pairs.
  #[arg(long, default_value_t = 0)]
  seed: u64,
}

#[derive(Subcommand)]
enum CatalogCmd {
  List,
  Show { name: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
  D,
  Dc,
  Delta,
  Deltabar,
  Dab,
  BcDelta,
  AeppliDelta,
  Ddlambda,
  BcParam,
  AeppliParam,
  DaLambda,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
  Structure,
  GradedRelations,
  AlmostKahler,
  Parametric,
  Lefschetz,
  EqualityChain,
  Comparison,
}

fn scalar_arg(s: &str) -> Result<Qi, String> {
  parse_scalar(s).map_err(|e| e.to_string())
}

enum Failure {
  Usage(String),
  Input(String),
}

type Outcome = Result<(ReportDocument, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
  Failure::Usage(msg.into())
}

fn input(msg: impl ToString) -> Failure {
  Failure::Input(msg.to_string())
}

struct Loaded {
  file: ManifoldFile,
  cx: CochainComplex,
  space: InnerProductSpace,
}

fn load(common: &Common) -> Result<Loaded, Failure> {
  let file = match (&common.file, &common.catalog) {
    (Some(path), None) => {
      let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
      parse_manifold(&text).map_err(|e| input(format!("{}: {e}", path.display())))?
    }
    (None, Some(name)) => parse_manifold(catalog_source(name).map_err(|e| usage(e.to_string()))?).map_err(input)?,
    _ => return Err(usage("give a manifold file or --catalog NAME")),
  };
  let cx = CochainComplex::new(&file.model());
  let space = InnerProductSpace::new(&cx.alg, &file.metric()).map_err(input)?;
  Ok(Loaded { file, cx, space })
}

fn gradings(q: &Query, n: usize, default: Vec<Grading>) -> Result<Vec<Grading>, Failure> {
  if let Some(k) = q.degree {
    if k > 2 * n {
      return Err(usage(format!("degree {k} exceeds {}", 2 * n)));
    }
    return Ok(vec![Grading::Degree(k)]);
  }
  if let Some(pq) = &q.bidegree {
    let (p, qq) = (pq[0], pq[1]);
    if p > n || qq > n {
      return Err(usage(format!("bidegree ({p},{qq}) out of range for n = {n}")));
    }
    return Ok(vec![Grading::Bidegree(p, qq)]);
  }
  Ok(default)
}

fn pair(a: &Option<Qi>, b: &Option<Qi>, names: &str) -> Result<ParamPair, Failure> {
  match (a, b) {
    (Some(a), Some(b)) => ParamPair::new(a.clone(), b.clone()).map_err(|e| usage(e.to_string())),
    _ => Err(usage(format!("this space needs {names}"))),
  }
}

fn second_pair(p: &Params) -> Result<Option<ParamPair>, Failure> {
  match (&p.c, &p.e) {
    (None, None) => Ok(None),
    _ => pair(&p.c, &p.e, "both --c and --e").map(Some),
  }
}

fn need_a(p: &Params) -> Result<Qi, Failure> {
  p.a.clone().ok_or_else(|| usage("this space needs --a"))
}

fn harmonic_report(l: &Loaded, q: &Query, gs: &[Grading]) -> Result<(HarmonicReport, Vec<Check>), Failure> {
  let (cx, s) = (&l.cx, &l.space);
  let p = &q.params;
  Ok(match q.space {
    Space::D => (harmonic(s, "d", &cx.d, gs), vec![]),
    Space::Dc => (harmonic(s, "dc", &dc_and_dlambda(s, cx, &lefschetz_pair(s)).dc, gs), vec![]),
    Space::Delta => (delta_harmonic(s, cx, Which::Delta, gs), vec![]),
    Space::Deltabar => (delta_harmonic(s, cx, Which::Deltabar, gs), vec![]),
    Space::Dab => {
      let first = pair(&p.a, &p.b, "--a and --b")?;
      match second_pair(p)? {
        None => (harmonic(s, &format!("D{first}"), &d_ab(cx, &first), gs), vec![]),
        Some(ce) => {
          let quad = ParamQuad { a: first.a().clone(), b: first.b().clone(), c: ce.a().clone(), e: ce.b().clone() };
          let label = format!("D({}, {}, {}, {})", quad.a, quad.b, quad.c, quad.e);
          (harmonic(s, &label, &build_d(cx, &quad), gs), vec![square_zero_check(cx, &quad)])
        }
      }
    }
    Space::BcDelta => (bc_aeppli_delta(s, cx, gs).bc, vec![]),
    Space::AeppliDelta => (bc_aeppli_delta(s, cx, gs).aeppli, vec![]),
    Space::Ddlambda => (ddlambda_harmonic(s, cx, gs).map_err(input)?, vec![]),
    Space::BcParam | Space::AeppliParam => {
      let first = pair(&p.a, &p.b, "--a, --b, --c and --e")?;
      let second = second_pair(p)?.ok_or_else(|| usage("this space needs --c and --e"))?;
      let r = param_bc_aeppli(s, cx, &first, &second, gs).map_err(input)?;
      (if q.space == Space::BcParam { r.bc } else { r.aeppli }, vec![])
    }
    Space::DaLambda => {
      let suite = da_lambda_suite(s, cx, &need_a(p)?).map_err(input)?;
      (harmonic(s, &format!("D_{}^Lambda", suite.a), &suite.da_lambda, gs), suite.checks)
    }
  })
}

fn query_label(cmd: &str, q: &Query) -> String {
  let space = q.space.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
  let mut s = format!("{cmd} --space {space}");
  for (name, v) in [("a", &q.params.a), ("b", &q.params.b), ("c", &q.params.c), ("e", &q.params.e)] {
    if let Some(v) = v {
      s.push_str(&format!(" --{name} {v}"));
    }
  }
  if let Some(k) = q.degree {
    s.push_str(&format!(" --degree {k}"));
  }
  if let Some(pq) = &q.bidegree {
    s.push_str(&format!(" --bidegree {} {}", pq[0], pq[1]));
  }
  s
}

fn run_harmonic(q: &Query) -> Outcome {
  let l = load(&q.common)?;
  let gs = gradings(q, l.cx.n(), all_gradings(l.cx.n()))?;
  let (report, checks) = harmonic_report(&l, q, &gs)?;
  let mut doc = ReportDocument::new(&l.file.name, query_label("harmonic", q));
  doc.add_harmonic(&l.cx.alg, &report, true);
  doc.add_checks(&l.cx.alg, &checks);
  let ok = report.consistent() && doc.all_hold();
  Ok((doc, ok))
}

fn run_diamond(q: &Query) -> Outcome {
  if q.degree.is_some() || q.bidegree.is_some() {
    return Err(usage("diamond always covers every bidegree"));
  }
  let l = load(&q.common)?;
  let n = l.cx.n();
  let (report, checks) = harmonic_report(&l, q, &all_bidegrees(n))?;
  let mut doc = ReportDocument::new(&l.file.name, query_label("diamond", q));
  let qs: Vec<String> = (0..=n).map(|q| format!("q={q}")).collect();
  let mut columns = vec!["p"];
  columns.extend(qs.iter().map(String::as_str));
  let mut t = Table::new(format!("h^(p,q) {}", report.label), &columns);
  for p in 0..=n {
    let mut row = vec![p.to_string()];
    row.extend((0..=n).map(|q| report.bidegree_dim(p, q).to_string()));
    t.push(row);
  }
  doc.tables.push(t);
  doc.add_checks(&l.cx.alg, &checks);
  let ok = report.consistent() && doc.all_hold();
  Ok((doc, ok))
}

fn run_cohomology(q: &Query) -> Outcome {
  if q.bidegree.is_some() {
    return Err(usage("cohomology is computed per total degree"));
  }
  let l = load(&q.common)?;
  let (cx, s) = (&l.cx, &l.space);
  let n = cx.n();
  let degrees: Vec<usize> = gradings(q, n, all_degrees(n))?.iter().map(|g| g.total_degree()).collect();
  let p = &q.params;
  let mut checks = Vec::new();
  let (label, quotients): (String, Vec<(usize, Quotient)>) = match q.space {
    Space::Dab => {
      let first = pair(&p.a, &p.b, "--a and --b")?;
      match second_pair(p)? {
        None => (format!("D{first}"), degrees.iter().map(|&k| (k, dab_cohomology(cx, &first, k))).collect()),
        Some(ce) => {
          let quad = ParamQuad { a: first.a().clone(), b: first.b().clone(), c: ce.a().clone(), e: ce.b().clone() };
          let check = square_zero_check(cx, &quad);
          if !check.holds() {
            let mut doc = ReportDocument::new(&l.file.name, query_label("cohomology", q));
            doc.add_check(&cx.alg, &check);
            return Ok((doc, false));
          }
          let d = build_d(cx, &quad);
          (
            format!("D({}, {}, {}, {})", quad.a, quad.b, quad.c, quad.e),
            degrees.iter().map(|&k| (k, cohomology(&cx.alg, &d, k))).collect(),
          )
        }
      }
    }
    Space::DaLambda => {
      let suite = da_lambda_suite(s, cx, &need_a(p)?).map_err(input)?;
      checks = suite.checks.clone();
      (format!("D_{}^Lambda", suite.a), degrees.iter().map(|&k| (k, suite.lambda_cohomology[k].clone())).collect())
    }
    Space::BcParam | Space::AeppliParam => {
      let first = pair(&p.a, &p.b, "--a, --b, --c and --e")?;
      let second = second_pair(p)?.ok_or_else(|| usage("this space needs --c and --e"))?;
      let gs: Vec<_> = degrees.iter().map(|&k| Grading::Degree(k)).collect();
      let r = param_bc_aeppli(s, cx, &first, &second, &gs).map_err(input)?;
      let (name, map) = if q.space == Space::BcParam { ("bc", r.bc_cohomology) } else { ("aeppli", r.aeppli_cohomology) };
      (format!("{name}-D{first},D{second}"), map.into_iter().collect())
    }
    _ => return Err(usage("cohomology supports --space dab, da-lambda, bc-param or aeppli-param")),
  };
  let mut doc = ReportDocument::new(&l.file.name, query_label("cohomology", q));
  let mut t = Table::new(format!("cohomology {label}"), &["degree", "dim"]);
  for (k, quot) in &quotients {
    t.push(vec![k.to_string(), quot.dim.to_string()]);
    doc.add_basis(&cx.alg, &label, Grading::Degree(*k), &quot.representatives);
  }
  doc.tables.push(t);
  doc.add_checks(&cx.alg, &checks);
  let ok = doc.all_hold();
  Ok((doc, ok))
}

fn run_validate(c: &Common) -> Outcome {
  let l = load(c)?;
  let report = validate_complex(&l.cx);
  let mut doc = ReportDocument::new(&l.file.name, "validate");
  let mut t = Table::new("structure", &["property", "value"]);
  t.push(vec!["complex dimension".into(), l.cx.n().to_string()]);
  t.push(vec!["integrable".into(), report.integrable.to_string()]);
  t.push(vec!["almost-Kahler".into(), is_almost_kahler(&l.cx, &l.space).to_string()]);
  doc.tables.push(t);
  doc.add_checks(&l.cx.alg, report.checks());
  let ok = doc.all_hold();
  Ok((doc, ok))
}

fn run_betti(c: &Common) -> Outcome {
  let l = load(c)?;
  let mut doc = ReportDocument::new(&l.file.name, "betti");
  let mut t = Table::new("invariant Betti numbers", &["degree", "b"]);
  for (k, b) in betti(&l.cx).into_iter().enumerate() {
    t.push(vec![k.to_string(), b.to_string()]);
  }
  doc.tables.push(t);
  Ok((doc, true))
}

fn parse_pairs(text: &str) -> Result<Vec<ParamPair>, Failure> {
  text
    .split(';')
    .filter(|s| !s.trim().is_empty())
    .map(|item| {
      let (a, b) = item.split_once(',').ok_or_else(|| usage(format!("pair '{item}' is not 'a,b'")))?;
      let a = parse_scalar(a).map_err(|e| usage(format!("pair '{item}': {e}")))?;
      let b = parse_scalar(b).map_err(|e| usage(format!("pair '{item}': {e}")))?;
      ParamPair::new(a, b).map_err(|e| usage(e.to_string()))
    })
    .collect()
}

fn run_verify(v: &Verify) -> Outcome {
  let l = load(&v.common)?;
  let (cx, s) = (&l.cx, &l.space);
  let suite = v.suite.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default();
  let mut doc = ReportDocument::new(&l.file.name, format!("verify --suite {suite}"));
  let alg = &cx.alg;
  let n = cx.n();
  let need_ak = || if is_almost_kahler(cx, s) { Ok(()) } else { Err(input("the structure is not almost-Kahler (d omega != 0)")) };
  match v.suite {
    Suite::Structure => doc.add_checks(alg, validate_complex(cx).checks()),
    Suite::GradedRelations => {
      doc.add_checks(alg, &validate_complex(cx).relations);
      doc.add_checks(alg, &delta_ops(cx).checks);
    }
    Suite::AlmostKahler => {
      doc.add_checks(alg, &ak_identity_suite(s, cx));
      // The Kahler equality is expected to fail on non-Kahler structures, so it never decides the exit code.
      doc.add_info(alg, &kahler_equality(s, cx));
    }
    Suite::Parametric => {
      let mut pairs = match &v.pairs {
        Some(text) => parse_pairs(text)?,
        None => default_pairs(),
      };
      pairs.extend(random_pairs(v.seed, v.random));
      if pairs.is_empty() {
        return Err(usage("no parameter pairs"));
      }
      doc.add_checks(alg, &parametric_law_suite(s, cx, &pairs));
    }
    Suite::Lefschetz => {
      need_ak()?;
      let mut t = Table::new("hard Lefschetz on BC harmonics", &["k", "source", "target", "rank"]);
      for k in 1..=n {
        let r = hard_lefschetz_check(s, cx, k).map_err(input)?;
        t.push(vec![k.to_string(), r.source_dim.to_string(), r.target_dim.to_string(), r.rank.to_string()]);
        doc.add_check(alg, &r.check);
      }
      doc.tables.push(t);
    }
    Suite::EqualityChain => {
      need_ak()?;
      let mut t = Table::new("equality chain dims", &["(p,q)", "d+dL", "delta&deltabar", "four", "delbar&mu", "d"]);
      for p in 0..=n {
        for q in 0..=n {
          let r = equality_chain_check(s, cx, p, q).map_err(input)?;
          let mut row = vec![format!("({p},{q})")];
          row.extend(r.dims.iter().map(|d| d.to_string()));
          t.push(row);
          doc.add_check(alg, &r.check);
        }
      }
      doc.tables.push(t);
    }
    Suite::Comparison => {
      let c = comparison_report(s, cx);
      let mut t = Table::new("h_deltabar versus b", &["degree", "h_deltabar", "b", "in Ker Lap_d", "decomposable"]);
      for r in &c.rows {
        t.push(vec![
          r.k.to_string(),
          r.h_deltabar.to_string(),
          r.betti.to_string(),
          r.contained.to_string(),
          r.decomposable.to_string(),
        ]);
        if c.almost_kahler {
          doc.add_check(
            alg,
            &Check::condition(format!("H^{}_deltabar in Ker Lap_d", r.k), r.contained, || {
              "a basis vector is not d-harmonic".into()
            }),
          );
        }
      }
      doc.tables.push(t);
      let mut f = Table::new("structure", &["property", "value"]);
      f.push(vec!["almost-Kahler".into(), c.almost_kahler.to_string()]);
      doc.tables.push(f);
    }
  }
  let ok = doc.all_hold();
  Ok((doc, ok))
}

fn run_catalog(c: &CatalogCmd) -> Result<String, Failure> {
  match c {
    CatalogCmd::List => {
      let mut out = String::new();
      for name in catalog_names() {
        let src = catalog_source(name).expect("listed");
        let about = src.lines().next().unwrap_or("").trim_start_matches('#').trim();
        out.push_str(&format!("{name:<18}{about}\n"));
      }
      Ok(out)
    }
    CatalogCmd::Show { name } => catalog_source(name).map(str::to_string).map_err(|e| usage(e.to_string())),
  }
}

fn main() -> ExitCode {
  let cli = Cli::parse();
  let (outcome, json) = match &cli.command {
    Command::Catalog(c) => {
      return match run_catalog(c) {
        Ok(text) => {
          print!("{text}");
          ExitCode::SUCCESS
        }
        Err(f) => fail(f),
      };
    }
    Command::Validate(c) => (run_validate(c), c.json),
    Command::Betti(c) => (run_betti(c), c.json),
    Command::Harmonic(q) => (run_harmonic(q), q.common.json),
    Command::Cohomology(q) => (run_cohomology(q), q.common.json),
    Command::Diamond(q) => (run_diamond(q), q.common.json),
    Command::Verify(v) => (run_verify(v), v.common.json),
  };
  match outcome {
    Ok((doc, ok)) => {
      if json {
        println!("{}", doc.to_json());
      } else {
        print!("{}", doc.to_text());
      }
      if ok {
        ExitCode::SUCCESS
      } else {
        ExitCode::from(1)
      }
    }
    Err(f) => fail(f),
  }
}

fn fail(f: Failure) -> ExitCode {
  match f {
    Failure::Usage(m) => {
      eprintln!("error: {m}");
      ExitCode::from(2)
    }
    Failure::Input(m) => {
      eprintln!("error: {m}");
      ExitCode::from(3)
    }
  }
}
