//! Deterministic text and JSON reports.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::{
  cochain::{Algebra, Check, Grading},
  hodge::HarmonicReport,
  linalg::Qi,
};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Table {
  pub title: String,
  pub columns: Vec<String>,
  pub rows: Vec<Vec<String>>,
}

impl Table {
  pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
    Self { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
  }

  pub fn push(&mut self, row: Vec<String>) {
    self.rows.push(row)
  }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
  pub name: String,
  pub status: &'static str,
  /// Informational rows do not affect the verdict.
  pub required: bool,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub block: Option<String>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub witness: Option<String>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub image: Option<String>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisBlock {
  pub space: String,
  pub grading: String,
  pub vectors: Vec<String>,
}

/// `{model, query, tables, identities, bases}`; scalars appear only as literal strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
  pub model: String,
  pub query: String,
  pub tables: Vec<Table>,
  pub identities: Vec<IdentityRow>,
  pub bases: Vec<BasisBlock>,
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn normalize(v: &[Qi]) -> Vec<Qi> {
  match v.iter().find(|c| !c.is_zero()) {
    Some(lead) if !lead.is_one() => {
      let inv = lead.inv().expect("nonzero");
      v.iter().map(|c| c * &inv).collect()
    }
    _ => v.to_vec(),
  }
}

impl ReportDocument {
  pub fn new(model: impl Into<String>, query: impl Into<String>) -> Self {
    Self { model: model.into(), query: query.into(), ..Self::default() }
  }

  pub fn add_check(&mut self, alg: &Algebra, check: &Check) {
    self.push_check(alg, check, true)
  }

  /// A check that is reported but does not decide [`ReportDocument::all_hold`].
  pub fn add_info(&mut self, alg: &Algebra, check: &Check) {
    self.push_check(alg, check, false)
  }

  fn push_check(&mut self, alg: &Algebra, check: &Check, required: bool) {
    let w = check.witness.as_ref();
    self.identities.push(IdentityRow {
      name: check.name.clone(),
      status: if check.holds() { "holds" } else { "fails" },
      required,
      block: w.map(|w| format!("({},{}) -> ({},{})", w.source.0, w.source.1, w.target.0, w.target.1)),
      witness: w.map(|w| alg.form(w.source.0 + w.source.1, &w.vector).to_string()),
      image: w.map(|w| alg.form(w.target.0 + w.target.1, &w.image).to_string()),
      detail: check.detail.clone(),
    });
  }

  pub fn add_checks<'a>(&mut self, alg: &Algebra, checks: impl IntoIterator<Item = &'a Check>) {
    for c in checks {
      self.add_check(alg, c);
    }
  }

  /// A dimension table and normalized bases for every computed grading.
  pub fn add_harmonic(&mut self, alg: &Algebra, report: &HarmonicReport, with_bases: bool) {
    let mut t = Table::new(format!("harmonic {}", report.label), &["grading", "dim", "crosscheck"]);
    for (g, s) in &report.spaces {
      let cross = match report.crosschecks.get(g) {
        Some(true) => "agrees",
        Some(false) => "DISAGREES",
        None => "-",
      };
      t.push(vec![g.to_string(), s.dim().to_string(), cross.into()]);
      if with_bases {
        self.add_basis(alg, &report.label, *g, &s.vectors());
      }
    }
    self.tables.push(t);
  }

  pub fn add_basis(&mut self, alg: &Algebra, space: &str, g: Grading, vectors: &[Vec<Qi>]) {
    let k = g.total_degree();
    let vectors = vectors.iter().map(|v| alg.form(k, &normalize(v)).to_string()).collect();
    self.bases.push(BasisBlock { space: space.to_string(), grading: g.to_string(), vectors });
  }

  pub fn all_hold(&self) -> bool {
    self.identities.iter().all(|i| !i.required || i.status == "holds")
  }

  pub fn to_json(&self) -> String {
    serde_json::to_string_pretty(self).expect("serializable")
  }

  pub fn to_text(&self) -> String {
    let mut out = String::new();
    writeln!(out, "model: {}", self.model).unwrap();
    writeln!(out, "query: {}", self.query).unwrap();
    for t in &self.tables {
      out.push('\n');
      render_table(&mut out, t);
    }
    if !self.identities.is_empty() {
      out.push_str("\nidentities\n");
      for i in &self.identities {
        let note = if i.required { "" } else { " (informational)" };
        writeln!(out, "  {}: {}{note}", i.name, i.status).unwrap();
        if let Some(b) = &i.block {
          writeln!(out, "    block {b}").unwrap();
        }
        if let (Some(w), Some(im)) = (&i.witness, &i.image) {
          writeln!(out, "    {w} |-> {im}").unwrap();
        }
        if let Some(d) = &i.detail {
          writeln!(out, "    {d}").unwrap();
        }
      }
    }
    for b in &self.bases {
      writeln!(out, "\nbasis {} {}", b.space, b.grading).unwrap();
      for v in &b.vectors {
        writeln!(out, "  {v}").unwrap();
      }
    }
    out
  }
}

fn render_table(out: &mut String, t: &Table) {
  writeln!(out, "{}", t.title).unwrap();
  let mut widths: Vec<usize> = t.columns.iter().map(|c| c.chars().count()).collect();
  for row in &t.rows {
    for (w, cell) in widths.iter_mut().zip(row) {
      *w = (*w).max(cell.chars().count());
    }
  }
  let line = |cells: &[String]| {
    let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
    format!("  {}", parts.join("  ").trim_end())
  };
  writeln!(out, "{}", line(&t.columns)).unwrap();
  for row in &t.rows {
    writeln!(out, "{}", line(row)).unwrap();
  }
}
