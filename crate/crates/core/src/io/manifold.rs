//! The manifold file format.
//!
//! ```text
//! file     := header line*
//! header   := "manifold" NAME "ncomplex" INT
//! line     := "d" "phi" INT "=" sum
//!           | "real" INT
//!           | "d" "e" INT "=" sum          (after "real")
//!           | "phi" INT "=" sum            (after "real")
//!           | "metric" ("identity" | "h")  ("h" is followed by n rows of n literals)
//! sum      := [sign] term (("+" | "-") term)*
//! term     := scalar ["*" word] | word
//! word     := "w[" INT ("," INT)* "]" | "e" INT ("^" "e" INT)*
//! ```
//!
//! In `w[...]`, a positive index `k` is `φ^k` and `-k` is `φ̄^k`; in the real block
//! indices refer to `e^k`. Words are wedge products in the written order. `#`
//! starts a comment.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::{
  scalar::{scalar, Cursor},
  ParseError,
};
use crate::{
  cochain::{validate, Form, Monomial, StructureModel},
  hodge::HermitianMetric,
  linalg::{Qi, QiMatrix},
};

/// `de^k` and `φ^k` rows seen so far in a real block.
type PartialCoframe = (Vec<Option<Form>>, Vec<Option<Vec<Qi>>>);

/// Real structure equations and the complex coframe written in them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealCoframe {
  /// `de^k`, as forms on `2n` generators `e^1..e^{2n}`.
  pub de: Vec<Form>,
  /// Row `i` holds the coefficients of `φ^{i+1}` in `e^1..e^{2n}`.
  pub phi: QiMatrix,
}

/// A parsed manifold file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldFile {
  pub name: String,
  pub n: usize,
  /// Complex structure equations `dφ^i`, derived from the real block when present.
  pub equations: Vec<Form>,
  pub real: Option<RealCoframe>,
  /// Metric matrix `h`; `None` means the identity.
  pub metric: Option<QiMatrix>,
}

impl ManifoldFile {
  pub fn model(&self) -> StructureModel {
    StructureModel::new(self.name.clone(), self.n, self.equations.clone()).expect("checked while parsing")
  }

  pub fn metric(&self) -> HermitianMetric {
    match &self.metric {
      Some(h) => HermitianMetric::new(h.clone()).expect("checked while parsing"),
      None => HermitianMetric::identity(self.n),
    }
  }
}

#[derive(Clone, Copy)]
enum WordKind {
  Complex(usize),
  Real(usize),
}

fn semantic(line: usize, col: usize, message: impl Into<String>) -> ParseError {
  ParseError::Semantic { line, col, message: message.into() }
}

fn word(c: &mut Cursor, kind: WordKind, line: usize) -> Result<Form, ParseError> {
  c.skip_ws();
  let col = c.col();
  let mut gens: Vec<usize> = Vec::new();
  let ambient = match kind {
    WordKind::Complex(n) => n,
    WordKind::Real(m) => m,
  };
  let mut push = |g: usize, col: usize| -> Result<(), ParseError> {
    if gens.contains(&g) {
      return Err(semantic(line, col, "repeated index in wedge word"));
    }
    gens.push(g);
    Ok(())
  };
  if c.eat_prefix("w[") {
    loop {
      c.skip_ws();
      let icol = c.col();
      let k = c.int()?;
      let g = match kind {
        WordKind::Complex(n) if k != 0 && k.unsigned_abs() as usize <= n => {
          if k > 0 {
            k as usize - 1
          } else {
            n + k.unsigned_abs() as usize - 1
          }
        }
        WordKind::Real(m) if k > 0 && k as usize <= m => k as usize - 1,
        _ => return Err(semantic(line, icol, format!("index {k} out of range"))),
      };
      push(g, icol)?;
      if c.eat(']') {
        break;
      }
      c.expect(',')?;
    }
  } else if matches!(kind, WordKind::Real(_)) && c.peek() == Some('e') {
    loop {
      c.skip_ws();
      let icol = c.col();
      if c.bump() != Some('e') {
        return Err(c.error("expected 'e'"));
      }
      let k = c.digits().ok_or_else(|| c.error("expected an index"))?;
      let k: usize = k.try_into().unwrap_or(0);
      if k == 0 || k > ambient {
        return Err(semantic(line, icol, format!("index {k} out of range")));
      }
      push(k - 1, icol)?;
      if !c.eat('^') {
        break;
      }
    }
  } else {
    return Err(ParseError::Syntax { line, col, message: "expected a wedge word".into() });
  }
  Ok(
    gens
      .iter()
      .fold(Form::constant(ambient, Qi::one()), |acc, &g| acc.wedge(&Form::term(ambient, Monomial::generator(g), Qi::one()))),
  )
}

fn starts_word(c: &mut Cursor, kind: WordKind) -> bool {
  c.skip_ws();
  (c.peek() == Some('w') && c.peek_at(1) == Some('['))
    || (matches!(kind, WordKind::Real(_)) && c.peek() == Some('e') && c.peek_at(1).is_some_and(|x| x.is_ascii_digit()))
}

fn term(c: &mut Cursor, kind: WordKind, line: usize) -> Result<Form, ParseError> {
  if starts_word(c, kind) {
    return word(c, kind, line);
  }
  let ambient = match kind {
    WordKind::Complex(n) | WordKind::Real(n) => n,
  };
  let coeff = scalar(c)?;
  if c.eat('*') {
    Ok(word(c, kind, line)?.scale(&coeff))
  } else {
    Ok(Form::constant(ambient, coeff))
  }
}

fn sum(c: &mut Cursor, kind: WordKind, line: usize) -> Result<Form, ParseError> {
  let neg = if c.eat('-') {
    true
  } else {
    c.eat('+');
    false
  };
  let first = term(c, kind, line)?;
  let mut acc = if neg { first.scale(&-Qi::one()) } else { first };
  loop {
    if c.eat('+') {
      acc = acc.add(&term(c, kind, line)?);
    } else if c.eat('-') {
      acc = acc.add(&term(c, kind, line)?.scale(&-Qi::one()));
    } else if c.at_end() {
      return Ok(acc);
    } else {
      return Err(c.error("expected '+', '-' or end of line"));
    }
  }
}

fn strip_comment(line: &str) -> &str {
  line.split('#').next().unwrap_or("")
}

/// Parses and validates a manifold file.
pub fn parse_manifold(text: &str) -> Result<ManifoldFile, ParseError> {
  let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.trim().is_empty());
  let (hline, header) = lines.next().ok_or(ParseError::Syntax { line: 1, col: 1, message: "empty file".into() })?;
  let mut c = Cursor::new(header, hline);
  c.expect_keyword("manifold")?;
  let name = c.ident()?;
  c.expect_keyword("ncomplex")?;
  let ncol = c.col() + 1;
  let n = c.usize()?;
  if n == 0 || n > crate::cochain::form::MAX_N {
    return Err(semantic(hline, ncol, format!("complex dimension {n} is not supported")));
  }
  if !c.at_end() {
    return Err(c.error("unexpected input after header"));
  }

  let mut equations: Vec<Option<Form>> = vec![None; n];
  let mut real: Option<PartialCoframe> = None;
  let mut metric: Option<QiMatrix> = None;
  let mut last_line = hline;

  while let Some((ln, text)) = lines.next() {
    last_line = ln;
    let mut c = Cursor::new(text, ln);
    if c.eat_keyword("d") {
      c.skip_ws();
      let col = c.col();
      if c.eat_prefix("phi") {
        if real.is_some() {
          return Err(semantic(ln, col, "complex equations cannot be mixed with a real block"));
        }
        let k = index(&mut c, n, ln)?;
        c.expect('=')?;
        let f = sum(&mut c, WordKind::Complex(n), ln)?;
        if !f.is_zero() && f.homogeneous_degree() != Some(2) {
          return Err(semantic(ln, col, format!("d phi{k} must be a 2-form")));
        }
        set_once(&mut equations[k - 1], f, ln, col, &format!("d phi{k}"))?;
      } else if c.eat_prefix("e") {
        let Some((de, _)) = real.as_mut() else { return Err(semantic(ln, col, "d e<k> requires a preceding 'real' line")) };
        let k = index(&mut c, 2 * n, ln)?;
        c.expect('=')?;
        let f = sum(&mut c, WordKind::Real(2 * n), ln)?;
        if !f.is_zero() && f.homogeneous_degree() != Some(2) {
          return Err(semantic(ln, col, format!("d e{k} must be a 2-form")));
        }
        if f.terms().any(|(_, x)| !x.is_real()) {
          return Err(semantic(ln, col, format!("d e{k} must have real coefficients")));
        }
        set_once(&mut de[k - 1], f, ln, col, &format!("d e{k}"))?;
      } else {
        return Err(c.error("expected 'phi<k>' or 'e<k>'"));
      }
    } else if c.eat_keyword("real") {
      let col = c.col() + 1;
      let m = c.usize()?;
      if m != 2 * n {
        return Err(semantic(ln, col, format!("real dimension must be {}", 2 * n)));
      }
      if equations.iter().any(Option::is_some) || real.is_some() {
        return Err(semantic(ln, col, "real block must come first and only once"));
      }
      real = Some((vec![None; m], vec![None; n]));
    } else if c.eat_prefix("phi") {
      let col = c.col() - 3;
      let Some((_, phi)) = real.as_mut() else { return Err(semantic(ln, col, "phi<k> = ... requires a preceding 'real' line")) };
      let k = index(&mut c, n, ln)?;
      c.expect('=')?;
      let f = sum(&mut c, WordKind::Real(2 * n), ln)?;
      if !f.is_zero() && f.homogeneous_degree() != Some(1) {
        return Err(semantic(ln, col, format!("phi{k} must be a combination of e's")));
      }
      let row: Vec<Qi> = (0..2 * n).map(|g| f.coefficient(Monomial::generator(g))).collect();
      set_once(&mut phi[k - 1], row, ln, col, &format!("phi{k}"))?;
    } else if c.eat_keyword("metric") {
      let col = c.col() + 1;
      if metric.is_some() {
        return Err(semantic(ln, col, "duplicate metric"));
      }
      if c.eat_keyword("identity") {
        metric = Some(QiMatrix::identity(n));
      } else if c.eat_keyword("h") {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
          let (rl, rtext) = lines.next().ok_or(semantic(ln, col, format!("metric h needs {n} rows")))?;
          last_line = rl;
          let mut rc = Cursor::new(rtext, rl);
          let mut row = Vec::with_capacity(n);
          for _ in 0..n {
            row.push(literal_entry(&mut rc)?);
          }
          if !rc.at_end() {
            return Err(rc.error(format!("expected {n} entries")));
          }
          rows.push(row);
        }
        let h = QiMatrix::from_rows(n, rows);
        if let Err(e) = HermitianMetric::new(h.clone()) {
          return Err(semantic(ln, col, e.to_string()));
        }
        metric = Some(h);
      } else {
        return Err(c.error("expected 'identity' or 'h'"));
      }
      if !c.at_end() {
        return Err(c.error("unexpected input after metric"));
      }
    } else {
      return Err(c.error("expected 'd', 'real', 'phi' or 'metric'"));
    }
  }

  let (equations, real) = match real {
    None => {
      let eqs = equations
        .into_iter()
        .enumerate()
        .map(|(i, f)| f.ok_or(semantic(last_line, 1, format!("missing equation for d phi{}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
      (eqs, None)
    }
    Some((de, phi)) => {
      let de = de
        .into_iter()
        .enumerate()
        .map(|(i, f)| f.ok_or(semantic(last_line, 1, format!("missing equation for d e{}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
      let rows = phi
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or(semantic(last_line, 1, format!("missing definition of phi{}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
      let coframe = RealCoframe { de, phi: QiMatrix::from_rows(2 * n, rows) };
      let eqs = complexify(n, &coframe).ok_or(semantic(last_line, 1, "phi and their conjugates are not a coframe"))?;
      (eqs, Some(coframe))
    }
  };

  let file = ManifoldFile { name, n, equations, real, metric };
  let report = validate(&file.model());
  if let Some(failure) = report.first_failure() {
    return Err(ParseError::Invalid { message: format!("{} fails: {}", file.name, failure.name) });
  }
  Ok(file)
}

fn literal_entry(c: &mut Cursor) -> Result<Qi, ParseError> {
  c.skip_ws();
  if c.eat('-') {
    return Ok(-scalar(c)?);
  }
  scalar(c)
}

fn index(c: &mut Cursor, max: usize, line: usize) -> Result<usize, ParseError> {
  let col = c.col();
  let k = c.digits().ok_or_else(|| c.error("expected an index"))?;
  let k: usize = k.try_into().unwrap_or(0);
  if k == 0 || k > max {
    return Err(semantic(line, col, format!("index {k} out of range 1..={max}")));
  }
  Ok(k)
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, col: usize, what: &str) -> Result<(), ParseError> {
  if slot.is_some() {
    return Err(semantic(line, col, format!("duplicate definition of {what}")));
  }
  *slot = Some(value);
  Ok(())
}

/// `dφ^i = Σ_a P_ia de^a`, rewritten in `φ, φ̄` by inverting `[P; P̄]`.
pub fn complexify(n: usize, coframe: &RealCoframe) -> Option<Vec<Form>> {
  let p = &coframe.phi;
  let m = p.vstack(&p.conj());
  let inv = m.inverse().ok()?;
  let e: Vec<Form> = (0..2 * n)
    .map(|a| {
      let mut f = Form::zero(n);
      for g in 0..2 * n {
        f.add_term(Monomial::generator(g), inv[(a, g)].clone());
      }
      f
    })
    .collect();
  let substitute = |real_form: &Form| {
    let mut out = Form::zero(n);
    for (mono, c) in real_form.terms() {
      let prod = mono.generators().fold(Form::constant(n, Qi::one()), |acc, g| acc.wedge(&e[g]));
      out = out.add(&prod.scale(c));
    }
    out
  };
  let de: Vec<Form> = coframe.de.iter().map(substitute).collect();
  Some(
    (0..n)
      .map(|i| {
        let mut f = Form::zero(n);
        for (a, dea) in de.iter().enumerate() {
          if !p[(i, a)].is_zero() {
            f = f.add(&dea.scale(&p[(i, a)]));
          }
        }
        f
      })
      .collect(),
  )
}

/// Writes the complex form of a model and its metric.
pub fn write_manifold(model: &StructureModel, metric: &HermitianMetric) -> String {
  let mut out = String::new();
  writeln!(out, "manifold {} ncomplex {}", model.name, model.n).unwrap();
  for (i, f) in model.structure_equations().iter().enumerate() {
    writeln!(out, "d phi{} = {}", i + 1, f).unwrap();
  }
  if metric.is_identity() {
    writeln!(out, "metric identity").unwrap();
  } else {
    writeln!(out, "metric h").unwrap();
    let h = metric.matrix();
    for i in 0..h.rows() {
      let row: Vec<String> = h.row(i).iter().map(ToString::to_string).collect();
      writeln!(out, "{}", row.join(" ")).unwrap();
    }
  }
  out
}

#[cfg(test)]
mod tests {
  use super::*;

  const KT: &str = "manifold kt ncomplex 2
d phi1 = 0
d phi2 = (1/(2i))*w[1,2] + (1/(2i))*w[1,-2] - (1/(2i))*w[2,-1] + (1/(2i))*w[-1,-2]
";

  #[test]
  fn parses_complex_equations() {
    let f = parse_manifold(KT).unwrap();
    assert_eq!(f.n, 2);
    assert!(f.equations[0].is_zero());
    assert_eq!(f.equations[1].to_string(), "-i/2*w[1,2] - i/2*w[1,-2] + i/2*w[2,-1] - i/2*w[-1,-2]");
    assert!(f.metric.is_none());
  }

  #[test]
  fn word_order_gives_sign() {
    let f = parse_manifold("manifold a ncomplex 2\nd phi1 = 0\nd phi2 = w[-1,1]\n").unwrap();
    assert_eq!(f.equations[1].to_string(), "-w[1,-1]");
  }

  #[test]
  fn round_trip() {
    let f = parse_manifold(KT).unwrap();
    let g = HermitianMetric::diagonal(&[Qi::from(2), Qi::one()]).unwrap();
    let text = write_manifold(&f.model(), &g);
    let back = parse_manifold(&text).unwrap();
    assert_eq!(back.model(), f.model());
    assert_eq!(back.metric(), g);
  }

  #[test]
  fn errors_carry_positions() {
    let e = parse_manifold("manifold x ncomplex 2\nd phi1 = 0\nd phi2 = w[1,1]\n").unwrap_err();
    assert!(matches!(e, ParseError::Semantic { line: 3, col: 14, .. }), "{e:?}");
    let e = parse_manifold("manifold x ncomplex 2\nd phi1 = 0\nd phi2 = w[1,3]\n").unwrap_err();
    assert!(matches!(e, ParseError::Semantic { line: 3, .. }), "{e:?}");
    let e = parse_manifold("manifold x ncomplex 2\nd phi1 = 0\nd phi2 = 1/2i*w[1,2]\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { line: 3, .. }), "{e:?}");
    let e = parse_manifold("manifold x ncomplex 2\nd phi1 = 0\n").unwrap_err();
    assert!(matches!(e, ParseError::Semantic { .. }), "{e:?}");
    let e = parse_manifold("manifold x ncomplex 1\nd phi1 = 1/(0)*w[1,-1]\n").unwrap_err();
    assert!(matches!(e, ParseError::Syntax { line: 2, .. }), "{e:?}");
  }

  #[test]
  fn invalid_model_is_rejected() {
    let text = "manifold bad ncomplex 2\nd phi1 = 0\nd phi2 = (1/(2i))*w[1,2] + (1/(2i))*w[1,-2] - (1/(2i))*w[2,-1] + w[-1,-2]\n";
    assert!(matches!(parse_manifold(text), Err(ParseError::Invalid { .. })));
  }

  #[test]
  fn metric_rows() {
    let text = format!("{KT}metric h\n2 i\n-i 1\n");
    let f = parse_manifold(&text).unwrap();
    assert_eq!(f.metric.unwrap()[(0, 1)], Qi::i());
    let bad = format!("{KT}metric h\n1 2\n2 1\n");
    assert!(matches!(parse_manifold(&bad), Err(ParseError::Semantic { .. })));
  }

  #[test]
  fn real_coframe_of_a_torus() {
    let text = "manifold t ncomplex 1\nreal 2\nd e1 = 0\nd e2 = 0\nphi1 = e1 + i*e2\n";
    let f = parse_manifold(text).unwrap();
    assert!(f.equations[0].is_zero());
    assert!(f.real.is_some());
  }
}
