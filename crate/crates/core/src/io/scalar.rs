//! Scalar literals and a small positional cursor shared by the parsers.
//!
//! ```text
//! literal := [sign] scalar (("+" | "-") scalar)*
//! scalar  := unit ["/" divisor]
//! unit    := INT | INT "i" | "i" | "(" literal ")"
//! divisor := INT | "(" literal ")"
//! ```
//!
//! `1/2i` is rejected: a divisor containing `i` must be parenthesized, `1/(2i)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ParseError;
use crate::linalg::Qi;

/// Character cursor over one line, tracking a 1-based column.
#[derive(Clone, Debug)]
pub struct Cursor {
  chars: Vec<char>,
  pos: usize,
  line: usize,
}

impl Cursor {
  pub fn new(text: &str, line: usize) -> Self {
    Self { chars: text.chars().collect(), pos: 0, line }
  }

  pub fn col(&self) -> usize {
    self.pos + 1
  }

  pub fn error(&self, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line: self.line, col: self.col(), message: message.into() }
  }

  pub fn peek(&self) -> Option<char> {
    self.chars.get(self.pos).copied()
  }

  pub fn peek_at(&self, offset: usize) -> Option<char> {
    self.chars.get(self.pos + offset).copied()
  }

  pub fn bump(&mut self) -> Option<char> {
    let c = self.peek();
    if c.is_some() {
      self.pos += 1;
    }
    c
  }

  pub fn skip_ws(&mut self) {
    while self.peek().is_some_and(char::is_whitespace) {
      self.pos += 1;
    }
  }

  pub fn at_end(&mut self) -> bool {
    self.skip_ws();
    self.peek().is_none()
  }

  /// Consumes `c` after optional whitespace.
  pub fn eat(&mut self, c: char) -> bool {
    self.skip_ws();
    if self.peek() == Some(c) {
      self.pos += 1;
      true
    } else {
      false
    }
  }

  pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
    if self.eat(c) {
      Ok(())
    } else {
      Err(self.error(format!("expected '{c}'")))
    }
  }

  /// Consumes a keyword followed by a non-identifier character.
  pub fn eat_keyword(&mut self, kw: &str) -> bool {
    self.skip_ws();
    let n = kw.chars().count();
    let matches = kw.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c));
    if matches && !self.peek_at(n).is_some_and(|c| c.is_alphanumeric() || c == '_') {
      self.pos += n;
      true
    } else {
      false
    }
  }

  /// Consumes a literal prefix after optional whitespace.
  pub fn eat_prefix(&mut self, prefix: &str) -> bool {
    self.skip_ws();
    if prefix.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c)) {
      self.pos += prefix.chars().count();
      true
    } else {
      false
    }
  }

  pub fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
    if self.eat_keyword(kw) {
      Ok(())
    } else {
      Err(self.error(format!("expected '{kw}'")))
    }
  }

  pub fn ident(&mut self) -> Result<String, ParseError> {
    self.skip_ws();
    let start = self.pos;
    if !self.peek().is_some_and(|c| c.is_alphabetic() || c == '_') {
      return Err(self.error("expected a name"));
    }
    while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '-') {
      self.pos += 1;
    }
    Ok(self.chars[start..self.pos].iter().collect())
  }

  /// Unsigned decimal integer, no leading whitespace skipped.
  pub fn digits(&mut self) -> Option<BigInt> {
    let start = self.pos;
    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
      self.pos += 1;
    }
    (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().expect("digits"))
  }

  pub fn usize(&mut self) -> Result<usize, ParseError> {
    self.skip_ws();
    let col = self.col();
    let v = self.digits().ok_or_else(|| self.error("expected an integer"))?;
    v.try_into().map_err(|_| ParseError::Syntax { line: self.line, col, message: "integer too large".into() })
  }

  /// Signed integer.
  pub fn int(&mut self) -> Result<i64, ParseError> {
    self.skip_ws();
    let neg = self.eat('-');
    let col = self.col();
    let v: i64 = self.digits().ok_or_else(|| self.error("expected an integer"))?.try_into().map_err(|_| ParseError::Syntax {
      line: self.line,
      col,
      message: "integer too large".into(),
    })?;
    Ok(if neg { -v } else { v })
  }

  pub fn rest(&self) -> String {
    self.chars[self.pos..].iter().collect()
  }
}

/// `literal` production: an optionally signed sum of scalars.
pub fn literal(c: &mut Cursor) -> Result<Qi, ParseError> {
  c.skip_ws();
  let mut acc = if c.eat('-') {
    -scalar(c)?
  } else {
    c.eat('+');
    scalar(c)?
  };
  loop {
    if c.eat('+') {
      acc += scalar(c)?;
    } else if c.eat('-') {
      acc -= &scalar(c)?;
    } else {
      return Ok(acc);
    }
  }
}

/// `scalar` production: a unit with an optional divisor.
pub fn scalar(c: &mut Cursor) -> Result<Qi, ParseError> {
  let u = unit(c)?;
  c.skip_ws();
  if c.peek() == Some('/') && c.peek_at(1) != Some('/') {
    c.bump();
    c.skip_ws();
    let col = c.col();
    let d = if c.eat('(') {
      let v = literal(c)?;
      c.expect(')')?;
      v
    } else {
      let v = c.digits().ok_or_else(|| c.error("expected a divisor"))?;
      if c.peek() == Some('i') {
        return Err(c.error("imaginary divisor must be parenthesized, e.g. 1/(2i)"));
      }
      Qi::from_rational(BigRational::from_integer(v))
    };
    return u.checked_div(&d).ok_or(ParseError::Syntax { line: c.line, col, message: "division by zero".into() });
  }
  Ok(u)
}

fn unit(c: &mut Cursor) -> Result<Qi, ParseError> {
  c.skip_ws();
  if c.eat('(') {
    let v = literal(c)?;
    c.expect(')')?;
    return Ok(v);
  }
  if c.peek() == Some('i') && !c.peek_at(1).is_some_and(|x| x.is_alphanumeric()) {
    c.bump();
    return Ok(Qi::i());
  }
  let v = c.digits().ok_or_else(|| c.error("expected a number, 'i' or '('"))?;
  let r = BigRational::from_integer(v);
  if c.peek() == Some('i') && !c.peek_at(1).is_some_and(|x| x.is_alphanumeric()) {
    c.bump();
    return Ok(Qi::new(BigRational::zero(), r));
  }
  Ok(Qi::from_rational(r))
}

/// Parses a complete scalar literal such as `-3i/4`, `1/(2i)` or `(1/2-3i/4)`.
pub fn parse_scalar(text: &str) -> Result<Qi, ParseError> {
  let mut c = Cursor::new(text, 1);
  let v = literal(&mut c)?;
  if !c.at_end() {
    return Err(c.error("unexpected trailing input"));
  }
  Ok(v)
}

#[cfg(test)]
mod tests {
  use proptest::prelude::*;

  use super::*;

  #[test]
  fn accepted_literals() {
    assert_eq!(parse_scalar("0").unwrap(), Qi::zero());
    assert_eq!(parse_scalar("-3/4").unwrap(), Qi::from_fractions(-3, 4, 0, 1));
    assert_eq!(parse_scalar("i").unwrap(), Qi::i());
    assert_eq!(parse_scalar("-3i/4").unwrap(), Qi::from_fractions(0, 1, -3, 4));
    assert_eq!(parse_scalar("1/(2i)").unwrap(), Qi::from_fractions(0, 1, -1, 2));
    assert_eq!(parse_scalar("(1/2-3i/4)").unwrap(), Qi::from_fractions(1, 2, -3, 4));
    assert_eq!(parse_scalar(" 1 + i ").unwrap(), Qi::gaussian(1, 1));
    assert_eq!(parse_scalar("(3)/(1+2i)").unwrap(), Qi::from(3) / Qi::gaussian(1, 2));
  }

  #[test]
  fn rejected_literals() {
    assert!(parse_scalar("1/2i").is_err());
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("").is_err());
    assert!(parse_scalar("(1+i").is_err());
    assert!(parse_scalar("2x").is_err());
  }

  #[test]
  fn error_positions() {
    match parse_scalar("1/2i") {
      Err(ParseError::Syntax { line: 1, col, .. }) => assert_eq!(col, 4),
      other => panic!("unexpected {other:?}"),
    }
  }

  proptest! {
    #[test]
    fn display_round_trips(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
      let q = Qi::from_fractions(a, b, c, d);
      prop_assert_eq!(parse_scalar(&q.to_string()).unwrap(), q);
    }
  }
}
