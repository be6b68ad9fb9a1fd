//! Monomials in the coframe `φ^1..φ^n, φ̄^1..φ̄^n` and sparse forms built from them.

use std::{collections::BTreeMap, fmt};

use num_traits::{One, Zero};

use crate::linalg::Qi;

/// Largest supported complex dimension (generators are bits of a `u32`).
pub const MAX_N: usize = 16;

/// A wedge monomial `φ^I ∧ φ̄^J` with increasing index lists.
///
/// Bit `i` (for `i < n`) is `φ^{i+1}`; bit `n + j` is `φ̄^{j+1}`. The canonical
/// order of factors is the order of bits, so every `φ` precedes every `φ̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub u32);

impl Monomial {
  pub const ONE: Monomial = Monomial(0);

  /// Builds from 1-based holomorphic and antiholomorphic index sets.
  /// Returns `None` on repeated or out-of-range indices.
  pub fn from_indices(n: usize, holo: &[usize], anti: &[usize]) -> Option<Self> {
    let mut bits = 0u32;
    for (&i, offset) in holo.iter().map(|i| (i, 0)).chain(anti.iter().map(|j| (j, n))) {
      if i == 0 || i > n {
        return None;
      }
      let b = 1u32 << (offset + i - 1);
      if bits & b != 0 {
        return None;
      }
      bits |= b;
    }
    Some(Monomial(bits))
  }

  /// The single generator with the given bit position.
  pub fn generator(g: usize) -> Self {
    Monomial(1 << g)
  }

  pub fn degree(self) -> usize {
    self.0.count_ones() as usize
  }

  pub fn bidegree(self, n: usize) -> (usize, usize) {
    let low = self.0 & low_mask(n);
    (low.count_ones() as usize, (self.0 >> n).count_ones() as usize)
  }

  /// Generator bit positions in increasing order.
  pub fn generators(self) -> impl Iterator<Item = usize> {
    let bits = self.0;
    (0..32).filter(move |g| bits & (1 << g) != 0)
  }

  /// 1-based holomorphic and antiholomorphic indices.
  pub fn indices(self, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut holo = Vec::new();
    let mut anti = Vec::new();
    for g in self.generators() {
      if g < n {
        holo.push(g + 1);
      } else {
        anti.push(g - n + 1);
      }
    }
    (holo, anti)
  }

  /// `self ∧ other` as a sign and canonical monomial, or `None` if they share a factor.
  pub fn wedge(self, other: Monomial) -> Option<(bool, Monomial)> {
    if self.0 & other.0 != 0 {
      return None;
    }
    // Each generator of `other` must move left past the larger generators of `self`.
    let swaps: u32 = other.generators().map(|g| (self.0 >> g).count_ones()).sum();
    Some((swaps % 2 == 1, Monomial(self.0 | other.0)))
  }

  /// Conjugate `φ^I φ̄^J ↦ φ̄^I φ^J = (−1)^{|I||J|} φ^J φ̄^I`; the flag is the sign.
  pub fn conjugate(self, n: usize) -> (bool, Monomial) {
    let low = self.0 & low_mask(n);
    let high = self.0 >> n;
    let (p, q) = (low.count_ones(), high.count_ones());
    ((p * q) % 2 == 1, Monomial(high | (low << n)))
  }

  /// Renders as a word `w[1,2,-1]`; the empty monomial is `1`.
  pub fn word(self, n: usize) -> String {
    if self.0 == 0 {
      return "1".to_string();
    }
    let (holo, anti) = self.indices(n);
    let parts: Vec<String> = holo.iter().map(|i| i.to_string()).chain(anti.iter().map(|j| format!("-{j}"))).collect();
    format!("w[{}]", parts.join(","))
  }
}

fn low_mask(n: usize) -> u32 {
  if n >= 32 {
    u32::MAX
  } else {
    (1u32 << n) - 1
  }
}

/// A sparse complex form: a finite combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
  n: usize,
  terms: BTreeMap<Monomial, Qi>,
}

impl Form {
  pub fn zero(n: usize) -> Self {
    Self { n, terms: BTreeMap::new() }
  }

  pub fn constant(n: usize, c: Qi) -> Self {
    Self::term(n, Monomial::ONE, c)
  }

  pub fn term(n: usize, m: Monomial, c: Qi) -> Self {
    let mut f = Self::zero(n);
    f.add_term(m, c);
    f
  }

  /// `φ^i` (1-based).
  pub fn phi(n: usize, i: usize) -> Self {
    Self::term(n, Monomial::generator(i - 1), Qi::one())
  }

  /// `φ̄^i` (1-based).
  pub fn phibar(n: usize, i: usize) -> Self {
    Self::term(n, Monomial::generator(n + i - 1), Qi::one())
  }

  pub fn n(&self) -> usize {
    self.n
  }

  pub fn is_zero(&self) -> bool {
    self.terms.is_empty()
  }

  pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Qi)> {
    self.terms.iter()
  }

  pub fn coefficient(&self, m: Monomial) -> Qi {
    self.terms.get(&m).cloned().unwrap_or_else(Qi::zero)
  }

  pub fn add_term(&mut self, m: Monomial, c: Qi) {
    if c.is_zero() {
      return;
    }
    let entry = self.terms.entry(m).or_insert_with(Qi::zero);
    *entry += c;
    if entry.is_zero() {
      self.terms.remove(&m);
    }
  }

  pub fn add(&self, other: &Form) -> Form {
    let mut out = self.clone();
    for (m, c) in &other.terms {
      out.add_term(*m, c.clone());
    }
    out
  }

  pub fn scale(&self, s: &Qi) -> Form {
    let mut out = Form::zero(self.n);
    for (m, c) in &self.terms {
      out.add_term(*m, c * s);
    }
    out
  }

  pub fn wedge(&self, other: &Form) -> Form {
    let mut out = Form::zero(self.n);
    for (a, x) in &self.terms {
      for (b, y) in &other.terms {
        if let Some((neg, m)) = a.wedge(*b) {
          let c = x * y;
          out.add_term(m, if neg { -c } else { c });
        }
      }
    }
    out
  }

  /// Complex conjugate: conjugates coefficients and swaps `φ ↔ φ̄`.
  pub fn conjugate(&self) -> Form {
    let mut out = Form::zero(self.n);
    for (m, c) in &self.terms {
      let (neg, cm) = m.conjugate(self.n);
      let cc = c.conj();
      out.add_term(cm, if neg { -cc } else { cc });
    }
    out
  }

  /// The part of bidegree `(p, q)`.
  pub fn component(&self, p: usize, q: usize) -> Form {
    let terms = self.terms.iter().filter(|(m, _)| m.bidegree(self.n) == (p, q)).map(|(m, c)| (*m, c.clone())).collect();
    Form { n: self.n, terms }
  }

  /// `Some(k)` if all terms have total degree `k` (a zero form is homogeneous of any degree).
  pub fn homogeneous_degree(&self) -> Option<usize> {
    let mut degrees = self.terms.keys().map(|m| m.degree());
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
  }
}

impl fmt::Display for Form {
  /// `c1*w[..] - c2*w[..]` in canonical basis order, `0` for the zero form.
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if self.terms.is_empty() {
      return write!(f, "0");
    }
    let mut terms: Vec<_> = self.terms.iter().collect();
    terms.sort_by_key(|(m, _)| sort_key(**m, self.n));
    for (k, (m, c)) in terms.into_iter().enumerate() {
      let text = c.to_string();
      let (neg, mag) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.as_str()),
      };
      match (k, neg) {
        (0, true) => write!(f, "-")?,
        (0, false) => {}
        (_, true) => write!(f, " - ")?,
        (_, false) => write!(f, " + ")?,
      }
      if m.0 == 0 {
        write!(f, "{mag}")?;
      } else if mag == "1" {
        write!(f, "{}", m.word(self.n))?;
      } else {
        write!(f, "{mag}*{}", m.word(self.n))?;
      }
    }
    Ok(())
  }
}

/// Ordering matching the degree bases: degree, then `q` ascending, then `(I, J)` lexicographically.
pub fn sort_key(m: Monomial, n: usize) -> (usize, usize, Vec<usize>, Vec<usize>) {
  let (holo, anti) = m.indices(n);
  (m.degree(), anti.len(), holo, anti)
}
