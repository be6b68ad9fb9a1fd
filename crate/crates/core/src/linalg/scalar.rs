//! Exact scalars in the Gaussian rationals Q(i).

use std::{
  fmt,
  iter::{Product, Sum},
  ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign},
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A complex number `re + i·im` with rational parts.
///
/// Both parts are kept as reduced fractions with positive denominators, so
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
  re: BigRational,
  im: BigRational,
}

/// Short alias used throughout the crate.
pub type Qi = GaussianRational;

impl GaussianRational {
  pub fn new(re: BigRational, im: BigRational) -> Self {
    Self { re, im }
  }

  /// `re_num/re_den + i·im_num/im_den`. Panics on a zero denominator.
  pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
    Self {
      re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
      im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
    }
  }

  pub fn from_int(value: i64) -> Self {
    Self { re: BigRational::from_integer(value.into()), im: BigRational::zero() }
  }

  pub fn from_rational(re: BigRational) -> Self {
    Self { re, im: BigRational::zero() }
  }

  /// `re + i·im` for integer parts.
  pub fn gaussian(re: i64, im: i64) -> Self {
    Self { re: BigRational::from_integer(re.into()), im: BigRational::from_integer(im.into()) }
  }

  /// The imaginary unit.
  pub fn i() -> Self {
    Self::gaussian(0, 1)
  }

  pub fn re(&self) -> &BigRational {
    &self.re
  }

  pub fn im(&self) -> &BigRational {
    &self.im
  }

  pub fn conj(&self) -> Self {
    Self { re: self.re.clone(), im: -self.im.clone() }
  }

  /// `|z|² = z·z̄`, always a non-negative rational.
  pub fn norm_sqr(&self) -> BigRational {
    &self.re * &self.re + &self.im * &self.im
  }

  pub fn is_real(&self) -> bool {
    self.im.is_zero()
  }

  /// Multiplicative inverse, `None` for zero.
  pub fn inv(&self) -> Option<Self> {
    if self.is_zero() {
      return None;
    }
    let n = self.norm_sqr();
    Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
  }

  /// `i^k` for any integer `k`.
  pub fn i_pow(k: i64) -> Self {
    match k.rem_euclid(4) {
      0 => Self::one(),
      1 => Self::i(),
      2 => -Self::one(),
      _ => -Self::i(),
    }
  }

  /// Integer power; negative exponents invert. Panics when inverting zero.
  pub fn pow(&self, exp: i64) -> Self {
    let base = if exp < 0 { self.inv().expect("zero has no negative powers") } else { self.clone() };
    let mut out = Self::one();
    for _ in 0..exp.unsigned_abs() {
      out *= &base;
    }
    out
  }

  pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
    rhs.inv().map(|r| self * &r)
  }
}

impl Zero for GaussianRational {
  fn zero() -> Self {
    Self { re: BigRational::zero(), im: BigRational::zero() }
  }

  fn is_zero(&self) -> bool {
    self.re.is_zero() && self.im.is_zero()
  }
}

impl One for GaussianRational {
  fn one() -> Self {
    Self { re: BigRational::one(), im: BigRational::zero() }
  }
}

impl From<i64> for GaussianRational {
  fn from(value: i64) -> Self {
    Self::from_int(value)
  }
}

impl From<BigRational> for GaussianRational {
  fn from(value: BigRational) -> Self {
    Self::from_rational(value)
  }
}

impl Neg for GaussianRational {
  type Output = Self;

  fn neg(self) -> Self {
    Self { re: -self.re, im: -self.im }
  }
}

impl Neg for &GaussianRational {
  type Output = GaussianRational;

  fn neg(self) -> GaussianRational {
    GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
  }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
  type Output = GaussianRational;

  fn add(self, rhs: &GaussianRational) -> GaussianRational {
    GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
  }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
  type Output = GaussianRational;

  fn sub(self, rhs: &GaussianRational) -> GaussianRational {
    GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
  }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
  type Output = GaussianRational;

  fn mul(self, rhs: &GaussianRational) -> GaussianRational {
    if self.is_zero() || rhs.is_zero() {
      return GaussianRational::zero();
    }
    if self.im.is_zero() && rhs.im.is_zero() {
      return GaussianRational { re: &self.re * &rhs.re, im: BigRational::zero() };
    }
    GaussianRational { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
  }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
  type Output = GaussianRational;

  /// Panics on division by zero, like the integer types.
  fn div(self, rhs: &GaussianRational) -> GaussianRational {
    self.checked_div(rhs).expect("division by zero in Q(i)")
  }
}

macro_rules! forward_owned {
  ($($tr:ident $method:ident),*) => {$(
    impl $tr for GaussianRational {
      type Output = GaussianRational;

      fn $method(self, rhs: GaussianRational) -> GaussianRational { (&self).$method(&rhs) }
    }

    impl<'a> $tr<&'a GaussianRational> for GaussianRational {
      type Output = GaussianRational;

      fn $method(self, rhs: &GaussianRational) -> GaussianRational { (&self).$method(rhs) }
    }
  )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
  fn add_assign(&mut self, rhs: &GaussianRational) {
    self.re += &rhs.re;
    self.im += &rhs.im;
  }
}

impl AddAssign for GaussianRational {
  fn add_assign(&mut self, rhs: GaussianRational) {
    *self += &rhs;
  }
}

impl SubAssign<&GaussianRational> for GaussianRational {
  fn sub_assign(&mut self, rhs: &GaussianRational) {
    self.re -= &rhs.re;
    self.im -= &rhs.im;
  }
}

impl MulAssign<&GaussianRational> for GaussianRational {
  fn mul_assign(&mut self, rhs: &GaussianRational) {
    *self = &*self * rhs;
  }
}

impl Sum for GaussianRational {
  fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
    iter.fold(Self::zero(), |mut acc, x| {
      acc += &x;
      acc
    })
  }
}

impl Product for GaussianRational {
  fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
    iter.fold(Self::one(), |acc, x| acc * x)
  }
}

fn fmt_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
  if r.denom().is_one() {
    write!(f, "{}", r.numer())
  } else {
    write!(f, "{}/{}", r.numer(), r.denom())
  }
}

/// Imaginary part `q·i` as `i`, `-i`, `3i`, `3i/4`, `-i/2`.
fn fmt_imaginary(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
  let numer = r.numer();
  if numer.is_negative() {
    write!(f, "-")?;
  }
  let abs = numer.abs();
  if !abs.is_one() {
    write!(f, "{abs}")?;
  }
  write!(f, "i")?;
  if !r.denom().is_one() {
    write!(f, "/{}", r.denom())?;
  }
  Ok(())
}

/// Prints in the scalar literal grammar accepted by [`crate::io::parse_scalar`]:
/// `0`, `-3/4`, `i`, `-3i/4`, `(1/2-3i/4)`.
impl fmt::Display for GaussianRational {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (self.re.is_zero(), self.im.is_zero()) {
      (true, true) => write!(f, "0"),
      (false, true) => fmt_rational(f, &self.re),
      (true, false) => fmt_imaginary(f, &self.im),
      (false, false) => {
        write!(f, "(")?;
        fmt_rational(f, &self.re)?;
        if self.im.is_positive() {
          write!(f, "+")?;
        }
        fmt_imaginary(f, &self.im)?;
        write!(f, ")")
      }
    }
  }
}

impl fmt::Debug for GaussianRational {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{self}")
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  fn q(a: i64, b: i64, c: i64, d: i64) -> Qi {
    Qi::from_fractions(a, b, c, d)
  }

  #[test]
  fn one_over_two_i_is_minus_half_i() {
    let two_i = Qi::gaussian(0, 2);
    assert_eq!(Qi::one() / two_i, q(0, 1, -1, 2));
  }

  #[test]
  fn fractions_are_reduced() {
    assert_eq!(q(2, 4, -6, -8), q(1, 2, 3, 4));
    assert!(q(2, 4, 0, 1).re().denom() > &BigInt::zero());
  }

  #[test]
  fn conj_and_norm() {
    let z = q(1, 2, -3, 4);
    assert_eq!((&z * &z.conj()), Qi::from_rational(z.norm_sqr()));
    assert_eq!(z.conj().conj(), z);
  }

  #[test]
  fn powers_of_i() {
    for k in -8..8 {
      assert_eq!(Qi::i_pow(k), Qi::i().pow(k));
    }
  }

  #[test]
  fn display_forms() {
    assert_eq!(Qi::zero().to_string(), "0");
    assert_eq!(q(-3, 4, 0, 1).to_string(), "-3/4");
    assert_eq!(Qi::i().to_string(), "i");
    assert_eq!(q(0, 1, -1, 2).to_string(), "-i/2");
    assert_eq!(q(0, 1, 3, 4).to_string(), "3i/4");
    assert_eq!(q(1, 2, -3, 4).to_string(), "(1/2-3i/4)");
    assert_eq!(Qi::gaussian(1, 1).to_string(), "(1+i)");
  }

  #[test]
  fn inverse_of_zero_is_none() {
    assert!(Qi::zero().inv().is_none());
    assert!(Qi::one().checked_div(&Qi::zero()).is_none());
  }
}
