use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Per-thread counter of rational multiplications and divisions.
///
/// Used to check that the classification pipeline performs a number of
/// scalar products proportional to the matrix size.
pub mod op_count {
    use super::MUL_COUNT;

    pub fn reset() {
        MUL_COUNT.with(|c| c.set(0));
    }

    pub fn multiplications() -> u64 {
        MUL_COUNT.with(|c| c.get())
    }
}

#[inline]
fn bump() {
    MUL_COUNT.with(|c| c.set(c.get() + 1));
}

/// An exact rational number kept in canonical form (positive denominator,
/// coprime numerator and denominator).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let numer = numer.into();
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            bump();
            Some(Rational(self.0.recip()))
        }
    }

    /// Nearest `f64`, for reporting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Always renders as `p/q`, including integers (`2/1`).
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    /// Integers print bare, everything else as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_fraction_string())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        rational_from_text(s)
    }
}

/// Parses an integer (`-3`), a fraction (`p/q`) or a finite decimal
/// (`0.25`). Decimals are converted exactly in base 10.
pub fn rational_from_text(token: &str) -> Result<Rational> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::EmptyToken);
    }
    let malformed = || Error::MalformedToken(token.to_string());

    if let Some((num, den)) = token.split_once('/') {
        let numer = parse_signed_int(num).ok_or_else(malformed)?;
        if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let denom: BigInt = den.parse().map_err(|_| malformed())?;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(token.to_string()));
        }
        return Rational::new(numer, denom);
    }

    if let Some((int_part, frac_part)) = token.split_once('.') {
        let (negative, int_digits) = split_sign(int_part);
        let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if !digits_ok(int_digits) || !digits_ok(frac_part) {
            return Err(malformed());
        }
        if int_digits.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        let mut all = String::with_capacity(int_digits.len() + frac_part.len());
        all.push_str(int_digits);
        all.push_str(frac_part);
        let mut numer: BigInt = all.parse().map_err(|_| malformed())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        return Rational::new(numer, denom);
    }

    parse_signed_int(token)
        .map(Rational::from_integer)
        .ok_or_else(malformed)
}

fn split_sign(s: &str) -> (bool, &str) {
    if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('+') {
        (false, rest)
    } else {
        (false, s)
    }
}

fn parse_signed_int(s: &str) -> Option<BigInt> {
    let (negative, digits) = split_sign(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if negative { -v } else { v })
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $count:expr) => {
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: &'a Rational) -> Rational {
                if $count {
                    bump();
                }
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, false);
forward_binop!(Sub, sub, false);
forward_binop!(Mul, mul, true);

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;

    /// Panics on division by zero, like the integer types do.
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division of a rational by zero");
        bump();
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        let mut acc = Rational::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Compares `self` with an integer without allocating a rational.
impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn parses_the_three_token_shapes() {
        assert_eq!(rational_from_text("1/3").unwrap(), q(1, 3));
        assert_eq!(rational_from_text("0.25").unwrap(), q(1, 4));
        assert_eq!(rational_from_text("-6").unwrap(), q(-6, 1));
        assert_eq!(rational_from_text("-0.5").unwrap(), q(-1, 2));
        assert_eq!(rational_from_text("+7").unwrap(), q(7, 1));
        assert_eq!(rational_from_text("-4/6").unwrap(), q(-2, 3));
        assert_eq!(rational_from_text(".5").unwrap(), q(1, 2));
        assert_eq!(rational_from_text("3.").unwrap(), q(3, 1));
    }

    #[test]
    fn decimal_is_exact_not_float() {
        // 0.1 has no finite binary expansion
        assert_eq!(rational_from_text("0.1").unwrap(), q(1, 10));
        assert_eq!(
            rational_from_text("123456789012345678901234567890.000000000000000000001")
                .unwrap()
                .denom()
                .to_string(),
            format!("1{}", "0".repeat(21))
        );
    }

    #[test]
    fn rejects_bad_tokens() {
        assert_eq!(rational_from_text(""), Err(Error::EmptyToken));
        assert!(matches!(
            rational_from_text("1/0"),
            Err(Error::ZeroDenominator(_))
        ));
        for bad in ["abc", "1/", "/2", "1.2.3", "--1", "1/-2", ".", "-", "1e5", "0x10", "1 2"] {
            assert!(
                matches!(rational_from_text(bad), Err(Error::MalformedToken(_))),
                "{bad} should be malformed"
            );
        }
    }

    #[test]
    fn canonical_form_and_rendering() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(q(2, 1).to_string(), "2");
        assert_eq!(q(2, 1).to_fraction_string(), "2/1");
    }

    #[test]
    fn counts_multiplications() {
        op_count::reset();
        let _ = &q(1, 2) * &q(2, 3);
        let _ = &q(1, 2) / &q(2, 3);
        let _ = &q(1, 2) + &q(2, 3);
        assert_eq!(op_count::multiplications(), 2);
    }
}
