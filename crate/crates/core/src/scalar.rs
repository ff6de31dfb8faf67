//! Exact nonnegative rationals and the extended half-line `[0, +inf]`.
//!
//! Every order decision in the crate goes through these types. There is no
//! floating point anywhere: a rounded comparison could move a pair across a
//! barrel boundary.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// A nonnegative rational number in lowest terms.
///
/// The denominator is always positive and coprime to the numerator, so
/// derived equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: u64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; fails on a zero denominator.
    pub fn new(numer: u64, denom: u64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::Parse(format!("zero denominator in {numer}/{denom}")));
        }
        Ok(Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    /// Shorthand for literals in tests and examples. Panics on a zero denominator.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    /// Wraps an arbitrary rational, rejecting negative values.
    pub fn from_rational(r: BigRational) -> Result<Self, Error> {
        if r.is_negative() {
            return Err(Error::Domain(format!("negative scalar {r}")));
        }
        Ok(Scalar(r))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// `1 / self`, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    /// `self - rhs` when the result stays nonnegative.
    pub fn checked_sub(&self, rhs: &Scalar) -> Option<Self> {
        if rhs.0 > self.0 {
            None
        } else {
            Some(Scalar(&self.0 - &rhs.0))
        }
    }

    /// `self / rhs`, or `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Scalar(&self.0 / &rhs.0))
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigUint {
        self.0
            .numer()
            .div_floor(self.0.denom())
            .to_biguint()
            .expect("nonnegative")
    }

    pub fn min(self, other: Scalar) -> Scalar {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Lossy conversion for display surfaces (the web demo's canvas).
    /// Never used in any decision.
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<u64> for Scalar {
    fn from(n: u64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`. Inputs need not be reduced.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a nonnegative rational: {s:?}"));
        let digits = |t: &str| -> Result<BigInt, Error> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (digits(n)?, digits(d)?),
            None => (digits(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Scalar(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($tr::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Mul, mul);

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;

    /// Panics if the difference would be negative; use
    /// [`Scalar::checked_sub`] when the order is not known.
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("negative difference")
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;

    /// Panics on division by zero; use [`Scalar::checked_div`] when the
    /// divisor is not known to be positive.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// An element of `[0, +inf]`: a finite nonnegative rational or `+inf`.
///
/// The derived order puts every finite value below `Inf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtScalar {
    Finite(Scalar),
    Inf,
}

impl ExtScalar {
    pub fn zero() -> Self {
        ExtScalar::Finite(Scalar::zero())
    }

    pub fn one() -> Self {
        ExtScalar::Finite(Scalar::one())
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, ExtScalar::Inf)
    }

    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            ExtScalar::Finite(x) => Some(x),
            ExtScalar::Inf => None,
        }
    }

    /// `r * self` with the convention `0 * inf = 0`.
    pub fn scale(&self, r: &Scalar) -> ExtScalar {
        if r.is_zero() {
            return ExtScalar::zero();
        }
        match self {
            ExtScalar::Finite(x) => ExtScalar::Finite(r * x),
            ExtScalar::Inf => ExtScalar::Inf,
        }
    }

    /// `self <= other + v`, the neighborhood relation of `[0, +inf]` with radius `v`.
    pub fn le_within(&self, other: &ExtScalar, v: &Scalar) -> bool {
        *self <= other + &ExtScalar::Finite(v.clone())
    }
}

/// `x + y`; `+inf` is absorbing.
pub fn ext_add(x: &ExtScalar, y: &ExtScalar) -> ExtScalar {
    match (x, y) {
        (ExtScalar::Finite(a), ExtScalar::Finite(b)) => ExtScalar::Finite(a + b),
        _ => ExtScalar::Inf,
    }
}

/// `r * x` with `0 * inf = 0`.
pub fn ext_mul(r: &Scalar, x: &ExtScalar) -> ExtScalar {
    x.scale(r)
}

pub fn ext_le(x: &ExtScalar, y: &ExtScalar) -> bool {
    x.cmp(y) != Ordering::Greater
}

impl Add<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        ext_add(self, rhs)
    }
}

impl Add for ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: ExtScalar) -> ExtScalar {
        ext_add(&self, &rhs)
    }
}

impl From<Scalar> for ExtScalar {
    fn from(x: Scalar) -> Self {
        ExtScalar::Finite(x)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Finite(x) => x.fmt(f),
            ExtScalar::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim() == "inf" {
            Ok(ExtScalar::Inf)
        } else {
            s.parse().map(ExtScalar::Finite)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn fin(n: u64, d: u64) -> ExtScalar {
        ExtScalar::Finite(q(n, d))
    }

    #[test]
    fn add_examples() {
        assert_eq!(ext_add(&fin(2, 3), &fin(1, 3)), fin(1, 1));
        assert_eq!(ext_add(&ExtScalar::Inf, &fin(5, 1)), ExtScalar::Inf);
        assert_eq!(ext_add(&ExtScalar::zero(), &fin(7, 9)), fin(7, 9));
        assert_eq!(ext_add(&ExtScalar::zero(), &ExtScalar::Inf), ExtScalar::Inf);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ext_mul(&Scalar::zero(), &ExtScalar::Inf), ExtScalar::zero());
        assert_eq!(ext_mul(&q(2, 1), &fin(3, 4)), fin(3, 2));
        assert_eq!(ext_mul(&Scalar::one(), &ExtScalar::Inf), ExtScalar::Inf);
    }

    #[test]
    fn le_examples() {
        assert!(ext_le(&fin(1, 2), &fin(2, 3)));
        assert!(!ext_le(&ExtScalar::Inf, &fin(1_000_000_000, 1)));
        assert!(ext_le(&ExtScalar::Inf, &ExtScalar::Inf));
        assert!(ext_le(&fin(5, 7), &fin(5, 7)));
    }

    #[test]
    fn canonical_form_is_structural() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(q(4, 6).to_string(), "2/3");
        let parsed: Scalar = "10/4".parse().unwrap();
        assert_eq!(parsed, q(5, 2));
    }

    #[test]
    fn parsing_is_lenient_and_strict_where_it_matters() {
        assert_eq!("3".parse::<Scalar>().unwrap(), "3/1".parse::<Scalar>().unwrap());
        assert_eq!("inf".parse::<ExtScalar>().unwrap(), ExtScalar::Inf);
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("-1/2".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn subtraction_and_floor() {
        assert_eq!(q(5, 2).checked_sub(&q(1, 2)), Some(q(2, 1)));
        assert_eq!(q(1, 2).checked_sub(&q(5, 2)), None);
        assert_eq!(q(7, 2).floor(), BigUint::from(3u32));
        assert_eq!(q(6, 2).floor(), BigUint::from(3u32));
        assert_eq!(Scalar::zero().floor(), BigUint::from(0u32));
    }

    #[test]
    fn neighborhood_relation_of_the_half_line() {
        assert!(fin(3, 1).le_within(&fin(2, 1), &q(1, 1)));
        assert!(!ExtScalar::Inf.le_within(&fin(5, 1), &q(100, 1)));
        assert!(fin(9, 1).le_within(&ExtScalar::Inf, &q(1, 9)));
    }
}
