//! Arbitrary-precision rational scalars.
//!
//! Every value is kept in canonical form: numerator and denominator coprime,
//! denominator positive, zero represented as 0/1. The text format is `p/q`
//! with the `/q` part omitted for integers; that format is also what the
//! serde impls emit, so rationals cross the JSON boundary without any loss.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational number in canonical (fully reduced) form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reducing to canonical form.
    ///
    /// Panics if `denom` is zero; a zero denominator is a programming error,
    /// not a data error.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(numer.into(), denom))
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

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power by repeated squaring. Negative exponents invert first,
    /// so `0.pow(-k)` panics like `recip` does.
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.recip().pow(-exp);
        }
        let mut result = Rational::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Nearest-double approximation, for display only. Exact code paths
    /// never touch this.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<(i64, i64)> for Rational {
    fn from((p, q): (i64, i64)) -> Self {
        Rational::new(p, q)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
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
        write!(f, "{self}")
    }
}

/// Error from parsing the `p/q` text format.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{input}`")]
pub struct ParseRationalError {
    input: String,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with optional leading sign on `p`; `q` must be
    /// a positive integer literal. Whitespace around the string is ignored,
    /// whitespace around `/` is not.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError {
            input: s.to_owned(),
        };
        let trimmed = s.trim();
        let (p, q) = match trimmed.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (trimmed, None),
        };
        let numer: BigInt = p.parse().map_err(|_| err())?;
        let denom: BigInt = match q {
            Some(q) if !q.starts_with(['+', '-']) => q.parse().map_err(|_| err())?,
            Some(_) => return Err(err()),
            None => BigInt::one(),
        };
        if denom.is_zero() || denom.is_negative() {
            return Err(err());
        }
        Ok(Rational::new(numer, denom))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        (&self).div(rhs)
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.div(&rhs)
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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

/// Shorthand for rational literals: `rat!(3)` and `rat!(-11, 129600)`.
#[macro_export]
macro_rules! rat {
    ($p:expr) => {
        $crate::Rational::from_integer($p)
    };
    ($p:expr, $q:expr) => {
        $crate::Rational::new($p, $q)
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(Rational::new(0, 7), Rational::zero());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "-1", "1/24", "-11/129600", "761/280"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("6/4".parse::<Rational>().unwrap().to_string(), "3/2");
        assert_eq!("+3".parse::<Rational>().unwrap().to_string(), "3");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for s in ["", "1/0", "1/-2", "1/+2", "a/b", "1/2/3", "1.5", "1 / 2"] {
            assert!(s.parse::<Rational>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn pow_handles_signs() {
        let half = rat!(1, 2);
        assert_eq!(half.pow(3), rat!(1, 8));
        assert_eq!(half.pow(-2), rat!(4));
        assert_eq!(rat!(-2).pow(3), rat!(-8));
        assert_eq!(rat!(0).pow(0), rat!(1));
    }

    #[test]
    fn serde_uses_text_format() {
        let r = rat!(-11, 129600);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"-11/129600\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(Rational::from)
    }

    proptest! {
        #[test]
        fn field_axioms_round_trip(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn canonical_after_arithmetic(a in arb_rational(), b in arb_rational()) {
            use num_integer::Integer;
            let c = &a * &b;
            prop_assert!(c.denom().is_positive());
            prop_assert!(c.numer().gcd(c.denom()).is_one());
        }
    }
}
