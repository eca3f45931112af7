//! Exact reduced fractions over arbitrary-precision integers.
//!
//! Every degree value in this crate is an [`ExactRatio`]. Floating point only
//! shows up in [`ExactRatio::to_decimal`], which itself is computed with
//! integer arithmetic.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    /// Builds `num/den` in lowest terms. Panics when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::new(num.into(), den.into()))
    }

    pub fn checked_new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Self> {
        let den = den.into();
        if den.is_zero() {
            None
        } else {
            Some(Self::new(num, den))
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRatio(BigRational::one())
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Rounds to `sig` significant digits (half away from zero) and renders
    /// in plain positional notation with trailing zeros trimmed.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig > 0, "need at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let negative = self.0.is_negative();
        let value = self.0.abs();
        let ten = BigInt::from(10);
        let lower = num_traits::pow(ten.clone(), sig - 1);
        let upper = &lower * &ten;

        // Find a scale 10^shift with lower <= value * 10^shift < upper.
        let mut shift: i64 = 0;
        let scaled = |shift: i64| -> BigRational {
            if shift >= 0 {
                &value * BigRational::from_integer(num_traits::pow(ten.clone(), shift as usize))
            } else {
                &value / BigRational::from_integer(num_traits::pow(ten.clone(), (-shift) as usize))
            }
        };
        loop {
            let s = scaled(shift);
            if s < BigRational::from_integer(lower.clone()) {
                shift += 1;
            } else if s >= BigRational::from_integer(upper.clone()) {
                shift -= 1;
            } else {
                break;
            }
        }
        let s = scaled(shift);
        let (q, r) = s.numer().div_rem(s.denom());
        let mut digits = if BigInt::from(2) * r >= *s.denom() {
            q + 1
        } else {
            q
        };
        if digits == upper {
            digits = lower.clone();
            shift -= 1;
        }

        let raw = digits.to_string();
        // value ~= raw * 10^(-shift)
        let mut out = if shift <= 0 {
            let mut s = raw;
            s.extend(std::iter::repeat('0').take((-shift) as usize));
            s
        } else {
            let shift = shift as usize;
            if shift >= raw.len() {
                let mut s = String::from("0.");
                s.extend(std::iter::repeat('0').take(shift - raw.len()));
                s.push_str(&raw);
                s
            } else {
                let (int, frac) = raw.split_at(raw.len() - shift);
                format!("{int}.{frac}")
            }
        };
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        if negative {
            out.insert(0, '-');
        }
        out
    }
}

impl From<BigRational> for ExactRatio {
    fn from(value: BigRational) -> Self {
        ExactRatio(value)
    }
}

impl From<ExactRatio> for BigRational {
    fn from(value: ExactRatio) -> Self {
        value.0
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRatio> for &'a ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: &'a ExactRatio) -> ExactRatio {
                ExactRatio((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRatio {
    type Err = Error;

    /// Accepts `a/b` or a bare integer `a`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            position: 0,
            message: format!("{m}: {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
        ExactRatio::checked_new(num, den).ok_or_else(|| bad("zero denominator"))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    num: String,
    den: String,
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactRatio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let num: BigInt = wire.num.parse().map_err(D::Error::custom)?;
        let den: BigInt = wire.den.parse().map_err(D::Error::custom)?;
        if !den.is_positive() {
            return Err(D::Error::custom("denominator must be positive"));
        }
        if !num.gcd(&den).is_one() {
            return Err(D::Error::custom("fraction is not in lowest terms"));
        }
        Ok(ExactRatio::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let r = ExactRatio::new(64, 80);
        assert_eq!(r.to_string(), "4/5");
        assert_eq!(ExactRatio::new(3, -6).to_string(), "-1/2");
        assert_eq!(ExactRatio::one().to_string(), "1/1");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ExactRatio::new(5, 6).to_decimal(12), "0.833333333333");
        assert_eq!(ExactRatio::new(46, 55).to_decimal(12), "0.836363636364");
        assert_eq!(ExactRatio::one().to_decimal(12), "1");
        assert_eq!(ExactRatio::new(1, 2).to_decimal(12), "0.5");
        assert_eq!(ExactRatio::new(2, 3).to_decimal(3), "0.667");
        assert_eq!(ExactRatio::new(999_999, 1_000_000).to_decimal(3), "1");
        assert_eq!(ExactRatio::new(1234, 1).to_decimal(2), "1200");
        assert_eq!(ExactRatio::new(-1, 3).to_decimal(4), "-0.3333");
        assert_eq!(ExactRatio::new(1, 1000).to_decimal(2), "0.001");
    }

    #[test]
    fn json_shape() {
        let r = ExactRatio::new(46, 55);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":"46","den":"55"}"#);
        let back: ExactRatio = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<ExactRatio>(r#"{"num":"2","den":"4"}"#).is_err());
        assert!(serde_json::from_str::<ExactRatio>(r#"{"num":"1","den":"0"}"#).is_err());
        assert!(serde_json::from_str::<ExactRatio>(r#"{"num":"1","den":"2","x":1}"#).is_err());
    }

    #[test]
    fn parse_text() {
        assert_eq!("46/55".parse::<ExactRatio>().unwrap(), ExactRatio::new(46, 55));
        assert_eq!("7".parse::<ExactRatio>().unwrap(), ExactRatio::from_integer(7));
        assert!("1/0".parse::<ExactRatio>().is_err());
    }
}
