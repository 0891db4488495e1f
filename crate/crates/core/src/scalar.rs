//! The exact base field: arbitrary-precision rationals.
//!
//! `BigRational` keeps itself reduced with a positive denominator after every
//! operation, which is exactly the canonical form required here.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"` or `"p"` with decimal integers.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a fraction p/q"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{text}` has a zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Only reachable for magnitudes beyond f64 range.
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Serde adapter that writes a [`Scalar`] as an exact fraction string.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Frac(pub Scalar);

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(&self.0))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(&self.0))
    }
}

impl From<Scalar> for Frac {
    fn from(x: Scalar) -> Self {
        Frac(x)
    }
}

impl From<&Scalar> for Frac {
    fn from(x: &Scalar) -> Self {
        Frac(x.clone())
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(&self.0))
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map(Frac).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse("-6/-4").unwrap(), frac(3, 2));
        assert_eq!(parse("3/-6").unwrap(), frac(-1, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert_eq!(format(&frac(-6, 4)), "-3/2");
        assert_eq!(format(&int(5)), "5");
        assert_eq!(format(&zero()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("0.5").is_err());
        assert!(parse("a/b").is_err());
    }

    #[test]
    fn frac_serde() {
        let v: Vec<Frac> = serde_json::from_str(r#"["1/2", "-3", "4/8"]"#).unwrap();
        assert_eq!(v[2].0, frac(1, 2));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/2","-3","1/2"]"#);
    }
}
