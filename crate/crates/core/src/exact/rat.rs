use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{PolysumError, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || PolysumError::InvalidRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Serde adapter storing a rational as a `"p/q"` string.
pub(crate) mod serde_rat {
    use super::*;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(D::Error::custom)
    }
}
