//! Exact rational values.
//!
//! All distances, defects, and thresholds in this crate are exact rationals
//! serialized as `"p/q"` strings; no floating point appears in any document
//! or comparison.

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Exact nonnegative rational. Degrees are capped well below `u64::MAX`, so
/// numerators and denominators never overflow.
pub type Frac = Ratio<u64>;

/// Wrapper serializing a [`Frac`] as a `"p/q"` string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct FracStr(pub Frac);

impl FracStr {
    pub fn zero() -> Self {
        FracStr(Frac::zero())
    }
}

impl From<Frac> for FracStr {
    fn from(f: Frac) -> Self {
        FracStr(f)
    }
}

impl fmt::Display for FracStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Parse a `"p/q"` or bare `"p"` string into an exact rational.
pub fn parse_frac(s: &str) -> Result<Frac, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = u64::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let q = u64::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if q == 0 {
        return Err("zero denominator".into());
    }
    Ok(Frac::new(p, q))
}

impl FromStr for FracStr {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_frac(s).map(FracStr)
    }
}

impl Serialize for FracStr {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FracStr {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0/1", "1/2", "7/10", "3/1"] {
            let f: FracStr = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_frac("2/4").unwrap(), Frac::new(1, 2));
        assert_eq!(parse_frac("5").unwrap(), Frac::new(5, 1));
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_frac("1/0").is_err());
    }
}
