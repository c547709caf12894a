use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracError {
    #[error("expected a fraction of the form p/q, got {0:?}")]
    Syntax(String),
    #[error("fraction {0} is not irreducible")]
    NotIrreducible(String),
}

/// An irreducible fraction of non-negative integers.
///
/// `0/1` and `1/0` are allowed; they are the slopes of the one-letter
/// Christoffel words `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frac {
    num: BigUint,
    den: BigUint,
}

impl Frac {
    pub fn new(num: BigUint, den: BigUint) -> Result<Frac, FracError> {
        if !num.gcd(&den).is_one() {
            return Err(FracError::NotIrreducible(format!("{num}/{den}")));
        }
        Ok(Frac { num, den })
    }

    /// Builds `num/den` in lowest terms. Panics on `0/0`.
    pub fn reduced(num: BigUint, den: BigUint) -> Frac {
        let g = num.gcd(&den);
        assert!(!g.is_zero(), "0/0 is not a fraction");
        Frac {
            num: num / &g,
            den: den / &g,
        }
    }

    pub fn from_u64(num: u64, den: u64) -> Result<Frac, FracError> {
        Frac::new(num.into(), den.into())
    }

    pub fn one() -> Frac {
        Frac {
            num: BigUint::one(),
            den: BigUint::one(),
        }
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn recip(&self) -> Frac {
        Frac {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// True when both parts are positive, i.e. the fraction labels a node of
    /// the Raney and Stern-Brocot trees.
    pub fn is_positive(&self) -> bool {
        !self.num.is_zero() && !self.den.is_zero()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Frac {
    type Err = FracError;

    fn from_str(s: &str) -> Result<Frac, FracError> {
        let syntax = || FracError::Syntax(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(syntax)?;
        let num: BigUint = p.trim().parse().map_err(|_| syntax())?;
        let den: BigUint = q.trim().parse().map_err(|_| syntax())?;
        Frac::new(num, den)
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Frac, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f: Frac = "4/7".parse().unwrap();
        assert_eq!(f.to_string(), "4/7");
        assert_eq!(f.recip().to_string(), "7/4");
        assert!(matches!(
            "6/4".parse::<Frac>(),
            Err(FracError::NotIrreducible(_))
        ));
        assert!(matches!(
            "0/0".parse::<Frac>(),
            Err(FracError::NotIrreducible(_))
        ));
        assert!(matches!("4".parse::<Frac>(), Err(FracError::Syntax(_))));
        assert!(matches!("x/2".parse::<Frac>(), Err(FracError::Syntax(_))));
        assert!("1/0".parse::<Frac>().is_ok());
        assert!(!"1/0".parse::<Frac>().unwrap().is_positive());
    }

    #[test]
    fn reduction() {
        let f = Frac::reduced(6u32.into(), 4u32.into());
        assert_eq!(f.to_string(), "3/2");
    }
}
