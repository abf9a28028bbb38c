use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact nonnegative item value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value(BigRational);

impl Value {
    pub fn zero() -> Self {
        Value(BigRational::zero())
    }

    pub fn one() -> Self {
        Value(BigRational::one())
    }

    pub fn integer(n: u64) -> Self {
        Value(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` in lowest terms. Returns `None` for `q == 0`.
    pub fn ratio(p: u64, q: u64) -> Option<Self> {
        if q == 0 {
            return None;
        }
        Some(Value(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn from_rational(r: BigRational) -> Option<Self> {
        if r.is_negative() {
            None
        } else {
            Some(Value(r))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn add(&self, other: &Value) -> Value {
        Value(&self.0 + &other.0)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValueError {
    #[error("not a number: {0:?}")]
    Malformed(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative value {0}")]
    Negative(String),
}

impl FromStr for Value {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |t: &str| -> Result<BigInt, ValueError> {
            t.parse::<BigInt>()
                .map_err(|_| ValueError::Malformed(s.to_string()))
        };
        let r = match s.split_once('/') {
            Some((p, q)) => {
                let p = parse_int(p)?;
                let q = parse_int(q)?;
                if q.is_zero() {
                    return Err(ValueError::ZeroDenominator);
                }
                BigRational::new(p, q)
            }
            None => BigRational::from_integer(parse_int(s)?),
        };
        if r.is_negative() {
            return Err(ValueError::Negative(s.to_string()));
        }
        Ok(Value(r))
    }
}
