//! Orbifold multiplicities: rationals `>= 1` together with `+∞`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A positive rational or `+∞`. Used both for multiplicities (which are
/// `>= 1`) and for the virtual curve multiplicities `m/t`, which may drop
/// below one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    /// `1/x`, with `1/∞ = 0`.
    pub fn reciprocal(&self) -> Rational {
        match self {
            ExtRational::Finite(r) => r.recip(),
            ExtRational::Infinity => Rational::zero(),
        }
    }

    /// `1 - 1/x`.
    pub fn coefficient(&self) -> Rational {
        Rational::one() - self.reciprocal()
    }

    /// `x / t` for a positive integer `t`; `∞ / t = ∞`.
    pub fn div_int(&self, t: u64) -> ExtRational {
        match self {
            ExtRational::Finite(r) => ExtRational::Finite(r / &Rational::from(t)),
            ExtRational::Infinity => ExtRational::Infinity,
        }
    }

    pub fn mul_int(&self, t: u64) -> ExtRational {
        match self {
            ExtRational::Finite(r) => ExtRational::Finite(r * &Rational::from(t)),
            ExtRational::Infinity => ExtRational::Infinity,
        }
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => write!(f, "{r}"),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

/// The multiplicity `m_j` of a boundary component; its coefficient in the
/// boundary divisor is `1 - 1/m_j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multiplicity(ExtRational);

impl Multiplicity {
    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::one() {
            return Err(Error::InvalidMultiplicity(value.to_string()));
        }
        Ok(Multiplicity(ExtRational::Finite(value)))
    }

    pub fn integer(m: u64) -> Result<Self> {
        Multiplicity::new(Rational::from(m))
    }

    pub fn infinite() -> Self {
        Multiplicity(ExtRational::Infinity)
    }

    pub fn one() -> Self {
        Multiplicity(ExtRational::Finite(Rational::one()))
    }

    pub fn value(&self) -> &ExtRational {
        &self.0
    }

    pub fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }

    pub fn finite(&self) -> Option<&Rational> {
        self.0.finite()
    }

    /// The value as an integer when it is a finite integer.
    pub fn as_integer(&self) -> Option<u64> {
        self.finite().and_then(|r| r.to_u64())
    }

    pub fn reciprocal(&self) -> Rational {
        self.0.reciprocal()
    }

    pub fn coefficient(&self) -> Rational {
        self.0.coefficient()
    }

    /// `t · m`, still a multiplicity for `t >= 1`.
    pub fn scale(&self, t: u64) -> Multiplicity {
        assert!(t >= 1);
        Multiplicity(self.0.mul_int(t))
    }

    /// Inverse of `coefficient`: the multiplicity with coefficient `a`.
    pub fn from_coefficient(a: &Rational) -> Result<Self> {
        if a.is_negative() || a > &Rational::one() {
            return Err(Error::CoefficientOutOfRange(a.to_string()));
        }
        if a.is_one() {
            return Ok(Multiplicity::infinite());
        }
        Multiplicity::new((Rational::one() - a).recip())
    }
}

impl From<Multiplicity> for ExtRational {
    fn from(m: Multiplicity) -> Self {
        m.0
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Multiplicity {
    type Err = Error;

    /// Accepts integers, `p/q`, and `inf` / `∞` / `infinity`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t.to_ascii_lowercase().as_str(), "inf" | "infinity" | "+inf") || t == "∞" {
            return Ok(Multiplicity::infinite());
        }
        let r: Rational = t.parse().map_err(|_| Error::ParseMultiplicity(s.to_string()))?;
        Multiplicity::new(r)
    }
}

/// Parses a comma separated list such as `"2,3,7,inf"`.
pub fn parse_list(s: &str) -> Result<Vec<Multiplicity>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}
