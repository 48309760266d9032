//! Exact rationals written as short sums, e.g. `21`, `41/2+1/10`, `20.75`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("empty rational expression")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Parse a sum of signed terms. Each term is an integer, `p/q`, or a
    /// decimal such as `20.5`. Whitespace is ignored.
    pub fn parse(text: &str) -> Result<Rational, RationalError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(RationalError::Empty);
        }
        let mut total = BigRational::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => unreachable!("terms are split at signs"),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = parse_term(&body[..end])?;
            total = if negative { total - term } else { total + term };
            rest = &body[end..];
            first = false;
        }
        Ok(Rational(total))
    }
}

fn parse_term(term: &str) -> Result<BigRational, RationalError> {
    let bad = || RationalError::BadTerm(term.to_string());
    let digits = |s: &str| -> Result<BigInt, RationalError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    if let Some((p, q)) = term.split_once('/') {
        let p = digits(p)?;
        let q = digits(q)?;
        if q.is_zero() {
            return Err(RationalError::ZeroDenominator(term.to_string()));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = term.split_once('.') {
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let whole = if whole.is_empty() {
            BigInt::zero()
        } else {
            digits(whole)?
        };
        let (frac_num, scale) = if frac.is_empty() {
            (BigInt::zero(), BigInt::one())
        } else {
            let exp = u32::try_from(frac.len()).map_err(|_| bad())?;
            (digits(frac)?, BigInt::from(10u32).pow(exp))
        };
        return Ok(BigRational::new(whole * &scale + frac_num, scale));
    }
    Ok(BigRational::from_integer(digits(term)?))
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rational::parse(s)
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

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_sums() {
        assert_eq!(Rational::parse("21").unwrap(), Rational::integer(21));
        assert_eq!(Rational::parse("41/2").unwrap(), Rational::new(41, 2));
        assert_eq!(Rational::parse("41/2+1/10").unwrap(), Rational::new(103, 5));
        assert_eq!(Rational::parse(" 42 - 1/2 ").unwrap(), Rational::new(83, 2));
        assert_eq!(Rational::parse("-3").unwrap(), Rational::integer(-3));
        assert_eq!(Rational::parse("20.75").unwrap(), Rational::new(83, 4));
        assert_eq!(Rational::parse(".5").unwrap(), Rational::new(1, 2));
        assert_eq!(
            Rational::parse("1000000").unwrap(),
            Rational::integer(1_000_000)
        );
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(Rational::parse(""), Err(RationalError::Empty));
        assert!(matches!(
            Rational::parse("1/0"),
            Err(RationalError::ZeroDenominator(_))
        ));
        assert!(Rational::parse("abc").is_err());
        assert!(Rational::parse("1/2/3").is_err());
        assert!(Rational::parse("1++2").is_err());
        assert!(Rational::parse("+").is_err());
        assert!(Rational::parse(".").is_err());
        assert!(Rational::parse("3-").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["21", "103/5", "-7/3", "0"] {
            let r = Rational::parse(s).unwrap();
            assert_eq!(r.to_string(), s);
            assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn floor_and_ceil() {
        let r = Rational::new(-3, 2);
        assert_eq!(r.floor(), BigInt::from(-2));
        assert_eq!(r.ceil(), BigInt::from(-1));
    }
}
