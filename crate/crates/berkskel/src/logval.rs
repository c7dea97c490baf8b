//! Exact log-scale values.
//!
//! Radii of annuli and discs, distances on skeletons and differents all live
//! in the multiplicative interval `(0, 1]` with `0` as a degenerate limit.
//! Everything in this crate works with their logarithms instead: a radius
//! `r` becomes `ℓ = -log r`, a nonnegative rational (the base of the log is
//! never fixed; callers declare inputs such as `v(p)` directly in log scale).
//! The radius `0` becomes the symbol [`LogValue::Infinite`].
//!
//! Products of radii turn into exact rational sums, powers into scalings, so
//! every identity in the crate is decidable by exact comparison.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Errors from log-value arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogValueError {
    #[error("log value must be nonnegative, got {0}")]
    Negative(String),
    #[error("operation would produce a negative log value: {0} - {1}")]
    NegativeDifference(String, String),
    #[error("indeterminate operation on infinite log values: {0}")]
    Indeterminate(&'static str),
    #[error("invalid rational literal {literal:?}: {reason}")]
    BadRational { literal: String, reason: String },
}

/// A nonnegative exact rational, or the symbol `inf`.
///
/// `Finite(0)` encodes radius 1, `Infinite` encodes radius 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogValue {
    Finite(Rational),
    Infinite,
}

impl LogValue {
    pub fn zero() -> Self {
        LogValue::Finite(Rational::zero())
    }

    /// Wraps a rational, rejecting negative values.
    pub fn finite(value: Rational) -> Result<Self, LogValueError> {
        if value.is_negative() {
            Err(LogValueError::Negative(format_rational(&value)))
        } else {
            Ok(LogValue::Finite(value))
        }
    }

    /// Convenience constructor from a small integer fraction; panics on
    /// negative input, so only use with literal arguments.
    pub fn of(numer: i64, denom: i64) -> Self {
        LogValue::finite(rat(numer, denom)).expect("literal log value must be nonnegative")
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LogValue::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LogValue::Finite(v) if v.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            LogValue::Finite(v) => Some(v),
            LogValue::Infinite => None,
        }
    }

    /// Exact sum; infinity absorbs.
    pub fn add(&self, other: &LogValue) -> LogValue {
        match (self, other) {
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::Finite(a + b),
            _ => LogValue::Infinite,
        }
    }

    /// Exact difference. Errors when the result would be negative or when
    /// both operands are infinite.
    pub fn checked_sub(&self, other: &LogValue) -> Result<LogValue, LogValueError> {
        match (self, other) {
            (LogValue::Finite(a), LogValue::Finite(b)) => {
                if a < b {
                    Err(LogValueError::NegativeDifference(
                        format_rational(a),
                        format_rational(b),
                    ))
                } else {
                    Ok(LogValue::Finite(a - b))
                }
            }
            (LogValue::Infinite, LogValue::Finite(_)) => Ok(LogValue::Infinite),
            (_, LogValue::Infinite) => Err(LogValueError::Indeterminate("x - inf")),
        }
    }

    /// Scales by a nonnegative rational. `0 * inf` is indeterminate and
    /// rejected; negative factors are rejected.
    pub fn scale(&self, factor: &Rational) -> Result<LogValue, LogValueError> {
        if factor.is_negative() {
            return Err(LogValueError::Negative(format_rational(factor)));
        }
        match self {
            LogValue::Finite(v) => Ok(LogValue::Finite(v * factor)),
            LogValue::Infinite => {
                if factor.is_zero() {
                    Err(LogValueError::Indeterminate("0 * inf"))
                } else {
                    Ok(LogValue::Infinite)
                }
            }
        }
    }
}

impl From<Rational> for LogValue {
    /// Panics on negative values; prefer [`LogValue::finite`] for user data.
    fn from(value: Rational) -> Self {
        LogValue::finite(value).expect("log value must be nonnegative")
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogValue::Finite(v) => write!(f, "{}", format_rational(v)),
            LogValue::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Builds a rational from small integers. Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Canonical text form: `num` when the denominator is 1, else `num/den`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `num` or `num/den` with an explicit zero-denominator check.
pub fn parse_rational(literal: &str) -> Result<Rational, LogValueError> {
    let bad = |reason: &str| LogValueError::BadRational {
        literal: literal.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = literal.splitn(2, '/');
    let numer = parts.next().ok_or_else(|| bad("empty"))?;
    let numer = BigInt::from_str(numer.trim()).map_err(|e| bad(&e.to_string()))?;
    let denom = match parts.next() {
        Some(d) => BigInt::from_str(d.trim()).map_err(|e| bad(&e.to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Parses a log value: `inf` or a nonnegative rational literal.
pub fn parse_log_value(literal: &str) -> Result<LogValue, LogValueError> {
    if literal == "inf" {
        Ok(LogValue::Infinite)
    } else {
        LogValue::finite(parse_rational(literal)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(LogValue::of(7, 2) < LogValue::Infinite);
        assert!(LogValue::of(1, 3) < LogValue::of(1, 2));
        assert_eq!(LogValue::of(2, 4), LogValue::of(1, 2));
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = LogValue::of(1, 3);
        let b = LogValue::of(1, 6);
        assert_eq!(a.add(&b), LogValue::of(1, 2));
        assert_eq!(a.checked_sub(&b).unwrap(), LogValue::of(1, 6));
        assert_eq!(a.scale(&rat(3, 1)).unwrap(), LogValue::of(1, 1));
    }

    #[test]
    fn negative_results_are_errors() {
        let a = LogValue::of(1, 3);
        let b = LogValue::of(1, 2);
        assert!(a.checked_sub(&b).is_err());
        assert!(LogValue::finite(rat(-1, 2)).is_err());
        assert!(a.scale(&rat(-1, 1)).is_err());
    }

    #[test]
    fn infinity_absorbs() {
        let a = LogValue::of(5, 1);
        assert_eq!(a.add(&LogValue::Infinite), LogValue::Infinite);
        assert_eq!(LogValue::Infinite.scale(&rat(4, 1)).unwrap(), LogValue::Infinite);
        assert!(LogValue::Infinite.scale(&rat(0, 1)).is_err());
        assert!(a.checked_sub(&LogValue::Infinite).is_err());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "7/3", "12", "1/2"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_log_value("inf").unwrap(), LogValue::Infinite);
        assert!(parse_log_value("-1/2").is_err());
    }
}
