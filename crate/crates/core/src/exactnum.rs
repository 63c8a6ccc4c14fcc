//! Exact rationals, rising factorials and binomial coefficients.
//!
//! Rationals are `num_rational::Ratio` values, which are kept in lowest
//! terms with a positive denominator after every operation. Equality is
//! therefore structural.
//!
//! Text form is `p/q`, with `/q` omitted when `q = 1` (`-13/12`, `7`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::{ExactScalar, Integer, Rational};

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer<T: ExactScalar>(a: &T, k: u64) -> T {
    let mut acc = T::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc = acc * factor.clone();
        factor = factor + T::one();
    }
    acc
}

/// Binomial coefficient for nonnegative arguments; zero when `s > r`.
pub fn binom(r: u64, s: u64) -> Integer {
    if s > r {
        return Integer::zero();
    }
    let s = s.min(r - s);
    let mut acc = BigInt::one();
    // acc = C(r - s + i, i) after step i, always an exact division
    for i in 1..=s {
        acc = acc * BigInt::from(r - s + i) / BigInt::from(i);
    }
    acc
}

/// Sums `C(t, s)` for `t = s..r` term by term and compares the total with
/// `C(r, s + 1)`.
///
/// Returns `false` when the precondition `s < r` does not hold.
pub fn hockey_stick_check(r: u64, s: u64) -> bool {
    if s >= r {
        return false;
    }
    let lhs: Integer = (s..r).map(|t| binom(t, s)).sum();
    lhs == binom(r, s + 1)
}

pub fn is_integer<T: ExactScalar>(q: &T) -> bool {
    q.is_integral()
}

/// Canonical text form of a rational.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseRationalError {
    /// Byte offset of the offending character (or of the end of input).
    pub position: usize,
    pub kind: ParseRationalErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseRationalErrorKind {
    Empty,
    InvalidDigit,
    MissingDigits,
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseRationalErrorKind::Empty => "empty rational",
            ParseRationalErrorKind::InvalidDigit => "unexpected character",
            ParseRationalErrorKind::MissingDigits => "expected digits",
            ParseRationalErrorKind::ZeroDenominator => "zero denominator",
        };
        write!(f, "{what} at position {}", self.position)
    }
}

/// Parses `p` or `p/q` where `p` may carry a leading `-`, `+` or the
/// Unicode minus sign `−`, and `q` is a nonzero unsigned integer.
/// Surrounding whitespace is ignored. The result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    use ParseRationalErrorKind::*;

    let start = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(ParseRationalError { position: start, kind: Empty });
    }

    let (negative, sign_len) = if let Some(rest) = body.strip_prefix('-') {
        (true, body.len() - rest.len())
    } else if let Some(rest) = body.strip_prefix('\u{2212}') {
        (true, body.len() - rest.len())
    } else if let Some(rest) = body.strip_prefix('+') {
        (false, body.len() - rest.len())
    } else {
        (false, 0)
    };

    let (num_str, den_str) = match body[sign_len..].split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (&body[sign_len..], None),
    };

    let num_at = start + sign_len;
    let mut numer = parse_digits(num_str, num_at)?;
    if negative {
        numer = -numer;
    }

    let denom = match den_str {
        None => BigInt::one(),
        Some(d) => {
            let den_at = num_at + num_str.len() + 1;
            let d = parse_digits(d, den_at)?;
            if d.is_zero() {
                return Err(ParseRationalError { position: den_at, kind: ZeroDenominator });
            }
            d
        }
    };

    Ok(Rational::new(numer, denom))
}

fn parse_digits(s: &str, offset: usize) -> Result<BigInt, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError { position: offset, kind: ParseRationalErrorKind::MissingDigits });
    }
    if let Some((i, _)) = s.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(ParseRationalError { position: offset + i, kind: ParseRationalErrorKind::InvalidDigit });
    }
    Ok(s.parse().expect("ascii digits parse"))
}
