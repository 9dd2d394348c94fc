//! Exact rational scalars: parsing, rendering and serialization helpers.
//!
//! A rational is written `p`, `-p` or `p/q` with `q > 0`; rendering always
//! uses the reduced form with a positive denominator and drops `/1`, which is
//! exactly what `Ratio`'s `Display` produces after normalization.

use crate::error::Error;

pub use num::bigint::BigInt;

/// Arbitrary-precision rational number.
pub type Rational = num::rational::Ratio<BigInt>;

/// Parses a single rational token: `p`, `-p`, `p/q` or `-p/q` with `q > 0`.
///
/// Only ASCII digits and one optional leading `-` are accepted; anything else
/// (whitespace, `+`, empty parts, `q <= 0`) is rejected.
pub fn parse_rational(token: &str) -> Result<Rational, String> {
    match token.split_once('/') {
        None => {
            let n = parse_int(token)?;
            Ok(Rational::from_integer(n))
        }
        Some((num_part, den_part)) => {
            let n = parse_int(num_part)?;
            if den_part.starts_with('-') {
                return Err(format!("denominator must be positive in {token:?}"));
            }
            let d = parse_int(den_part)?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in {token:?}"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

fn parse_int(text: &str) -> Result<BigInt, String> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid integer {text:?}"));
    }
    text.parse::<BigInt>()
        .map_err(|e| format!("invalid integer {text:?}: {e}"))
}

/// Like [`parse_rational`] but wraps failures in [`Error::Parse`] with a line number.
pub fn parse_rational_at(token: &str, line: usize) -> Result<Rational, Error> {
    parse_rational(token).map_err(|msg| Error::parse(line, msg))
}

/// Raises a rational to an integer exponent, exactly.
///
/// Negative exponents invert; `0` raised to a negative exponent is an error
/// and `index` identifies the offending entry for diagnostics.
pub fn rational_pow(x: &Rational, exponent: i32, index: usize) -> Result<Rational, Error> {
    use num::traits::Pow;
    use num::Zero;
    if exponent < 0 && x.is_zero() {
        return Err(Error::ZeroWithNegativeExponent { index, exponent });
    }
    Ok(Pow::pow(x.clone(), exponent))
}

/// Serde adapters that render exact numbers as strings so JSON output never
/// loses precision (and never depends on a float formatter).
pub mod serde_str {
    use super::{BigInt, Rational};
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn rational<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn rational_opt<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn rational_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn bigint_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }
}
