//! Helpers for moving exact rationals across text and JSON boundaries.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use serde_json::{json, Value};

/// Parses "a/b" or a plain integer "a" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt =
        num.parse().map_err(|e| Error::Parse(format!("bad rational '{s}': {e}")))?;
    let den: BigInt =
        den.parse().map_err(|e| Error::Parse(format!("bad rational '{s}': {e}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("bad rational '{s}': zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// `{"num": "...", "den": "..."}` with the fraction in lowest terms.
pub fn rat_json(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn rat_display(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_i64(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Floor of a nonnegative rational as usize, clamped at `max`.
pub fn floor_usize(r: &BigRational, max: usize) -> usize {
    if r < &BigRational::zero() {
        return 0;
    }
    let f = r.floor();
    let i = f.to_integer();
    if i > BigInt::from(max) {
        max
    } else {
        let (_, digits) = i.to_u64_digits();
        digits.first().copied().unwrap_or(0) as usize
    }
}

/// Approximate f64 value, for human-facing report fields only.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
