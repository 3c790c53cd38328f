use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `"p/q"`, with `/q` dropped when `q == 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |e: &dyn std::fmt::Display| Error::Parse(format!("rational {s:?}: {e}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|e| bad(&e))?;
    let den: BigInt = den.parse().map_err(|e| bad(&e))?;
    if den == BigInt::from(0) {
        return Err(bad(&"zero denominator"));
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
