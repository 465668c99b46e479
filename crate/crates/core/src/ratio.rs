//! Exact rationals and their `"p/q"` wire format.

use num_rational::Rational64;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Always `"p/q"`, including unit denominators (`"6/1"`), so reports are
/// byte-stable and trivially parseable.
pub fn rat_to_string(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer.
pub fn rat_from_str(s: &str) -> Result<Rational64> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("bad rational component {t:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let denom = parse(q)?;
            if denom == 0 {
                return Err(Error::InvalidInput("zero denominator".into()));
            }
            Ok(Rational64::new(parse(p)?, denom))
        }
        None => Ok(Rational64::from_integer(parse(s)?)),
    }
}

pub fn is_non_negative(r: &Rational64) -> bool {
    !r.is_negative()
}
