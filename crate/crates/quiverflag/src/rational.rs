//! Exact rational scalars and their canonical text form.
//!
//! All arithmetic in this crate is exact over ℚ with arbitrary-precision
//! integers ([`num::BigRational`]); nothing is ever rounded.  The wire format
//! for a scalar is the canonical string `"p/q"` with `gcd(p, q) = 1`,
//! `q > 0`, and the sign on the numerator; integers are written plain
//! (`"-3"`, not `"-3/1"`).

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// The scalar type used throughout: an exact rational number.
pub type Rat = BigRational;

/// The integer rational `n`.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n / d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the canonical form `"p/q"` or `"p"`.
///
/// Whitespace around the literal is accepted; the result is reduced and the
/// denominator normalized positive (so non-canonical inputs like `"2/-4"`
/// parse to `-1/2`).  A zero denominator is an error.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(s.to_string());
    match t.split_once('/') {
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = q.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Formats a rational in canonical form: `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat(" -4/6 ").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rat("2/-4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rat("0/5").unwrap(), rat(0));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "x", "1/0", "1/2/3", "1.5", "--2"] {
            assert!(parse_rat(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_rat(&rat(5)), "5");
        assert_eq!(format_rat(&rat(-5)), "-5");
        assert_eq!(format_rat(&rat(0)), "0");
        assert_eq!(format_rat(&ratio(2, 4)), "1/2");
        assert_eq!(format_rat(&ratio(3, -9)), "-1/3");
    }

    #[test]
    fn round_trip() {
        for s in ["0", "17", "-23/29", "1/2"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }
}
