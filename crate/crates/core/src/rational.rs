//! Small helpers around `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-2"`, `"1/2"` or `"-7/3"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if !d.is_positive() {
                return Err(bad());
            }
            Ok(Q::new(int(n)?, d))
        }
    }
}

pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Q) -> BigInt {
    let (d, r) = x.numer().div_mod_floor(x.denom());
    if r.is_zero() {
        d
    } else {
        d + BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        assert_eq!(parse_rational("3").unwrap(), q(3));
        assert_eq!(parse_rational("-1/2").unwrap(), q_frac(-1, 2));
        assert_eq!(parse_rational("2/4").unwrap(), q_frac(1, 2));
        assert_eq!(format_rational(&q_frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&q(0)), "0");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "a", "1/", "/2", "1/-2", "--1", "1.5", "1/2/3"] {
            assert!(parse_rational(s).is_err(), "{s:?} should fail");
        }
    }

    #[test]
    fn ceiling() {
        assert_eq!(ceil(&q_frac(3, 2)), BigInt::from(2));
        assert_eq!(ceil(&q_frac(-3, 2)), BigInt::from(-1));
        assert_eq!(ceil(&q(4)), BigInt::from(4));
    }
}
