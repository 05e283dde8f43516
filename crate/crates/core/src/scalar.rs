//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p/q` or `p`.
pub fn parse(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Scalar::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Scalar::from_integer),
    }
}

pub(crate) fn parse_at(s: &str, line: usize) -> Result<Scalar> {
    parse(s).ok_or_else(|| Error::Parse {
        line,
        msg: format!("bad rational '{s}'"),
    })
}

/// Canonical `p/q` rendering; integers are written as `p/1`.
pub fn to_record(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Returns the integer value if `s` is integral and fits in i64.
pub fn as_i64(s: &Scalar) -> Option<i64> {
    if s.is_integer() {
        i64::try_from(s.to_integer()).ok()
    } else {
        None
    }
}
