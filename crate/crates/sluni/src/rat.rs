//! Exact rational scalars and their text form.
//!
//! Every numeric quantity in this crate is a [`Rat`], an arbitrary-precision
//! rational. The text form is `p/q` with the `/q` omitted for integers —
//! never a float.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p/q` or a bare integer.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let t = s.trim();
    t.parse::<Rat>()
        .map_err(|_| Error::Parse(format!("invalid rational `{t}`")))
}

/// Render in the `p/q` text form.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True when `r` is a non-negative integer.
pub fn is_non_negative_integer(r: &Rat) -> bool {
    is_integer(r) && !r.is_negative()
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}
