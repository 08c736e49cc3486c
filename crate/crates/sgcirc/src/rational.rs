//! Exact rational scalars. All radii, colors and epsilon values in this
//! crate are `Rational`; there is no floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from small integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `num/den` with the denominator always printed,
/// e.g. `3/1`. This is the wire format used in all JSON payloads.
pub fn fmt_ratio(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// `x mod m` reduced into `[0, m)` for `m > 0`.
pub fn modulo(x: &Rational, m: &Rational) -> Rational {
    debug_assert!(m.is_positive());
    let q = (x / m).floor();
    x - q * m
}
