//! Exact arithmetic substrate.
//!
//! [`Rational`] is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator. Everything here is a pure function of its inputs.

mod bernoulli;
mod cohen;
mod kronecker;
mod multiplicative;

pub use bernoulli::{bernoulli, bernoulli_poly, dirichlet_l_neg, generalized_bernoulli, zeta_at_one_minus};
pub use cohen::{cohen_h, fundamental_decomposition, is_fundamental, FundamentalDecomposition};
pub use kronecker::kronecker_symbol;
pub use multiplicative::{divisor_sigma, divisors, factor, is_prime, moebius};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` as an exact integer rational.
pub fn pow_rat(base: u64, exp: u32) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(base), exp as usize))
}

/// Floor of the square root.
pub(crate) fn isqrt(n: u64) -> u64 {
    let n = n as u128;
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x as u64
}

/// Formats as `num/den`, always with an explicit denominator.
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Formats as an integer when the denominator is 1, `num/den` otherwise.
pub fn to_display_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        to_fraction_string(q)
    }
}

/// Parses `num/den` or a bare integer. The fraction must already be in
/// lowest terms with a positive denominator.
pub fn parse_fraction(s: &str) -> Result<Rational> {
    let bad = |why: &str| Error::Format(format!("bad fraction {s:?}: {why}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("numerator is not an integer"))?;
    let d: BigInt = d.parse().map_err(|_| bad("denominator is not an integer"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    if d.is_negative() {
        return Err(bad("negative denominator"));
    }
    if !num_integer::Integer::gcd(&n, &d).is_one() {
        return Err(bad("not in lowest terms"));
    }
    Ok(Rational::new_raw(n, d))
}
