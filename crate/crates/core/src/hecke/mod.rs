//! Hecke operators `T(p^delta)` acting on truncated expansions.
//!
//! The coefficients of `T(p^delta) F` come from Andrianov's formula
//!
//! ```text
//! a(p^d; N) = sum_{a+b+c=d} p^((k-2)b + (2k-3)c)
//!             sum_{U in R(p^b), r_u = 0 (p^(b+c)), b_u = s_u = 0 (p^c)}
//!             a(p^a [[r_u p^(-b-c), b_u/2 p^(-c)], [b_u/2 p^(-c), s_u p^(b-c)]])
//! ```
//!
//! evaluated literally in [`andrianov_coeff`]. The `coeff_cor*` functions are
//! the closed simplifications for special shapes of `N` and small `delta`,
//! kept as an independent route for cross-checking.

mod andrianov;
mod apply;
mod corollaries;
mod cosets;

pub use andrianov::{andrianov_coeff, andrianov_coeff_with_cosets, andrianov_terms, SourceTerm};
pub use apply::{apply_hecke, apply_hecke_with, hecke_output_trace};
pub use corollaries::{coeff_cor22, coeff_cor23, coeff_cor24, coeff_cor25};
pub use cosets::{coset_completeness, coset_set, CosetCheck, CosetSet};

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{is_prime, Rational};
use crate::error::{Error, Result};

/// Operators with `delta` above this need [`HeckeIndex::with_max_delta`].
pub const DEFAULT_MAX_DELTA: u32 = 4;

/// The index `p^delta` of `T(p^delta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeIndex {
    p: u64,
    delta: u32,
}

impl HeckeIndex {
    pub fn new(p: u64, delta: u32) -> Result<Self> {
        Self::with_max_delta(p, delta, DEFAULT_MAX_DELTA)
    }

    pub fn with_max_delta(p: u64, delta: u32, max_delta: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if delta == 0 || delta > max_delta {
            return Err(Error::InvalidArgument(format!(
                "delta must be in 1..={max_delta}, got {delta}"
            )));
        }
        Ok(HeckeIndex { p, delta })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// `p^delta`.
    pub fn value(&self) -> u64 {
        self.p.pow(self.delta)
    }
}

impl fmt::Display for HeckeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.delta)
    }
}

/// `delta_x(y_1, ..., y_n)`: 1 if `x` divides every `y_i`, else 0.
pub fn divisibility_indicator(x: i64, ys: &[i64]) -> u8 {
    u8::from(ys.iter().all(|y| y % x == 0))
}

/// `p^e` for a possibly negative exponent.
pub(crate) fn p_pow(p: u64, e: i64) -> Rational {
    let base = num_traits::pow(BigInt::from(p), e.unsigned_abs() as usize);
    if e.is_negative() {
        Rational::new(BigInt::one(), base)
    } else {
        Rational::from_integer(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    #[test]
    fn index_validation() {
        assert!(HeckeIndex::new(4, 1).is_err());
        assert!(HeckeIndex::new(2, 0).is_err());
        assert!(HeckeIndex::new(2, 5).is_err());
        assert!(HeckeIndex::with_max_delta(2, 5, 6).is_ok());
        assert_eq!(HeckeIndex::new(3, 2).unwrap().value(), 9);
    }

    #[test]
    fn indicator() {
        assert_eq!(divisibility_indicator(3, &[3, 6, 0]), 1);
        assert_eq!(divisibility_indicator(3, &[3, 7]), 0);
        assert_eq!(divisibility_indicator(5, &[]), 1);
        assert_eq!(p_pow(2, -3), frac(1, 8));
        assert_eq!(p_pow(3, 2), frac(9, 1));
    }
}
