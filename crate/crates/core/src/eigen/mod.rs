//! Hecke eigenvalues from Fourier coefficients, their closed forms, and
//! checks of the multiplicative relations between coefficients.
//!
//! For an eigenform `a(N) lambda(p^delta) = a(p^delta; N)` for every `N`, so
//! any `N` with `a(N) != 0` is a witness for the eigenvalue.

mod report;
pub mod suites;
mod thm11;

pub use report::{ParamValue, VerificationReport};
pub use thm11::{verify_multiplicativity, verify_thm11, Thm11Params};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{int, pow_rat, Rational};
use crate::error::{Error, Result};
use crate::fourier::SiegelExpansion;
use crate::hecke::{andrianov_coeff, hecke_output_trace, HeckeIndex};
use crate::quadform::{canonical_forms, HalfIntegralForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenvalue {
    pub index: HeckeIndex,
    pub value: Rational,
    /// Witnesses with nonzero coefficient that produced `value`; empty for
    /// closed-form values.
    pub witnesses: Vec<HalfIntegralForm>,
}

impl Eigenvalue {
    pub fn is_integral(&self) -> bool {
        self.value.is_integer()
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda({}) = {}", self.index, crate::arith::to_display_string(&self.value))
    }
}

/// The weights `h1(p)`, `h2(p)` in the closed forms at `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HWeights {
    pub h1: u8,
    pub h2: u8,
}

impl HWeights {
    pub fn for_prime(p: u64) -> Self {
        match p % 4 {
            1 => HWeights { h1: 2, h2: 2 },
            2 => HWeights { h1: 1, h2: 0 },
            _ => HWeights { h1: 0, h2: 0 },
        }
    }
}

/// Every canonical class whose coefficient under `T(p^delta)` is computable
/// from `f`.
pub fn default_witnesses(f: &SiegelExpansion, idx: &HeckeIndex) -> Vec<HalfIntegralForm> {
    canonical_forms(hecke_output_trace(f, idx))
}

/// `a(p^delta; N) / a(N)`, required to agree across every witness with
/// `a(N) != 0`.
pub fn eigenvalue_direct(
    f: &SiegelExpansion,
    p: u64,
    delta: u32,
    witnesses: &[HalfIntegralForm],
) -> Result<Eigenvalue> {
    let idx = HeckeIndex::new(p, delta)?;
    let mut found: Option<(Rational, HalfIntegralForm)> = None;
    let mut used = Vec::new();
    for n in witnesses {
        let a = f.get(n)?;
        if a.is_zero() {
            continue;
        }
        let lambda = andrianov_coeff(f, &idx, n)? / a;
        match &found {
            None => found = Some((lambda, *n)),
            Some((first, first_witness)) if *first != lambda => {
                return Err(Error::InconsistentEigenvalue {
                    first: Box::new(first.clone()),
                    first_witness: *first_witness,
                    second: Box::new(lambda),
                    second_witness: *n,
                })
            }
            Some(_) => {}
        }
        used.push(*n);
    }
    let (value, _) = found.ok_or(Error::NoNonzeroWitness)?;
    Ok(Eigenvalue {
        index: idx,
        value,
        witnesses: used,
    })
}

fn order_index(p: u64, order: u32) -> Result<HeckeIndex> {
    if order != 1 && order != 2 {
        return Err(Error::InvalidArgument(format!("order must be 1 or 2, got {order}")));
    }
    HeckeIndex::new(p, order)
}

/// `lambda(p)` or `lambda(p^2)` from `a(pI)`, `a(p^2 I)` of a form with
/// `a(I) = 1`.
pub fn eigenvalue_thm12(f: &SiegelExpansion, p: u64, order: u32) -> Result<Eigenvalue> {
    let idx = order_index(p, order)?;
    let a_i = f.get(&HalfIntegralForm::IDENTITY)?;
    if !a_i.is_one() {
        return Err(Error::NotNormalized(a_i));
    }
    let k = f.weight();
    let h = HWeights::for_prime(p);
    let pi = p as i64;
    let a_p = f.get_scalar(pi)?;
    let value = if order == 1 {
        a_p + int(h.h1.into()) * pow_rat(p, k - 2)
    } else {
        f.get_scalar(pi * pi)?
            + int(h.h1.into()) * pow_rat(p, k - 2) * a_p
            + int(h.h2.into()) * pow_rat(p, 2 * k - 4)
    };
    Ok(Eigenvalue {
        index: idx,
        value,
        witnesses: Vec::new(),
    })
}

/// The eigenvalues of an eigenform of weight `k` with `a(0) != 0`.
pub fn eigenvalue_thm13(k: u32, p: u64, order: u32) -> Result<Eigenvalue> {
    let idx = order_index(p, order)?;
    if k < 2 {
        return Err(Error::InvalidArgument(format!("weight must be at least 2, got {k}")));
    }
    let q = |e: u32| num_traits::pow(BigInt::from(p), e as usize);
    let pb = BigInt::from(p);
    let value = if order == 1 {
        BigInt::one() + q(k - 1) + q(k - 2) + q(2 * k - 3)
    } else {
        BigInt::one()
            + q(k - 2) * (&pb + 1)
            + q(2 * k - 4) * (&pb * &pb + 2 * &pb)
            + q(3 * k - 5) * (&pb + 1)
            + q(4 * k - 6)
    };
    Ok(Eigenvalue {
        index: idx,
        value: Rational::from_integer(value),
        witnesses: Vec::new(),
    })
}
