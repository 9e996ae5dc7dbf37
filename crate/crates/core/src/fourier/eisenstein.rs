use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::One;

use super::SiegelExpansion;
use crate::arith::{cohen_h, divisors, int, zeta_at_one_minus, Rational};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::quadform::HalfIntegralForm;

fn check_weight(k: u32) -> Result<()> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!("weight must be even ≥ 4, got {k}")));
    }
    Ok(())
}

/// `2 / (zeta(1 - k) zeta(3 - 2k))`.
fn prefactor(k: u32) -> Rational {
    let z1 = zeta_at_one_minus(k).expect("k >= 4");
    let z2 = zeta_at_one_minus(2 * k - 2).expect("k >= 4");
    int(2) / (z1 * z2)
}

fn content(n: &HalfIntegralForm) -> u64 {
    n.r().gcd(&n.b()).gcd(&n.s()) as u64
}

/// The `(d, (4rs - b^2) / d^2)` pairs of the divisor sum.
fn divisor_terms(n: &HalfIntegralForm) -> Vec<(u64, u64)> {
    let det4 = n.det4() as u64;
    divisors(content(n))
        .into_iter()
        .map(|d| (d, det4 / (d * d)))
        .collect()
}

fn assemble(
    k: u32,
    n: &HalfIntegralForm,
    pre: &Rational,
    h: impl Fn(u64) -> Rational,
) -> Rational {
    if n.is_zero() {
        return Rational::one();
    }
    
    divisor_terms(n)
        .into_iter()
        .map(|(d, disc)| pre * num_traits::pow(int(d as i64), k as usize - 1) * h(disc))
        .fold(int(0), |acc, t| acc + t)
}

/// `a_k(N)` of the Siegel Eisenstein series, from
/// `2 / (zeta(1-k) zeta(3-2k)) * sum_{d | (r,b,s)} d^(k-1) H(k-1, (4rs-b^2)/d^2)`
/// with `a_k(0) = 1`. Works on any representative, canonical or not.
pub fn eisenstein_coefficient(k: u32, n: &HalfIntegralForm) -> Result<Rational> {
    check_weight(k)?;
    Ok(assemble(k, n, &prefactor(k), |disc| cohen_h(k - 1, disc)))
}

/// The weight `k` Siegel Eisenstein series truncated at `max_trace`.
pub fn eisenstein(k: u32, max_trace: u64) -> Result<SiegelExpansion> {
    check_weight(k)?;
    let pre = prefactor(k);
    let skeleton = SiegelExpansion::zero(k, max_trace);
    let discs: Vec<u64> = skeleton
        .classes()
        .iter()
        .filter(|n| !n.is_zero())
        .flat_map(|n| divisor_terms(n).into_iter().map(|(_, disc)| disc))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let values = par::map(Strategy::default(), &discs, |&disc| cohen_h(k - 1, disc));
    let h: HashMap<u64, Rational> = discs.into_iter().zip(values).collect();
    Ok(SiegelExpansion::from_fn(k, max_trace, |n| {
        assemble(k, n, &pre, |disc| h[&disc].clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{divisor_sigma, frac};
    use crate::quadform::{enumerate_forms, HalfIntegralForm};

    #[test]
    fn weight_four_examples() {
        let e4 = eisenstein(4, 8).unwrap();
        assert_eq!(e4.get_rbs(0, 0, 0).unwrap(), int(1));
        assert_eq!(e4.get_rbs(1, 0, 0).unwrap(), int(240));
        assert_eq!(e4.get_rbs(1, 0, 1).unwrap(), int(30240));
        assert_eq!(e4.get_rbs(1, 1, 1).unwrap(), int(13440));
        assert_eq!(prefactor(4), int(-60480));
    }

    #[test]
    fn weight_validation() {
        assert!(eisenstein(5, 4).is_err());
        assert!(eisenstein(2, 4).is_err());
        assert!(eisenstein_coefficient(3, &HalfIntegralForm::IDENTITY).is_err());
    }

    /// On rank-1 forms the coefficients are those of the elliptic E_k:
    /// `-2k / B_k * sigma_{k-1}(e)`.
    #[test]
    fn singular_part_is_elliptic_eisenstein() {
        for k in [4u32, 6, 8, 10, 12] {
            let e = eisenstein(k, 10).unwrap();
            let c = int(-2 * k as i64) / crate::arith::bernoulli(k);
            for m in 1..=10i64 {
                let expect = &c * Rational::from_integer(divisor_sigma(k - 1, m as u64));
                assert_eq!(e.get_rbs(m, 0, 0).unwrap(), expect, "k={k} m={m}");
            }
        }
        let e6 = eisenstein(6, 2).unwrap();
        assert_eq!(e6.get_rbs(1, 0, 0).unwrap(), int(-504));
    }

    #[test]
    fn expansion_agrees_with_direct_formula_on_all_representatives() {
        for k in [4u32, 6] {
            let e = eisenstein(k, 7).unwrap();
            for n in enumerate_forms(7) {
                assert_eq!(e.get(&n).unwrap(), eisenstein_coefficient(k, &n).unwrap(), "{n}");
            }
        }
    }

    #[test]
    fn integrality_of_low_weights() {
        for k in [4u32, 6] {
            let e = eisenstein(k, 10).unwrap();
            assert!(e.class_values().iter().all(|v| v.is_integer()), "k={k}");
        }
        let e12 = eisenstein(12, 2).unwrap();
        assert_eq!(e12.get_rbs(1, 0, 0).unwrap(), frac(65520, 691));
    }
}
