use num_bigint::BigInt;
use num_traits::Zero;

use super::{
    dirichlet_l_neg, divisor_sigma, divisors, factor, kronecker_symbol, moebius, zeta_at_one_minus,
    Rational,
};
use crate::error::{Error, Result};

/// `M = D * f^2` with `D` a fundamental discriminant (or 1) and `f >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalDecomposition {
    pub discriminant: i64,
    pub conductor: u64,
}

fn is_squarefree(n: u64) -> bool {
    n >= 1 && factor(n).iter().all(|&(_, e)| e == 1)
}

/// True for `D = 1 mod 4` squarefree, or `D = 4m` with `m = 2, 3 mod 4`
/// squarefree. `1` counts (trivial character); `0` does not.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Splits a nonzero discriminant `M = 0, 1 mod 4` as `D * f^2`.
pub fn fundamental_decomposition(m: i64) -> Result<FundamentalDecomposition> {
    if m == 0 || !matches!(m.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidArgument(format!(
            "{m} is not a nonzero discriminant (needs M = 0 or 1 mod 4)"
        )));
    }
    let mut core = m.signum();
    let mut conductor = 1u64;
    for (p, e) in factor(m.unsigned_abs()) {
        if e % 2 == 1 {
            core *= p as i64;
        }
        conductor *= p.pow(e / 2);
    }
    // core = 2, 3 mod 4 forces an even conductor since M = 0, 1 mod 4.
    let (discriminant, conductor) = if core.rem_euclid(4) == 1 {
        (core, conductor)
    } else {
        debug_assert!(conductor.is_multiple_of(2));
        (4 * core, conductor / 2)
    };
    debug_assert!(is_fundamental(discriminant));
    Ok(FundamentalDecomposition {
        discriminant,
        conductor,
    })
}

/// Cohen's generalised class number `H(r, N)`.
///
/// `H(r, 0) = zeta(1 - 2r)`. For `(-1)^r N = 0, 1 mod 4`, writing
/// `(-1)^r N = D f^2`,
/// `H(r, N) = L(1 - r, chi_D) * sum_{d | f} mu(d) chi_D(d) d^(r-1) sigma_{2r-1}(f / d)`;
/// otherwise `H(r, N) = 0`. `H(1, N)` is the Hurwitz class number.
pub fn cohen_h(r: u32, n: u64) -> Rational {
    assert!(r >= 1, "H(r, N) needs r >= 1");
    if n == 0 {
        return zeta_at_one_minus(2 * r).expect("2r >= 2");
    }
    let signed = if r.is_multiple_of(2) { n as i64 } else { -(n as i64) };
    if !matches!(signed.rem_euclid(4), 0 | 1) {
        return Rational::zero();
    }
    let FundamentalDecomposition {
        discriminant: d,
        conductor: f,
    } = fundamental_decomposition(signed).expect("congruence checked");
    let l = dirichlet_l_neg(r, d).expect("discriminant is fundamental");
    let mut sum = BigInt::zero();
    for e in divisors(f) {
        let mu = moebius(e);
        let chi = kronecker_symbol(d, e as i64);
        if mu == 0 || chi == 0 {
            continue;
        }
        let term = num_traits::pow(BigInt::from(e), r as usize - 1) * divisor_sigma(2 * r - 1, f / e);
        if mu * chi as i64 > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    l * Rational::from_integer(sum)
}
