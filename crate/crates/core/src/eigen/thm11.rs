use num_integer::Integer;
use num_traits::Zero;

use super::{default_witnesses, eigenvalue_direct, VerificationReport};
use crate::arith::{int, is_prime, pow_rat, Rational};
use crate::error::{Error, Result};
use crate::fourier::SiegelExpansion;
use crate::hecke::{apply_hecke, HeckeIndex};
use crate::quadform::{canonical_forms, HalfIntegralForm};

/// Instances of the three multiplicative relations between `a(mI)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Thm11Params {
    /// `m` for part (1); only checked when `a(I) = 0`.
    pub multiples: Vec<i64>,
    /// Coprime `(m, n)` for part (2).
    pub coprime_pairs: Vec<(i64, i64)>,
    /// `(p, r)` with `r >= 1` for part (3).
    pub prime_exponents: Vec<(u64, u32)>,
}

impl Thm11Params {
    /// Every instance whose largest multiple of `I` has trace `<= max_trace`,
    /// with `p` in `{2, 3, 5}` and `r` in `{1, 2}` for part (3).
    pub fn within(max_trace: u64) -> Self {
        let top = (max_trace / 2) as i64;
        let mut coprime_pairs = Vec::new();
        for m in 2..=top {
            for n in m + 1..=top / m {
                if m.gcd(&n) == 1 {
                    coprime_pairs.push((m, n));
                }
            }
        }
        let prime_exponents = [2u64, 3, 5]
            .into_iter()
            .flat_map(|p| [1u32, 2].map(|r| (p, r)))
            .filter(|&(p, r)| 2 * p.pow(r + 1) <= max_trace)
            .collect();
        Thm11Params {
            multiples: (1..=top).collect(),
            coprime_pairs,
            prime_exponents,
        }
    }
}

/// Checks parts (1) to (3) on every instance in `params`, evaluating both
/// sides literally from the stored coefficients.
pub fn verify_thm11(f: &SiegelExpansion, params: &Thm11Params) -> Result<Vec<VerificationReport>> {
    let a = |m: i64| f.get_scalar(m);
    let a_i = a(1)?;
    let mut out = Vec::new();

    if a_i.is_zero() {
        for &m in &params.multiples {
            if m <= 0 {
                return Err(Error::Precondition(format!("m = {m} must be positive")));
            }
            out.push(VerificationReport::new("vanishing a(mI)", [("m", m)], a(m)?, Rational::zero()));
        }
    }

    for &(m, n) in &params.coprime_pairs {
        if m <= 0 || n <= 0 || m.gcd(&n) != 1 {
            return Err(Error::Precondition(format!("({m}, {n}) is not a pair of coprime positive integers")));
        }
        let lhs = &a_i * a(m * n)?;
        let rhs = a(m)? * a(n)?;
        out.push(VerificationReport::new("coprime product", [("m", m), ("n", n)], lhs, rhs));
    }

    let k = f.weight();
    for &(p, r) in &params.prime_exponents {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::Precondition("r must be at least 1".into()));
        }
        let pi = p as i64;
        let pr = pi.pow(r);
        let lhs = &a_i * a(pr * pi)?;

        let mut bracket = int(2) * f.get_rbs(pr / pi, 0, pr * pi)?;
        if k.is_multiple_of(2) {
            let mut sum = Rational::zero();
            for u in 1..=(pi - 1) / 2 {
                if (u * u + 1) % pi == 0 {
                    continue;
                }
                // p^r [[(1 + u^2)/p, u], [u, p]]
                sum += f.get_rbs(pr / pi * (1 + u * u), 2 * u * pr, pr * pi)?;
            }
            bracket += int(2) * sum;
        }
        let rhs = a(pi)? * a(pr)?
            - pow_rat(p, 2 * k - 3) * &a_i * a(pr / pi)?
            - pow_rat(p, k - 2) * &a_i * bracket;
        out.push(VerificationReport::new("prime power recursion", [("p", p as i64), ("r", r.into())], lhs, rhs));
    }
    Ok(out)
}

/// `lambda` of `T(n) T(m) F` read off at every computable witness.
fn composed_eigenvalue(f: &SiegelExpansion, first: &HeckeIndex, second: &HeckeIndex) -> Result<Rational> {
    let g = apply_hecke(&apply_hecke(f, first), second);
    let mut found: Option<(Rational, HalfIntegralForm)> = None;
    for n in canonical_forms(g.max_trace()) {
        let a = f.get(&n)?;
        if a.is_zero() {
            continue;
        }
        let lambda = g.get(&n)? / a;
        match &found {
            None => found = Some((lambda, n)),
            Some((v, w)) if *v != lambda => {
                return Err(Error::InconsistentEigenvalue {
                    first: Box::new(v.clone()),
                    first_witness: *w,
                    second: Box::new(lambda),
                    second_witness: n,
                })
            }
            Some(_) => {}
        }
    }
    found.map(|(v, _)| v).ok_or(Error::NoNonzeroWitness)
}

/// For each pair of coprime prime powers `(m, n)`, compares the eigenvalue
/// of the composed operator, in both orders, with `lambda(m) lambda(n)`.
pub fn verify_multiplicativity(
    f: &SiegelExpansion,
    pairs: &[(HeckeIndex, HeckeIndex)],
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for (m, n) in pairs {
        if m.p() == n.p() {
            return Err(Error::Precondition(format!("{m} and {n} are not coprime")));
        }
        let lm = eigenvalue_direct(f, m.p(), m.delta(), &default_witnesses(f, m))?;
        let ln = eigenvalue_direct(f, n.p(), n.delta(), &default_witnesses(f, n))?;
        let product = lm.value * ln.value;
        let params = || [("m", m.value()), ("n", n.value())];
        out.push(VerificationReport::new(
            "T(n)T(m) = T(mn)",
            params(),
            composed_eigenvalue(f, m, n)?,
            product.clone(),
        ));
        out.push(VerificationReport::new(
            "T(m)T(n) = T(mn)",
            params(),
            composed_eigenvalue(f, n, m)?,
            product,
        ));
    }
    Ok(out)
}
