use num_traits::Zero;

use super::{coset_set, p_pow, CosetSet, HeckeIndex};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::fourier::SiegelExpansion;
use crate::quadform::{transform, HalfIntegralForm, UnimodularMatrix};

/// One summand of the formula: the coefficient `a(source)` enters with
/// weight `p^((k-2) beta + (2k-3) gamma)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceTerm {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub coset: UnimodularMatrix,
    pub source: HalfIntegralForm,
}

impl SourceTerm {
    pub fn factor(&self, p: u64, weight: u32) -> Rational {
        let k = weight as i64;
        p_pow(p, (k - 2) * self.beta as i64 + (2 * k - 3) * self.gamma as i64)
    }
}

fn default_cosets(idx: &HeckeIndex) -> Vec<CosetSet> {
    (0..=idx.delta()).map(|beta| coset_set(idx.p(), beta)).collect()
}

/// Every summand of `a(p^delta; N)` surviving the congruence conditions,
/// with default coset representatives.
pub fn andrianov_terms(idx: &HeckeIndex, n: &HalfIntegralForm) -> Vec<SourceTerm> {
    terms_with(idx, n, &default_cosets(idx))
}

pub(crate) fn terms_with(idx: &HeckeIndex, n: &HalfIntegralForm, cosets: &[CosetSet]) -> Vec<SourceTerm> {
    let p = idx.p() as i64;
    let delta = idx.delta();
    let mut out = Vec::new();
    for alpha in (0..=delta).rev() {
        for beta in 0..=delta - alpha {
            let gamma = delta - alpha - beta;
            let p_bg = p.pow(beta + gamma);
            let p_g = p.pow(gamma);
            let scale = p.pow(alpha);
            for u in &cosets[beta as usize].members {
                let nu = transform(n, u);
                if nu.r() % p_bg != 0 || nu.b() % p_g != 0 || nu.s() % p_g != 0 {
                    continue;
                }
                let s = if beta >= gamma {
                    nu.s() * p.pow(beta - gamma)
                } else {
                    nu.s() / p.pow(gamma - beta)
                };
                let source = HalfIntegralForm::new(nu.r() / p_bg, nu.b() / p_g, s)
                    .unwrap_or_else(|e| panic!("internal error: source of {n} under {u} left the index set: {e}"))
                    .scale(scale);
                out.push(SourceTerm {
                    alpha,
                    beta,
                    gamma,
                    coset: *u,
                    source,
                });
            }
        }
    }
    out
}

pub(crate) fn evaluate_terms(f: &SiegelExpansion, p: u64, terms: &[SourceTerm]) -> Result<Rational> {
    let mut missing: Vec<HalfIntegralForm> = terms
        .iter()
        .filter(|t| f.missing_trace(&t.source).is_some())
        .map(|t| t.source)
        .collect();
    if !missing.is_empty() {
        missing.sort();
        missing.dedup();
        return Err(Error::TruncationExceeded {
            missing,
            available: f.max_trace(),
        });
    }
    let mut acc = Rational::zero();
    for t in terms {
        let a = f.get(&t.source)?;
        if !a.is_zero() {
            acc += t.factor(p, f.weight()) * a;
        }
    }
    Ok(acc)
}

/// `a(p^delta; N)`, the coefficient of `T(p^delta) F` at `N`.
pub fn andrianov_coeff(f: &SiegelExpansion, idx: &HeckeIndex, n: &HalfIntegralForm) -> Result<Rational> {
    evaluate_terms(f, idx.p(), &andrianov_terms(idx, n))
}

/// [`andrianov_coeff`] with caller-chosen `R(p^beta)`, `cosets[beta]` for
/// `beta = 0..=delta`.
pub fn andrianov_coeff_with_cosets(
    f: &SiegelExpansion,
    idx: &HeckeIndex,
    n: &HalfIntegralForm,
    cosets: &[CosetSet],
) -> Result<Rational> {
    if cosets.len() <= idx.delta() as usize {
        return Err(Error::InvalidArgument(format!(
            "need coset sets for beta = 0..={}",
            idx.delta()
        )));
    }
    evaluate_terms(f, idx.p(), &terms_with(idx, n, cosets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::fourier::eisenstein;
    use num_integer::Integer;

    fn idx(p: u64, d: u32) -> HeckeIndex {
        HeckeIndex::new(p, d).unwrap()
    }

    #[test]
    fn eisenstein_at_zero() {
        let e4 = eisenstein(4, 8).unwrap();
        let zero = HalfIntegralForm::ZERO;
        assert_eq!(andrianov_coeff(&e4, &idx(2, 1), &zero).unwrap(), int(45));
        assert_eq!(andrianov_coeff(&e4, &idx(3, 1), &zero).unwrap(), int(280));
        assert_eq!(andrianov_coeff(&e4, &idx(2, 2), &zero).unwrap(), int(1549));
    }

    #[test]
    fn eisenstein_eigen_relation_at_identity() {
        let e4 = eisenstein(4, 8).unwrap();
        let v = andrianov_coeff(&e4, &idx(2, 1), &HalfIntegralForm::IDENTITY).unwrap();
        assert_eq!(v, int(45 * 30240));
    }

    #[test]
    fn missing_sources_are_listed() {
        let e4 = eisenstein(4, 3).unwrap();
        match andrianov_coeff(&e4, &idx(2, 1), &HalfIntegralForm::IDENTITY) {
            Err(Error::TruncationExceeded { missing, available }) => {
                assert_eq!(available, 3);
                assert!(missing.contains(&HalfIntegralForm::scalar(2)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    /// Same first rows up to a unit, different integer lifts and completions.
    fn alternate_cosets(p: u64, beta: u32, unit: i64, shift: i64) -> CosetSet {
        let mut set = coset_set(p, beta);
        let q = (p as i64).pow(beta);
        for m in set.members.iter_mut() {
            let (u1, u2) = m.first_row();
            let mut a = (unit * u1).rem_euclid(q.max(1));
            let mut b = (unit * u2).rem_euclid(q.max(1)) + 3 * q;
            while a.gcd(&b) != 1 {
                b += q;
                if b > 50 * q + 50 {
                    a += q;
                }
            }
            let g = a.extended_gcd(&b);
            // [[a, b], [-y, x]] has determinant a x + b y = 1
            let base = UnimodularMatrix::new(a, b, -g.y, g.x).unwrap();
            let slide = UnimodularMatrix::new(1, 0, shift, 1).unwrap();
            *m = slide.mul(&base);
        }
        set
    }

    #[test]
    fn representative_independence() {
        let e4 = eisenstein(4, 30).unwrap();
        for (p, beta_max) in [(2u64, 2u32), (3, 1), (2, 1)] {
            let index = idx(p, beta_max);
            for (unit, shift) in [(1, 1), (3, -2), (5, 4)] {
                if (unit as u64).is_multiple_of(p) {
                    continue;
                }
                let cosets: Vec<CosetSet> = (0..=beta_max)
                    .map(|b| if b == 0 { coset_set(p, 0) } else { alternate_cosets(p, b, unit, shift) })
                    .collect();
                for n in crate::quadform::canonical_forms(4) {
                    let a = andrianov_coeff(&e4, &index, &n).unwrap();
                    let b = andrianov_coeff_with_cosets(&e4, &index, &n, &cosets).unwrap();
                    assert_eq!(a, b, "p={p} N={n} unit={unit} shift={shift}");
                }
            }
        }
    }

    #[test]
    fn linear_in_the_form() {
        let e4 = eisenstein(4, 12).unwrap();
        let g = SiegelExpansion::from_fn(4, 12, |n| int(n.r() * n.r() - 3 * n.b() + n.s()));
        let (x, y) = (int(3), crate::arith::frac(-2, 5));
        let combo = e4.scale(&x).add(&g.scale(&y)).unwrap();
        for n in crate::quadform::canonical_forms(3) {
            for index in [idx(2, 1), idx(3, 1), idx(2, 2)] {
                let lhs = andrianov_coeff(&combo, &index, &n).unwrap();
                let rhs = &x * andrianov_coeff(&e4, &index, &n).unwrap()
                    + &y * andrianov_coeff(&g, &index, &n).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
