//! The graded ring product of truncated expansions.
//!
//! `a_{FG}(N) = sum_{N1 + N2 = N} a_F(N1) a_G(N2)` over all pairs of
//! positive semi-definite `N1, N2`. Trace is additive, so the product is
//! exact up to `min(T_F, T_G)`.
//!
//! Coefficients are scaled to integers by a common denominator and the
//! convolution runs over machine `i128` when the magnitudes provably fit,
//! over `BigInt` otherwise.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FormIndex, SiegelExpansion};
use crate::arith::{isqrt, Rational};
use crate::par::{self, Strategy};
use crate::quadform::HalfIntegralForm;

trait Accumulator: Clone + Send + Sync + Zero + for<'a> AddAssign<&'a Self> {
    fn mul_acc(acc: &mut Self, a: &Self, b: &Self, negate: bool);
    fn into_bigint(self) -> BigInt;
}

impl Accumulator for i128 {
    #[inline]
    fn mul_acc(acc: &mut Self, a: &Self, b: &Self, negate: bool) {
        let p = a * b;
        if negate {
            *acc -= p;
        } else {
            *acc += p;
        }
    }

    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Accumulator for BigInt {
    #[inline]
    fn mul_acc(acc: &mut Self, a: &Self, b: &Self, negate: bool) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        if negate {
            *acc -= p;
        } else {
            *acc += p;
        }
    }

    fn into_bigint(self) -> BigInt {
        self
    }
}

/// `(numerators, common denominator)` with `value_i = numerators_i / denominator`.
fn integral_scaling(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let nums = values
        .iter()
        .map(|v| v.numer() * (&denom / v.denom()))
        .collect();
    (nums, denom)
}

fn max_bits(values: &[BigInt]) -> u64 {
    values.iter().map(|v| v.bits()).max().unwrap_or(0)
}

struct Operand<'a, A> {
    values: &'a [A],
    odd: bool,
}

fn convolve_at<A: Accumulator>(
    target: &HalfIntegralForm,
    index: &FormIndex,
    f: &Operand<'_, A>,
    g: &Operand<'_, A>,
) -> A {
    let (r, b, s) = (target.r(), target.b(), target.s());
    let mut acc = A::zero();
    for r1 in 0..=r {
        let r2 = r - r1;
        for s1 in 0..=s {
            let s2 = s - s1;
            let m1 = isqrt((4 * r1 * s1) as u64) as i64;
            let m2 = isqrt((4 * r2 * s2) as u64) as i64;
            let lo = (-m1).max(b - m2);
            let hi = m1.min(b + m2);
            for b1 in lo..=hi {
                let (i, si) = index.slot_rbs(r1, b1, s1).expect("psd by construction");
                let (j, sj) = index.slot_rbs(r2, b - b1, s2).expect("psd by construction");
                let negate = (f.odd && si < 0) != (g.odd && sj < 0);
                A::mul_acc(&mut acc, &f.values[i], &g.values[j], negate);
            }
        }
    }
    acc
}

fn run<A: Accumulator>(
    strategy: Strategy,
    index: &FormIndex,
    f: &Operand<'_, A>,
    g: &Operand<'_, A>,
) -> Vec<BigInt> {
    par::map(strategy, index.classes(), |n| convolve_at(n, index, f, g).into_bigint())
}

/// `F * G` with the default execution strategy.
pub fn multiply(f: &SiegelExpansion, g: &SiegelExpansion) -> SiegelExpansion {
    multiply_with(f, g, Strategy::default())
}

/// `F * G`: weight `k_F + k_G`, truncation `min(T_F, T_G)`.
pub fn multiply_with(f: &SiegelExpansion, g: &SiegelExpansion, strategy: Strategy) -> SiegelExpansion {
    let t = f.max_trace().min(g.max_trace());
    let (f, g) = (f.truncate(t), g.truncate(t));
    let index = FormIndex::get(t);
    let (fn_, fd) = integral_scaling(f.class_values());
    let (gn, gd) = integral_scaling(g.class_values());

    // Each target sums at most (T+1)^2 (2T+1) products.
    let tu = t as u128 + 1;
    let terms = tu * tu * (2 * tu);
    let bits = max_bits(&fn_) + max_bits(&gn) + (128 - terms.leading_zeros()) as u64;
    let odd_f = f.weight() % 2 == 1;
    let odd_g = g.weight() % 2 == 1;

    let sums = if bits <= 126 {
        let fi: Vec<i128> = fn_.iter().map(|v| v.to_i128().expect("bounded")).collect();
        let gi: Vec<i128> = gn.iter().map(|v| v.to_i128().expect("bounded")).collect();
        run(
            strategy,
            &index,
            &Operand { values: &fi, odd: odd_f },
            &Operand { values: &gi, odd: odd_g },
        )
    } else {
        run(
            strategy,
            &index,
            &Operand { values: &fn_, odd: odd_f },
            &Operand { values: &gn, odd: odd_g },
        )
    };
    let denom = fd * gd;
    let coeffs = sums
        .into_iter()
        .map(|v| Rational::new(v, denom.clone()))
        .collect();
    debug_assert!(!denom.is_negative());
    SiegelExpansion::from_class_values(f.weight() + g.weight(), t, coeffs).expect("sizes match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::fourier::eisenstein;
    use crate::quadform::enumerate_forms;

    /// Textbook double loop over all pairs of forms.
    fn naive_product(f: &SiegelExpansion, g: &SiegelExpansion) -> SiegelExpansion {
        let t = f.max_trace().min(g.max_trace());
        let forms = enumerate_forms(t);
        SiegelExpansion::from_fn(f.weight() + g.weight(), t, |n| {
            let mut acc = int(0);
            for n1 in &forms {
                let (r2, b2, s2) = (n.r() - n1.r(), n.b() - n1.b(), n.s() - n1.s());
                if let Ok(n2) = HalfIntegralForm::new(r2, b2, s2) {
                    acc += f.get(n1).unwrap() * g.get(&n2).unwrap();
                }
            }
            acc
        })
    }

    #[test]
    fn examples() {
        let e4 = eisenstein(4, 6).unwrap();
        let e6 = eisenstein(6, 6).unwrap();
        let p = multiply(&e4, &e6);
        assert_eq!(p.weight(), 10);
        assert_eq!(p.get_rbs(0, 0, 0).unwrap(), int(1));
        assert_eq!(p.get_rbs(1, 0, 0).unwrap(), int(240 - 504));
        assert_eq!(multiply(&e4, &e4).get_rbs(1, 0, 0).unwrap(), int(480));
    }

    #[test]
    fn matches_naive_double_loop() {
        let e4 = eisenstein(4, 6).unwrap();
        let e6 = eisenstein(6, 5).unwrap();
        let e12 = eisenstein(12, 6).unwrap();
        assert_eq!(multiply(&e4, &e6), naive_product(&e4, &e6));
        assert_eq!(multiply(&e4, &e12), naive_product(&e4, &e12));
    }

    #[test]
    fn odd_weight_signs_match_naive() {
        let t = 5;
        let odd = SiegelExpansion::from_fn(3, t, |n| int(n.r() - 2 * n.b() + 3 * n.s() + 1));
        let even = SiegelExpansion::from_fn(2, t, |n| int(n.b() * n.b() - n.s() + 7));
        assert_eq!(multiply(&odd, &even), naive_product(&odd, &even));
        assert_eq!(multiply(&odd, &odd), naive_product(&odd, &odd));
    }

    #[test]
    fn bigint_path_agrees_with_i128_path() {
        let e4 = eisenstein(4, 6).unwrap();
        let e6 = eisenstein(6, 6).unwrap();
        let index = FormIndex::get(6);
        let (a, _) = integral_scaling(e4.class_values());
        let (b, _) = integral_scaling(e6.class_values());
        let ai: Vec<i128> = a.iter().map(|v| v.to_i128().unwrap()).collect();
        let bi: Vec<i128> = b.iter().map(|v| v.to_i128().unwrap()).collect();
        let big = run(
            Strategy::Sequential,
            &index,
            &Operand { values: &a, odd: false },
            &Operand { values: &b, odd: false },
        );
        let small = run(
            Strategy::Sequential,
            &index,
            &Operand { values: &ai, odd: false },
            &Operand { values: &bi, odd: false },
        );
        assert_eq!(big, small);
    }

    #[test]
    fn strategies_agree_and_product_commutes() {
        let e4 = eisenstein(4, 8).unwrap();
        let e6 = eisenstein(6, 8).unwrap();
        let seq = multiply_with(&e4, &e6, Strategy::Sequential);
        let par = multiply_with(&e4, &e6, Strategy::Parallel);
        assert_eq!(seq, par);
        assert_eq!(seq, multiply(&e6, &e4));
    }

    #[test]
    fn associative_on_common_truncation() {
        let e4 = eisenstein(4, 6).unwrap();
        let e6 = eisenstein(6, 5).unwrap();
        let e10 = eisenstein(10, 6).unwrap();
        let left = multiply(&multiply(&e4, &e6), &e10);
        let right = multiply(&e4, &multiply(&e6, &e10));
        assert_eq!(left, right);
    }
}
