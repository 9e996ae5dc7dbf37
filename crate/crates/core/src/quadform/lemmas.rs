//! Constructive lemmas behind the `p = 1 mod 4` simplifications.

use super::UnimodularMatrix;
use crate::arith::{isqrt, is_prime};
use crate::error::{Error, Result};

fn check_split_prime(p: u64, beta: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::InvalidArgument(format!("{p} is not 1 mod 4")));
    }
    if beta == 0 {
        return Err(Error::InvalidArgument("beta must be positive".into()));
    }
    Ok(())
}

fn prime_power(p: u64, beta: u32) -> Result<i128> {
    (p as i128)
        .checked_pow(beta)
        .filter(|&q| q < (1i128 << 62))
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{beta} is too large")))
}

/// `p^beta = x^2 + y^2` with `x` odd, `y` even and `p` dividing neither.
///
/// `beta = 1` is found by search; higher powers multiply by the base
/// representation, choosing whichever of `|x1 xn + y1 yn|`,
/// `|x1 xn - y1 yn|` is prime to `p`.
pub fn two_squares(p: u64, beta: u32) -> Result<(u64, u64)> {
    check_split_prime(p, beta)?;
    prime_power(p, beta)?;
    let (x1, y1) = (1..)
        .step_by(2)
        .take_while(|x| x * x < p)
        .find_map(|x| {
            let y2 = p - x * x;
            let y = isqrt(y2);
            (y * y == y2).then_some((x as i128, y as i128))
        })
        .expect("a prime 1 mod 4 is a sum of two squares");
    let pp = p as i128;
    let (mut x, mut y) = (x1, y1);
    for _ in 1..beta {
        let plus = x1 * x + y1 * y;
        (x, y) = if plus % pp != 0 {
            (plus.abs(), (x * y1 - x1 * y).abs())
        } else {
            ((x1 * x - y1 * y).abs(), (x * y1 + x1 * y).abs())
        };
    }
    Ok((x as u64, y as u64))
}

/// An integral `S` of determinant 1 with
/// `S tS = [[(1 + u^2) / p^beta, u], [u, p^beta]]`, for `u^2 = -1 mod p^beta`.
///
/// With `p^beta = x^2 + y^2` from [`two_squares`], one of
/// `[[(uy + x)/q, (ux - y)/q], [y, x]]` and
/// `[[(uy - x)/q, -(ux + y)/q], [y, -x]]` is integral.
pub fn sts_matrix(p: u64, beta: u32, u: i64) -> Result<UnimodularMatrix> {
    check_split_prime(p, beta)?;
    let q = prime_power(p, beta)?;
    let uu = u as i128;
    if (uu * uu + 1).rem_euclid(q) != 0 {
        return Err(Error::Precondition(format!("{u}^2 is not -1 mod {p}^{beta}")));
    }
    let (x, y) = two_squares(p, beta)?;
    let (x, y) = (x as i128, y as i128);
    let candidates = [
        [uu * y + x, uu * x - y, y, x],
        [uu * y - x, -(uu * x + y), y, -x],
    ];
    let [a, b, c, d] = candidates
        .into_iter()
        .find(|m| m[0] % q == 0 && m[1] % q == 0)
        .expect("one candidate is integral");
    let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::InvalidArgument("entry overflow".into()));
    UnimodularMatrix::new(narrow(a / q)?, narrow(b / q)?, narrow(c)?, narrow(d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::{transform, HalfIntegralForm};

    #[test]
    fn two_squares_examples() {
        assert_eq!(two_squares(5, 1).unwrap(), (1, 2));
        assert_eq!(two_squares(5, 2).unwrap(), (3, 4));
        assert_eq!(two_squares(13, 1).unwrap(), (3, 2));
        assert!(two_squares(7, 1).is_err());
        assert!(two_squares(9, 1).is_err());
        assert!(two_squares(5, 0).is_err());
    }

    #[test]
    fn two_squares_properties() {
        for p in [5u64, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97] {
            for beta in 1..=6u32 {
                let (x, y) = two_squares(p, beta).unwrap();
                assert_eq!(x * x + y * y, p.pow(beta));
                assert!(x % 2 == 1 && y % 2 == 0 && x % p != 0 && y % p != 0 && y > 0);
            }
        }
    }

    fn gram(s: &UnimodularMatrix) -> HalfIntegralForm {
        transform(&HalfIntegralForm::IDENTITY, s)
    }

    #[test]
    fn sts_examples() {
        let s = sts_matrix(5, 1, 2).unwrap();
        assert_eq!(s, UnimodularMatrix::new(1, 0, 2, 1).unwrap());
        assert_eq!(gram(&s), HalfIntegralForm::new(1, 4, 5).unwrap());
        assert_eq!(gram(&sts_matrix(5, 1, 3).unwrap()), HalfIntegralForm::new(2, 6, 5).unwrap());
        assert_eq!(gram(&sts_matrix(13, 1, 5).unwrap()), HalfIntegralForm::new(2, 10, 13).unwrap());
        assert!(sts_matrix(5, 1, 1).is_err());
        assert!(sts_matrix(7, 1, 1).is_err());
    }

    #[test]
    fn sts_every_root() {
        for p in [5u64, 13, 17, 29] {
            for beta in 1..=4u32 {
                let q = p.pow(beta) as i64;
                for u in 0..q {
                    if (u * u + 1) % q != 0 {
                        continue;
                    }
                    let s = sts_matrix(p, beta, u).unwrap();
                    assert_eq!(s.det(), 1);
                    let target = HalfIntegralForm::new((1 + u * u) / q, 2 * u, q).unwrap();
                    assert_eq!(gram(&s), target, "p={p} beta={beta} u={u}");
                }
            }
        }
    }
}
