/// The Kronecker symbol `(d / n)`, extending the Jacobi symbol to all
/// integers `n`. Completely multiplicative in `n`.
pub fn kronecker_symbol(d: i64, n: i64) -> i32 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut a = d as i128;
    let mut b = n as i128;
    let mut result = 1i32;
    if b < 0 {
        b = -b;
        if a < 0 {
            result = -result;
        }
    }
    // (a / 2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    let twos = b.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        b >>= twos;
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol (a / b) with b odd and positive.
    a = a.rem_euclid(b);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(b % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut b);
        if a % 4 == 3 && b % 4 == 3 {
            result = -result;
        }
        a %= b;
    }
    if b == 1 {
        result
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{is_fundamental, is_prime};

    #[test]
    fn examples() {
        assert_eq!(kronecker_symbol(-4, 3), -1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        assert_eq!(kronecker_symbol(-3, 2), -1);
        assert_eq!(kronecker_symbol(-4, 1), 1);
        assert_eq!(kronecker_symbol(5, 0), 0);
        assert_eq!(kronecker_symbol(-1, 0), 1);
        assert_eq!(kronecker_symbol(-3, -1), -1);
        assert_eq!(kronecker_symbol(5, -1), 1);
    }

    /// Euler's criterion for odd primes.
    #[test]
    fn matches_euler_criterion() {
        for p in (3..200i64).filter(|&p| is_prime(p as u64)) {
            for a in -60..60i64 {
                let r = a.rem_euclid(p);
                let e = if r == 0 {
                    0
                } else {
                    let mut acc = 1i64;
                    for _ in 0..(p - 1) / 2 {
                        acc = acc * r % p;
                    }
                    if acc == 1 { 1 } else { -1 }
                };
                assert_eq!(kronecker_symbol(a, p), e, "({a}/{p})");
            }
        }
    }

    #[test]
    fn chi_minus_four() {
        for n in 1..200i64 {
            let expect = match n % 4 {
                1 => 1,
                3 => -1,
                _ => 0,
            };
            assert_eq!(kronecker_symbol(-4, n), expect);
        }
    }

    #[test]
    fn multiplicative_and_periodic_for_fundamental() {
        for d in (-60..60i64).filter(|&d| d != 1 && is_fundamental(d)) {
            let m = d.abs();
            for a in -30..30i64 {
                for b in -30..30i64 {
                    assert_eq!(
                        kronecker_symbol(d, a * b),
                        kronecker_symbol(d, a) * kronecker_symbol(d, b),
                        "d={d} a={a} b={b}"
                    );
                }
                if a > 0 {
                    assert_eq!(kronecker_symbol(d, a), kronecker_symbol(d, a + m), "d={d} a={a}");
                }
            }
        }
    }
}
