use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{int, is_fundamental, kronecker_symbol, Rational};
use crate::error::{Error, Result};

fn table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); n + 1];
    for k in 1..n {
        row[k] = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
    }
    row
}

/// The Bernoulli number `B_n` with `B_1 = -1/2`.
///
/// Computed from `sum_{k=0}^{n} C(n+1, k) B_k = 0` and memoised process-wide.
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    let mut tab = table().lock().unwrap_or_else(|e| e.into_inner());
    while tab.len() <= n {
        let m = tab.len();
        let row = binomial_row(m + 1);
        let s = tab
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| acc + Rational::from_integer(row[k].clone()) * b);
        let next = -s / Rational::from_integer(BigInt::from(m + 1));
        tab.push(next);
    }
    tab[n].clone()
}

/// The Bernoulli polynomial `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    let row = binomial_row(n as usize);
    // Horner in x over the coefficients C(n,k) B_k, k = 0..n.
    (0..=n as usize).fold(Rational::zero(), |acc, k| {
        acc * x + Rational::from_integer(row[k].clone()) * bernoulli(k as u32)
    })
}

/// `zeta(1 - n)` for `n >= 2`, equal to `-B_n / n`.
pub fn zeta_at_one_minus(n: u32) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta(1 - n) needs n >= 2, got n = {n}"
        )));
    }
    Ok(-bernoulli(n) / int(n as i64))
}

/// Generalised Bernoulli number `B_{n, chi_D}` for the Kronecker character of
/// a fundamental discriminant `D`:
/// `f^(n-1) * sum_{a=1}^{f} chi_D(a) B_n(a / f)` with `f = |D|`.
///
/// Expanding `B_n(x)` turns this into
/// `sum_k C(n, k) B_k f^(k-1) sum_a chi_D(a) a^(n-k)`, which only needs
/// integer power sums. Results are memoised process-wide.
///
/// For `D = 1` this returns `B_n` itself (so `B_{1,chi_1} = -1/2`).
pub fn generalized_bernoulli(n: u32, d: i64) -> Result<Rational> {
    if d == 1 {
        return Ok(bernoulli(n));
    }
    if !is_fundamental(d) {
        return Err(Error::InvalidArgument(format!(
            "{d} is not a fundamental discriminant"
        )));
    }
    static MEMO: OnceLock<Mutex<HashMap<(u32, i64), Rational>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(&(n, d)) {
        return Ok(v.clone());
    }
    let f = d.unsigned_abs();
    // power_sums[j] = sum_{a=1}^{f} chi_D(a) a^j
    let mut power_sums = vec![BigInt::zero(); n as usize + 1];
    for a in 1..=f {
        let chi = kronecker_symbol(d, a as i64);
        if chi == 0 {
            continue;
        }
        let base = BigInt::from(a);
        let mut pw = BigInt::one();
        for slot in power_sums.iter_mut() {
            if chi > 0 {
                *slot += &pw;
            } else {
                *slot -= &pw;
            }
            pw *= &base;
        }
    }
    let row = binomial_row(n as usize);
    let fr = Rational::from_integer(BigInt::from(f));
    let mut f_pow = Rational::one() / &fr; // f^(k-1) at k = 0
    let mut total = Rational::zero();
    for k in 0..=n as usize {
        let bk = bernoulli(k as u32);
        if !bk.is_zero() {
            let c = Rational::from_integer(&row[k] * &power_sums[n as usize - k]);
            total += c * bk * &f_pow;
        }
        f_pow *= &fr;
    }
    memo.lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert((n, d), total.clone());
    Ok(total)
}

/// `L(1 - r, chi_D) = -B_{r, chi_D} / r` for `r >= 1`.
pub fn dirichlet_l_neg(r: u32, d: i64) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidArgument("L(1 - r, chi) needs r >= 1".into()));
    }
    Ok(-generalized_bernoulli(r, d)? / int(r as i64))
}
