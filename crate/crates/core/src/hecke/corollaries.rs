use num_traits::Zero;

use super::{divisibility_indicator, p_pow, HeckeIndex};
use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::fourier::SiegelExpansion;
use crate::quadform::HalfIntegralForm;

/// Weighted list of coefficients, evaluated only once every index is present.
struct Terms<'a> {
    f: &'a SiegelExpansion,
    items: Vec<(Rational, HalfIntegralForm)>,
}

impl<'a> Terms<'a> {
    fn new(f: &'a SiegelExpansion) -> Self {
        Terms { f, items: Vec::new() }
    }

    fn push(&mut self, weight: Rational, r: i64, b: i64, s: i64) {
        let n = HalfIntegralForm::new(r, b, s)
            .unwrap_or_else(|e| panic!("internal error: corollary index ({r},{b},{s}) invalid: {e}"));
        self.items.push((weight, n));
    }

    fn eval(self) -> Result<Rational> {
        let mut missing: Vec<HalfIntegralForm> = self
            .items
            .iter()
            .filter(|(_, n)| self.f.missing_trace(n).is_some())
            .map(|(_, n)| *n)
            .collect();
        if !missing.is_empty() {
            missing.sort();
            missing.dedup();
            return Err(Error::TruncationExceeded {
                missing,
                available: self.f.max_trace(),
            });
        }
        let mut acc = Rational::zero();
        for (w, n) in &self.items {
            acc += w * self.f.get(n)?;
        }
        Ok(acc)
    }
}


/// `a(p^delta; N)` for `s` prime to `p`.
pub fn coeff_cor22(f: &SiegelExpansion, p: u64, delta: u32, n: &HalfIntegralForm) -> Result<Rational> {
    let idx = HeckeIndex::new(p, delta)?;
    let pi = p as i64;
    let (r, b, s) = (n.r(), n.b(), n.s());
    if s % pi == 0 {
        return Err(Error::Precondition(format!("s = {s} is divisible by p = {p}")));
    }
    let k = f.weight() as i64;
    let mut t = Terms::new(f);
    t.push(int(1), pi.pow(delta) * r, pi.pow(delta) * b, pi.pow(delta) * s);
    for beta in 1..=idx.delta() {
        let q = pi.pow(beta);
        let scale = pi.pow(delta - beta);
        let w = p_pow(p, (k - 2) * beta as i64);
        for u in 0..q {
            let ru = r + b * u + s * u * u;
            if ru % q == 0 {
                t.push(w.clone(), scale * (ru / q), scale * (b + 2 * s * u), scale * s * q);
            }
        }
    }
    t.eval()
}

/// `a(p^delta; mI)` for `m` prime to `p`.
pub fn coeff_cor23(f: &SiegelExpansion, p: u64, delta: u32, m: i64) -> Result<Rational> {
    let idx = HeckeIndex::new(p, delta)?;
    let pi = p as i64;
    if m <= 0 || m % pi == 0 {
        return Err(Error::Precondition(format!("m = {m} must be positive and prime to p = {p}")));
    }
    let k = f.weight() as i64;
    let mut t = Terms::new(f);
    let diag = |t: &mut Terms, w: Rational, e: u32| {
        let c = m * pi.pow(e);
        t.push(w, c, 0, c);
    };
    diag(&mut t, int(1), delta);
    match p % 4 {
        1 => {
            for beta in 1..=idx.delta() {
                diag(&mut t, int(2) * p_pow(p, (k - 2) * beta as i64), delta - beta);
            }
        }
        2 => diag(&mut t, p_pow(p, k - 2), delta - 1),
        _ => {}
    }
    t.eval()
}

/// `a(p; N)`.
pub fn coeff_cor24(f: &SiegelExpansion, p: u64, n: &HalfIntegralForm) -> Result<Rational> {
    HeckeIndex::new(p, 1)?;
    let pi = p as i64;
    let (r, b, s) = (n.r(), n.b(), n.s());
    let k = f.weight() as i64;
    let mut t = Terms::new(f);
    t.push(int(1), pi * r, pi * b, pi * s);
    let w1 = p_pow(p, k - 2);
    for u in 0..pi {
        let ru = r + b * u + s * u * u;
        if ru % pi == 0 {
            t.push(w1.clone(), ru / pi, b + 2 * s * u, s * pi);
        }
    }
    if divisibility_indicator(pi, &[s]) == 1 {
        t.push(w1, r * pi, b, s / pi);
    }
    if divisibility_indicator(pi, &[r, b, s]) == 1 {
        t.push(p_pow(p, 2 * k - 3), r / pi, b / pi, s / pi);
    }
    t.eval()
}

/// `a(p^2; N)`.
pub fn coeff_cor25(f: &SiegelExpansion, p: u64, n: &HalfIntegralForm) -> Result<Rational> {
    HeckeIndex::new(p, 2)?;
    let pi = p as i64;
    let p2 = pi * pi;
    let (r, b, s) = (n.r(), n.b(), n.s());
    let k = f.weight() as i64;
    let mut t = Terms::new(f);

    t.push(int(1), p2 * r, p2 * b, p2 * s);
    if divisibility_indicator(pi, &[r, b, s]) == 1 {
        t.push(p_pow(p, 2 * k - 3), r, b, s);
    }
    if divisibility_indicator(p2, &[r, b, s]) == 1 {
        t.push(p_pow(p, 4 * k - 6), r / p2, b / p2, s / p2);
    }

    let w = p_pow(p, k - 2);
    for u in 0..pi {
        let ru = r + b * u + s * u * u;
        if ru % pi == 0 {
            t.push(w.clone(), ru, pi * (b + 2 * s * u), p2 * s);
        }
    }
    if divisibility_indicator(pi, &[s]) == 1 {
        t.push(w, p2 * r, pi * b, s);
    }

    let w = p_pow(p, 2 * k - 4);
    for u in 0..p2 {
        let ru = r + b * u + s * u * u;
        if ru % p2 == 0 {
            t.push(w.clone(), ru / p2, b + 2 * s * u, s * p2);
        }
    }
    for u in 0..pi {
        let c = b * u * pi + s;
        if c % p2 == 0 {
            t.push(w.clone(), r * p2, 2 * r * u * pi + b, r * u * u + c / p2);
        }
    }

    let w = p_pow(p, 3 * k - 5);
    if divisibility_indicator(pi, &[b, s]) == 1 {
        for u in 0..pi {
            let ru = r + b * u + s * u * u;
            if ru % p2 == 0 {
                t.push(w.clone(), ru / p2, (b + 2 * s * u) / pi, s);
            }
        }
    }
    if divisibility_indicator(pi, &[r, b]) == 1 && divisibility_indicator(p2, &[s]) == 1 {
        t.push(w, r, b / pi, s / p2);
    }
    t.eval()
}
