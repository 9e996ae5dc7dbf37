use num_integer::Integer;

use super::{transform, HalfIntegralForm, UnimodularMatrix};
use crate::arith::isqrt;

/// A `GL2(Z)` class: its canonical representative and the determinant of the
/// matrix that carried the input there.
///
/// Canonical representatives are `(0,0,0)`, `(e,0,0)` with `e > 0`, or
/// `(r,b,s)` with `0 <= b <= r <= s` and `4rs - b^2 > 0`. Coefficients of a
/// weight `k` form satisfy `a(N) = sign^k * a(canonical)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedClass {
    pub canonical: HalfIntegralForm,
    pub sign: i8,
}

pub fn is_canonical(n: &HalfIntegralForm) -> bool {
    let (r, b, s) = (n.r(), n.b(), n.s());
    match n.rank() {
        0 => true,
        1 => b == 0 && s == 0,
        _ => 0 <= b && b <= r && r <= s,
    }
}

pub fn reduce(n: &HalfIntegralForm) -> ReducedClass {
    reduce_with_transform(n).0
}

/// Reduces `n` and returns the `U` with `U n tU = canonical`,
/// `det U = sign`.
pub fn reduce_with_transform(n: &HalfIntegralForm) -> (ReducedClass, UnimodularMatrix) {
    let (canonical, u) = match n.rank() {
        0 => (*n, UnimodularMatrix::IDENTITY),
        1 => reduce_singular(n),
        _ => reduce_definite(n),
    };
    debug_assert_eq!(transform(n, &u), canonical);
    (
        ReducedClass {
            canonical,
            sign: u.det() as i8,
        },
        u,
    )
}

/// `n = e (alpha x + beta y)^2` with `gcd(alpha, beta) = 1`; a matrix with
/// first row `(x, y)`, `x alpha + y beta = 1`, and second row
/// `(-beta, alpha)` sends it to `(e, 0, 0)`.
fn reduce_singular(n: &HalfIntegralForm) -> (HalfIntegralForm, UnimodularMatrix) {
    let (r, b, s) = (n.r(), n.b(), n.s());
    let e = r.gcd(&s);
    let alpha = isqrt((r / e) as u64) as i64;
    let beta = isqrt((s / e) as u64) as i64 * if b < 0 { -1 } else { 1 };
    debug_assert_eq!(2 * e * alpha * beta, b);
    let g = alpha.extended_gcd(&beta);
    debug_assert_eq!(g.gcd, 1);
    let u = UnimodularMatrix::new(g.x, g.y, -beta, alpha).expect("det is x alpha + y beta = 1");
    (HalfIntegralForm::new_unchecked(e, 0, 0), u)
}

fn reduce_definite(n: &HalfIntegralForm) -> (HalfIntegralForm, UnimodularMatrix) {
    let swap = UnimodularMatrix::new(0, 1, -1, 0).unwrap();
    let mut cur = *n;
    let mut acc = UnimodularMatrix::IDENTITY;
    loop {
        // [[1,0],[t,1]] moves b to b + 2rt in (-r, r].
        let t = (cur.r() - cur.b()).div_euclid(2 * cur.r());
        if t != 0 {
            let step = UnimodularMatrix::new(1, 0, t, 1).unwrap();
            cur = transform(&cur, &step);
            acc = step.mul(&acc);
        }
        if cur.r() > cur.s() {
            cur = transform(&cur, &swap);
            acc = swap.mul(&acc);
        } else {
            break;
        }
    }
    if cur.b() < 0 {
        let flip = UnimodularMatrix::new(1, 0, 0, -1).unwrap();
        cur = transform(&cur, &flip);
        acc = flip.mul(&acc);
    }
    (cur, acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(r: i64, b: i64, s: i64) -> HalfIntegralForm {
        HalfIntegralForm::new(r, b, s).unwrap()
    }

    /// All unimodular matrices with entries in [-bound, bound].
    fn small_matrices(bound: i64) -> Vec<UnimodularMatrix> {
        let mut out = Vec::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    for d in -bound..=bound {
                        if let Ok(u) = UnimodularMatrix::new(a, b, c, d) {
                            out.push(u);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn examples() {
        let zero = reduce(&HalfIntegralForm::ZERO);
        assert_eq!(zero.canonical, HalfIntegralForm::ZERO);
        assert_eq!(zero.sign, 1);
        assert_eq!(reduce(&form(1, 2, 1)).canonical, form(1, 0, 0));
        assert_eq!(reduce(&form(5, 4, 1)).canonical, form(1, 0, 1));
        assert_eq!(reduce(&form(0, 0, 7)).canonical, form(7, 0, 0));
        assert_eq!(reduce(&form(12, -12, 3)).canonical, form(3, 0, 0));
        assert_eq!(reduce(&form(1, 1, 1)).canonical, form(1, 1, 1));
    }

    #[test]
    fn brute_force_equivalence() {
        let mats = small_matrices(10);
        for (n, c) in [(form(1, 2, 1), form(1, 0, 0)), (form(5, 4, 1), form(1, 0, 1))] {
            let (class, u) = reduce_with_transform(&n);
            assert_eq!(class.canonical, c);
            assert_eq!(transform(&n, &u), c);
            assert_eq!(class.sign as i64, u.det());
            assert!(mats.iter().any(|m| transform(&n, m) == c));
        }
    }

    #[test]
    fn canonical_is_minimal_trace_in_class() {
        let mats = small_matrices(3);
        for n in super::super::enumerate_forms(8) {
            let c = reduce(&n).canonical;
            assert!(is_canonical(&c));
            assert!(c.trace() <= n.trace());
            for m in &mats {
                assert!(transform(&c, m).trace() >= c.trace());
            }
        }
    }

    #[test]
    fn canonical_forms_are_pairwise_inequivalent() {
        let mats = small_matrices(4);
        let canon = super::super::canonical_forms(10);
        for c in &canon {
            assert_eq!(reduce(c).canonical, *c);
            for m in &mats {
                let t = transform(c, m);
                if t != *c && t.trace() <= 10 {
                    assert!(!is_canonical(&t) || t == *c, "{c} ~ {t}");
                }
            }
        }
    }

    /// Reduction is invariant along every word of length <= 6 in the
    /// generators T, S and the reflection.
    #[test]
    fn invariant_under_generator_words() {
        let gens = [
            UnimodularMatrix::new(1, 1, 0, 1).unwrap(),
            UnimodularMatrix::new(0, 1, -1, 0).unwrap(),
            UnimodularMatrix::new(1, 0, 0, -1).unwrap(),
        ];
        let mut words = vec![UnimodularMatrix::IDENTITY];
        let mut frontier = words.clone();
        for _ in 0..6 {
            frontier = frontier
                .iter()
                .flat_map(|w| gens.iter().map(move |g| g.mul(w)))
                .collect();
            words.extend(frontier.iter().copied());
        }
        for n in super::super::enumerate_forms(10) {
            let (class, _) = reduce_with_transform(&n);
            for w in &words {
                let moved = transform(&n, w);
                let (c2, u2) = reduce_with_transform(&moved);
                assert_eq!(c2.canonical, class.canonical, "{n} by {w}");
                assert_eq!(transform(&moved, &u2), c2.canonical);
            }
        }
    }
}
