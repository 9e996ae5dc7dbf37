//! Batches of checks run by the verification front end and the acceptance
//! tests. Every batch returns its reports in a fixed order.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{verify_multiplicativity, verify_thm11, ParamValue, Thm11Params, VerificationReport};
use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::fourier::SiegelExpansion;
use crate::hecke::{
    andrianov_coeff, coeff_cor22, coeff_cor23, coeff_cor24, coeff_cor25, coset_completeness, coset_set, HeckeIndex,
};
use crate::quadform::{enumerate_forms, sts_matrix, transform, two_squares, HalfIntegralForm};

/// Size and brute-force completeness of `R(p^beta)` for `p` in `{2, 3, 5}`,
/// `beta` in `{1, 2, 3}`.
pub fn cosets() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for beta in 1..=3u32 {
            let check = coset_completeness(&coset_set(p, beta));
            let params = [("p", p), ("beta", beta.into())];
            out.push(VerificationReport::new(
                "coset set size",
                params,
                int(check.size as i64),
                int(check.expected_size as i64),
            ));
            let defects = check.defects as i64 + i64::from(!check.complete);
            out.push(VerificationReport::new("coset set defects", params, int(defects), int(0)));
        }
    }
    out
}

/// `two_squares` and `sts_matrix` for `p` in `{5, 13, 17, 29}`, `beta <= 4`,
/// and every square root `u` of `-1` mod `p^beta`.
pub fn constructions() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for p in [5u64, 13, 17, 29] {
        for beta in 1..=4u32 {
            let q = p.pow(beta) as i64;
            let (x, y) = two_squares(p, beta)?;
            let (x, y) = (x as i64, y as i64);
            let params = [("p", p as i64), ("beta", beta.into()), ("x", x), ("y", y)];
            out.push(VerificationReport::new("two_squares sum", params, int(x * x + y * y), int(q)));
            let pi = p as i64;
            let violated = [x % 2 == 1, y % 2 == 0, x % pi != 0, y % pi != 0, y > 0]
                .iter()
                .filter(|ok| !**ok)
                .count();
            out.push(VerificationReport::new("two_squares conditions", params, int(violated as i64), int(0)));

            for u in (0..q).filter(|u| (u * u + 1) % q == 0) {
                let s = sts_matrix(p, beta, u)?;
                let gram = transform(&HalfIntegralForm::IDENTITY, &s);
                let target = [(1 + u * u) / q, 2 * u, q];
                let mismatches = [gram.r(), gram.b(), gram.s()]
                    .iter()
                    .zip(target)
                    .filter(|(a, b)| **a != *b)
                    .count()
                    + usize::from(s.det() != 1);
                out.push(VerificationReport::new(
                    "sts_matrix gram",
                    [("p", p as i64), ("beta", beta.into()), ("u", u)],
                    int(mismatches as i64),
                    int(0),
                ));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy)]
enum Corollary {
    C22,
    C23,
    C24,
    C25,
}

/// `count` random tuples comparing each corollary with the general formula
/// on `f`. Tuples whose sources fall outside the truncation are redrawn.
pub fn corollaries(f: &SiegelExpansion, seed: u64, count: usize) -> Result<Vec<VerificationReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut forms: HashMap<u64, Vec<HalfIntegralForm>> = HashMap::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 50 * count + 1000 {
            return Err(Error::Precondition(format!(
                "truncation {} too small to draw {count} corollary instances",
                f.max_trace()
            )));
        }
        let cor = *[Corollary::C22, Corollary::C23, Corollary::C24, Corollary::C25]
            .choose(&mut rng)
            .expect("nonempty");
        let p = *[2u64, 3, 5].choose(&mut rng).expect("nonempty");
        let delta = match cor {
            Corollary::C22 | Corollary::C23 => rng.gen_range(1..=2u32),
            Corollary::C24 => 1,
            Corollary::C25 => 2,
        };
        let idx = HeckeIndex::new(p, delta)?;
        let limit = f.max_trace() / idx.value();

        let (n, name, label) = if let Corollary::C23 = cor {
            let m = rng.gen_range(1..=(limit / 2).max(1) as i64);
            if m % p as i64 == 0 {
                continue;
            }
            (HalfIntegralForm::scalar(m), "coeff_cor23", format!("m={m}"))
        } else {
            let pool = forms.entry(limit).or_insert_with(|| enumerate_forms(limit));
            let n = *pool.choose(&mut rng).expect("zero form is always present");
            if matches!(cor, Corollary::C22) && n.s() % p as i64 == 0 {
                continue;
            }
            let name = match cor {
                Corollary::C22 => "coeff_cor22",
                Corollary::C24 => "coeff_cor24",
                _ => "coeff_cor25",
            };
            (n, name, n.to_string())
        };

        let general = match andrianov_coeff(f, &idx, &n) {
            Ok(v) => v,
            Err(Error::TruncationExceeded { .. }) => continue,
            Err(e) => return Err(e),
        };
        let special: Rational = match cor {
            Corollary::C22 => coeff_cor22(f, p, delta, &n)?,
            Corollary::C23 => coeff_cor23(f, p, delta, n.r())?,
            Corollary::C24 => coeff_cor24(f, p, &n)?,
            Corollary::C25 => coeff_cor25(f, p, &n)?,
        };
        let params: [(&str, ParamValue); 4] = [
            ("weight", f.weight().into()),
            ("p", p.into()),
            ("delta", delta.into()),
            ("N", label.into()),
        ];
        out.push(VerificationReport::new(format!("{name} = andrianov_coeff"), params, special, general));
    }
    Ok(out)
}

const COMPOSED_PAIRS: [((u64, u32), (u64, u32)); 4] = [((2, 1), (3, 1)), ((2, 1), (5, 1)), ((3, 1), (5, 1)), ((2, 1), (3, 2))];

/// The multiplicative relations at every instance the truncation allows,
/// and composed operators on the pairs whose products fit.
pub fn mult(f: &SiegelExpansion) -> Result<Vec<VerificationReport>> {
    let mut out = verify_thm11(f, &Thm11Params::within(f.max_trace()))?;
    let pairs: Vec<(HeckeIndex, HeckeIndex)> = COMPOSED_PAIRS
        .iter()
        .map(|&((p, a), (q, b))| Ok((HeckeIndex::new(p, a)?, HeckeIndex::new(q, b)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(m, n)| 2 * m.value() * n.value() <= f.max_trace())
        .collect();
    out.extend(verify_multiplicativity(f, &pairs)?);
    Ok(out)
}
