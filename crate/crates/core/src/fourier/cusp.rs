//! The normalized cusp eigenforms of weights 10 and 12, pinned down by
//! linear conditions on Eisenstein products.

use num_traits::{One, Zero};

use super::{eisenstein, multiply, SiegelExpansion};
use crate::arith::Rational;
use crate::error::{Error, Result};

fn check_truncation(max_trace: u64) -> Result<()> {
    if max_trace < 2 {
        return Err(Error::InvalidArgument(format!(
            "cusp form construction needs max_trace >= 2, got {max_trace}"
        )));
    }
    Ok(())
}

/// Every rank <= 1 class must have coefficient zero.
fn check_cuspidal(f: &SiegelExpansion) -> Result<()> {
    for (n, v) in f.coefficients() {
        if !n.is_definite() && !v.is_zero() {
            return Err(Error::NotCuspidal {
                form: *n,
                value: v.clone(),
            });
        }
    }
    Ok(())
}

/// `E4 E6 - E10`, normalized with `a(I) = 1`.
pub fn cusp_form_10(max_trace: u64) -> Result<SiegelExpansion> {
    check_truncation(max_trace)?;
    let e4 = eisenstein(4, max_trace)?;
    let e6 = eisenstein(6, max_trace)?;
    let e10 = eisenstein(10, max_trace)?;
    let c = multiply(&e4, &e6).sub(&e10)?;
    check_cuspidal(&c)?;
    c.normalize_at_identity()
}

/// The combination of `E4^3`, `E6^2`, `E12` with vanishing `a(0)` and
/// `a(diag(1, 0))`, normalized with `a(I) = 1`.
pub fn cusp_form_12(max_trace: u64) -> Result<SiegelExpansion> {
    check_truncation(max_trace)?;
    let e4 = eisenstein(4, max_trace)?;
    let e6 = eisenstein(6, max_trace)?;
    let basis = [
        multiply(&multiply(&e4, &e4), &e4),
        multiply(&e6, &e6),
        eisenstein(12, max_trace)?,
    ];
    let rows: Vec<Vec<Rational>> = [(0, 0, 0), (1, 0, 0)]
        .iter()
        .map(|&(r, b, s)| basis.iter().map(|f| f.get_rbs(r, b, s)).collect())
        .collect::<Result<_>>()?;
    let kernel = nullspace(rows, basis.len());
    if kernel.len() != 1 {
        return Err(Error::DegenerateSystem(kernel.len()));
    }
    let combo = basis
        .iter()
        .zip(&kernel[0])
        .map(|(f, c)| f.scale(c))
        .try_fold(SiegelExpansion::zero(12, max_trace), |acc, f| acc.add(&f))?;
    check_cuspidal(&combo)?;
    combo.normalize_at_identity()
}

/// A basis of `{x : rows * x = 0}` by Gauss-Jordan elimination.
fn nullspace(mut rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Rational::one() / &rows[rank][col];
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            v
        })
        .collect()
}
