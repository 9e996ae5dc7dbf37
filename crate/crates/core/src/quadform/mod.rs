//! Half-integral positive semi-definite 2x2 matrices and the `GL2(Z)` action.
//!
//! A form is stored as the integer triple `(r, b, s)` standing for
//! `N = [[r, b/2], [b/2, s]]`, so `b = 2 * N_12`. The associated binary
//! quadratic form is `r x^2 + b x y + s y^2`, and `4 det N = 4rs - b^2`.

mod lemmas;
mod reduce;

pub use lemmas::{sts_matrix, two_squares};
pub use reduce::{is_canonical, reduce, reduce_with_transform, ReducedClass};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::isqrt;
use crate::error::{Error, Result};

/// An element `N = [[r, b/2], [b/2, s]]` of the Fourier index set.
///
/// Ordered by `(trace, r, b)`, which is also the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfIntegralForm {
    r: i64,
    b: i64,
    s: i64,
}

impl HalfIntegralForm {
    pub const ZERO: HalfIntegralForm = HalfIntegralForm { r: 0, b: 0, s: 0 };
    pub const IDENTITY: HalfIntegralForm = HalfIntegralForm { r: 1, b: 0, s: 1 };

    /// Validates `r, s >= 0` and `4rs - b^2 >= 0`.
    pub fn new(r: i64, b: i64, s: i64) -> Result<Self> {
        let psd = r >= 0
            && s >= 0
            && (4 * r as i128 * s as i128 - b as i128 * b as i128) >= 0;
        if psd {
            Ok(HalfIntegralForm { r, b, s })
        } else {
            Err(Error::NotPositiveSemiDefinite { r, b, s })
        }
    }

    pub(crate) const fn new_unchecked(r: i64, b: i64, s: i64) -> Self {
        HalfIntegralForm { r, b, s }
    }

    /// `m * I`.
    pub fn scalar(m: i64) -> Self {
        assert!(m >= 0);
        HalfIntegralForm { r: m, b: 0, s: m }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn trace(&self) -> u64 {
        (self.r + self.s) as u64
    }

    /// `4 det N = 4rs - b^2`, the absolute discriminant of the binary form.
    pub fn det4(&self) -> i64 {
        4 * self.r * self.s - self.b * self.b
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.b == 0 && self.s == 0
    }

    pub fn is_definite(&self) -> bool {
        self.det4() > 0
    }

    /// 0, 1 or 2.
    pub fn rank(&self) -> u8 {
        if self.is_zero() {
            0
        } else if self.is_definite() {
            2
        } else {
            1
        }
    }

    /// `m * N`.
    pub fn scale(&self, m: i64) -> Self {
        debug_assert!(m >= 0);
        HalfIntegralForm {
            r: self.r * m,
            b: self.b * m,
            s: self.s * m,
        }
    }

    /// `N / m` when `m` divides `r`, `b` and `s`.
    pub fn divide(&self, m: i64) -> Option<Self> {
        (self.r % m == 0 && self.b % m == 0 && self.s % m == 0).then(|| HalfIntegralForm {
            r: self.r / m,
            b: self.b / m,
            s: self.s / m,
        })
    }

    /// Entrywise sum; the result is again positive semi-definite.
    pub fn add(&self, other: &Self) -> Self {
        HalfIntegralForm {
            r: self.r + other.r,
            b: self.b + other.b,
            s: self.s + other.s,
        }
    }

    /// `U N tU`.
    pub fn transform(&self, u: &UnimodularMatrix) -> Self {
        transform(self, u)
    }
}

impl Ord for HalfIntegralForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.trace(), self.r, self.b).cmp(&(other.trace(), other.r, other.b))
    }
}

impl PartialOrd for HalfIntegralForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HalfIntegralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.b, self.s)
    }
}

/// A 2x2 integer matrix `[[u1, u2], [u3, u4]]` of determinant `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    u1: i64,
    u2: i64,
    u3: i64,
    u4: i64,
}

impl UnimodularMatrix {
    pub const IDENTITY: UnimodularMatrix = UnimodularMatrix { u1: 1, u2: 0, u3: 0, u4: 1 };

    pub fn new(u1: i64, u2: i64, u3: i64, u4: i64) -> Result<Self> {
        let det = u1 * u4 - u2 * u3;
        if det == 1 || det == -1 {
            Ok(UnimodularMatrix { u1, u2, u3, u4 })
        } else {
            Err(Error::NotUnimodular(u1, u2, u3, u4))
        }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.u1, self.u2, self.u3, self.u4]
    }

    pub fn det(&self) -> i64 {
        self.u1 * self.u4 - self.u2 * self.u3
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        UnimodularMatrix {
            u1: self.u1 * rhs.u1 + self.u2 * rhs.u3,
            u2: self.u1 * rhs.u2 + self.u2 * rhs.u4,
            u3: self.u3 * rhs.u1 + self.u4 * rhs.u3,
            u4: self.u3 * rhs.u2 + self.u4 * rhs.u4,
        }
    }

    pub fn first_row(&self) -> (i64, i64) {
        (self.u1, self.u2)
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.u1, self.u2, self.u3, self.u4)
    }
}

/// `U N tU` as a triple `(r_u, b_u, s_u)`:
///
/// * `r_u = r u1^2 + b u1 u2 + s u2^2`
/// * `b_u = 2 r u1 u3 + b (u1 u4 + u2 u3) + 2 s u2 u4`
/// * `s_u = r u3^2 + b u3 u4 + s u4^2`
pub fn transform(n: &HalfIntegralForm, u: &UnimodularMatrix) -> HalfIntegralForm {
    let HalfIntegralForm { r, b, s } = *n;
    let UnimodularMatrix { u1, u2, u3, u4 } = *u;
    HalfIntegralForm {
        r: r * u1 * u1 + b * u1 * u2 + s * u2 * u2,
        b: 2 * r * u1 * u3 + b * (u1 * u4 + u2 * u3) + 2 * s * u2 * u4,
        s: r * u3 * u3 + b * u3 * u4 + s * u4 * u4,
    }
}

/// Every `(r, b, s)` with `r, s >= 0`, `r + s <= max_trace` and
/// `b^2 <= 4rs`, ordered by `(r + s, r, b)`.
pub fn enumerate_forms(max_trace: u64) -> Vec<HalfIntegralForm> {
    let mut out = Vec::new();
    for t in 0..=max_trace as i64 {
        for r in 0..=t {
            let s = t - r;
            let m = isqrt((4 * r * s) as u64) as i64;
            out.extend((-m..=m).map(|b| HalfIntegralForm { r, b, s }));
        }
    }
    out
}

/// The canonical class representatives with trace `<= max_trace`, in
/// enumeration order.
pub fn canonical_forms(max_trace: u64) -> Vec<HalfIntegralForm> {
    let mut out = vec![HalfIntegralForm::ZERO];
    for t in 1..=max_trace as i64 {
        out.push(HalfIntegralForm { r: t, b: 0, s: 0 });
        for r in 1..=t / 2 {
            let s = t - r;
            out.extend((0..=r).map(|b| HalfIntegralForm { r, b, s }));
        }
    }
    out.sort();
    out
}
