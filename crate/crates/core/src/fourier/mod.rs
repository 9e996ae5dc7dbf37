//! Truncated Fourier expansions `F(Z) = sum a(N) exp(2 pi i Tr(NZ))`.
//!
//! An expansion stores one coefficient per canonical `GL2(Z)` class whose
//! representative has trace `<= max_trace`. Any `N` in the index set can be
//! looked up: it is reduced first and the stored value is multiplied by
//! `det(U)^k`. Since the canonical representative has minimal trace in its
//! class, every `N` with `trace(N) <= max_trace` is covered, and many larger
//! ones too.

mod cusp;
mod eisenstein;
mod index;
mod io;
mod product;

pub use cusp::{cusp_form_10, cusp_form_12};
pub use eisenstein::{eisenstein, eisenstein_coefficient};
pub use io::{from_json_str, read_expansion, to_json_string, write_expansion, FORMAT_VERSION};
pub use product::{multiply, multiply_with};

pub(crate) use index::FormIndex;

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::quadform::{reduce, HalfIntegralForm};

#[derive(Debug, Clone)]
pub struct SiegelExpansion {
    weight: u32,
    index: Arc<FormIndex>,
    coeffs: Vec<Rational>,
}

impl PartialEq for SiegelExpansion {
    fn eq(&self, other: &Self) -> bool {
        self.weight == other.weight
            && self.max_trace() == other.max_trace()
            && self.coeffs == other.coeffs
    }
}

impl Eq for SiegelExpansion {}

impl SiegelExpansion {
    /// Builds an expansion from its values on canonical representatives,
    /// given in [`crate::quadform::canonical_forms`] order.
    pub fn from_class_values(weight: u32, max_trace: u64, coeffs: Vec<Rational>) -> Result<Self> {
        let index = FormIndex::get(max_trace);
        if coeffs.len() != index.classes().len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for max_trace {max_trace}, got {}",
                index.classes().len(),
                coeffs.len()
            )));
        }
        Ok(SiegelExpansion {
            weight,
            index,
            coeffs,
        })
    }

    /// Evaluates `f` on every canonical representative.
    pub fn from_fn<F>(weight: u32, max_trace: u64, f: F) -> Self
    where
        F: Fn(&HalfIntegralForm) -> Rational,
    {
        let index = FormIndex::get(max_trace);
        let coeffs = index.classes().iter().map(f).collect();
        SiegelExpansion {
            weight,
            index,
            coeffs,
        }
    }

    pub fn zero(weight: u32, max_trace: u64) -> Self {
        Self::from_fn(weight, max_trace, |_| Rational::zero())
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn max_trace(&self) -> u64 {
        self.index.max_trace()
    }

    /// Canonical representatives in storage order.
    pub fn classes(&self) -> &[HalfIntegralForm] {
        self.index.classes()
    }

    /// Stored values, aligned with [`Self::classes`].
    pub fn class_values(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&HalfIntegralForm, &Rational)> {
        self.index.classes().iter().zip(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `(class position, det(U))` when the class of `n` is stored.
    pub(crate) fn locate(&self, n: &HalfIntegralForm) -> std::result::Result<(usize, i8), u64> {
        if let Some(slot) = self.index.slot(n) {
            return Ok(slot);
        }
        let class = reduce(n);
        match self.index.position(&class.canonical) {
            Some(i) => Ok((i, class.sign)),
            None => Err(class.canonical.trace()),
        }
    }

    /// Canonical trace a lookup of `n` needs, or `None` when it is stored.
    pub fn missing_trace(&self, n: &HalfIntegralForm) -> Option<u64> {
        self.locate(n).err()
    }

    /// `a(N)` for any `N` in the index set.
    pub fn get(&self, n: &HalfIntegralForm) -> Result<Rational> {
        match self.locate(n) {
            Ok((i, sign)) => {
                let v = self.coeffs[i].clone();
                Ok(if sign < 0 && self.weight % 2 == 1 { -v } else { v })
            }
            Err(needed) => Err(Error::OutOfTruncation {
                form: *n,
                needed,
                available: self.max_trace(),
            }),
        }
    }

    /// Like [`Self::get`] for a triple that still needs validation.
    pub fn get_rbs(&self, r: i64, b: i64, s: i64) -> Result<Rational> {
        self.get(&HalfIntegralForm::new(r, b, s)?)
    }

    /// `a(m I)`.
    pub fn get_scalar(&self, m: i64) -> Result<Rational> {
        self.get(&HalfIntegralForm::scalar(m))
    }

    /// Restriction to `max_trace`, which must not exceed the current one.
    pub fn truncate(&self, max_trace: u64) -> Self {
        assert!(max_trace <= self.max_trace(), "cannot extend a truncation");
        if max_trace == self.max_trace() {
            return self.clone();
        }
        let index = FormIndex::get(max_trace);
        let coeffs = self.coeffs[..index.classes().len()].to_vec();
        SiegelExpansion {
            weight: self.weight,
            index,
            coeffs,
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.weight, other.weight));
        }
        let t = self.max_trace().min(other.max_trace());
        let (a, b) = (self.truncate(t), other.truncate(t));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect();
        Ok(SiegelExpansion {
            weight: self.weight,
            index: a.index,
            coeffs,
        })
    }

    /// `F + G` on the common truncation.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x + y)
    }

    /// `F - G` on the common truncation.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x - y)
    }

    /// `c F`.
    pub fn scale(&self, c: &Rational) -> Self {
        SiegelExpansion {
            weight: self.weight,
            index: self.index.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Rescales so that `a(I) = 1`.
    pub fn normalize_at_identity(&self) -> Result<Self> {
        let a = self.get(&HalfIntegralForm::IDENTITY)?;
        if a.is_zero() {
            return Err(Error::Precondition("a(I) = 0, cannot normalize".into()));
        }
        Ok(self.scale(&(Rational::one() / a)))
    }
}
