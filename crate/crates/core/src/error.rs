use thiserror::Error;

use crate::arith::Rational;
use crate::quadform::HalfIntegralForm;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("({r},{b},{s}) is not positive semi-definite")]
    NotPositiveSemiDefinite { r: i64, b: i64, s: i64 },

    #[error("matrix [[{0},{1}],[{2},{3}]] is not unimodular")]
    NotUnimodular(i64, i64, i64, i64),

    /// A single lookup fell outside the stored truncation.
    #[error("coefficient of {form} needs max_trace >= {needed}, expansion has {available}")]
    OutOfTruncation {
        form: HalfIntegralForm,
        needed: u64,
        available: u64,
    },

    /// A formula demanded source coefficients that are not stored.
    #[error("truncation exceeded: {} source coefficient(s) missing (max_trace {available}): {}", missing.len(), fmt_forms(missing))]
    TruncationExceeded {
        missing: Vec<HalfIntegralForm>,
        available: u64,
    },

    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(u32, u32),

    #[error("candidate is not cuspidal: a{form} = {value}")]
    NotCuspidal {
        form: HalfIntegralForm,
        value: Rational,
    },

    #[error("linear system is degenerate: solution space has dimension {0}")]
    DegenerateSystem(usize),

    #[error("expansion is not normalized: a(I) = {0}")]
    NotNormalized(Rational),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no witness with nonzero coefficient")]
    NoNonzeroWitness,

    #[error("inconsistent eigenvalue: {first} at {first_witness} vs {second} at {second_witness}")]
    InconsistentEigenvalue {
        first: Box<Rational>,
        first_witness: HalfIntegralForm,
        second: Box<Rational>,
        second_witness: HalfIntegralForm,
    },

    #[error("malformed expansion file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn fmt_forms(forms: &[HalfIntegralForm]) -> String {
    const SHOWN: usize = 8;
    let mut s = forms
        .iter()
        .take(SHOWN)
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    if forms.len() > SHOWN {
        s.push_str(" ...");
    }
    s
}
