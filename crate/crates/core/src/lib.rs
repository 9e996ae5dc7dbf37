//! Exact computations with degree 2 Siegel modular forms on the full modular
//! group.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: exact rationals, Bernoulli numbers, Kronecker symbols,
//!   Dirichlet L-values at non-positive integers and Cohen's class number
//!   function `H(r, N)`.
//! * [`quadform`]: the index set of Fourier expansions (half-integral positive
//!   semi-definite 2x2 matrices), the `GL2(Z)` action and canonical reduction,
//!   plus the two-squares and `S * tS` constructions.
//! * [`fourier`]: truncated expansions, Siegel Eisenstein series, the graded
//!   ring product and the weight 10 / 12 cusp forms, with a JSON file format.
//! * [`hecke`]: coset representatives `R(p^beta)`, Andrianov's coefficient
//!   formula for `T(p^delta)` and its specialised reductions.
//! * [`eigen`]: eigenvalue extraction, closed-form eigenvalues and the
//!   verification suites for the multiplicative relations.
//!
//! All arithmetic is exact. Data-parallel loops (the ring product, operator
//! application, Eisenstein coefficients) run on rayon when the `parallel`
//! feature is enabled and fall back to plain iterators otherwise; results are
//! identical either way.

pub mod arith;
pub mod eigen;
mod error;
pub mod fourier;
pub mod hecke;
pub mod par;
pub mod quadform;

pub use arith::Rational;
pub use error::{Error, Result};
pub use fourier::SiegelExpansion;
pub use hecke::HeckeIndex;
pub use quadform::{HalfIntegralForm, UnimodularMatrix};
