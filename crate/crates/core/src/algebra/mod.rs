//! Exact arithmetic over the rationals: univariate polynomials in `c` and
//! rank computations for span dimensions.

mod matrix;
mod poly;

pub use matrix::{span_dim, Projection, QMatrix};
pub use poly::{PairedPoly, Poly};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("polynomial syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
