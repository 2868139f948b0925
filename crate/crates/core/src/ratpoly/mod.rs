//! Exact arithmetic kernel: rationals and sparse multivariate polynomials.

mod parse;
mod polynomial;

pub use polynomial::{int, rat, Monomial, Polynomial, Rational};
