//! Exact symbolic calculus for Poisson quasi-Nijenhuis structures and
//! generalized complex structures on coordinate charts of `R^n` with
//! polynomial coefficients.
//!
//! Every identity is checked as a polynomial identity with rational
//! coefficients, so "is zero" is decided exactly.
//!
//! Coordinates are zero-based in the API (`x1` is index 0) and one-based in
//! all text output.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exterior;
pub mod gencplx;
pub mod random;
pub mod ratpoly;
pub mod structures;

pub use error::{Error, Result};
pub use ratpoly::{Polynomial, Rational};
