//! Exact arithmetic: rationals, Q[λ], and sparse polynomials over Q[λ].

pub mod coeff_poly;
pub mod linalg;
pub mod multi_index;
pub mod parse;
pub mod rational;
pub mod scalar;

pub use coeff_poly::CoeffPoly;
pub use linalg::{gauss_solve, null_space, rank, LinearSolution};
pub use multi_index::MultiIndex;
pub use parse::{parse_coeff, parse_scalar};
pub use rational::{binomial, binomial_int, factorial, int, parse_rational, rat, Rational};
pub use scalar::{binom_poly, interpolate, Scalar};
pub mod fiber;
