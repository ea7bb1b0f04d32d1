pub mod cli;
pub mod cocycles;
pub mod error;
pub mod json;
pub mod onedim;
pub mod operators;
pub mod projsym;
pub mod quantize_apps;
pub mod report;
pub mod ring;
pub mod sample;
pub mod suite;
pub mod symbols;

pub use error::{Error, Result};
pub use operators::{DiffOp, VectorField};
pub use ring::{CoeffPoly, MultiIndex, Rational, Scalar};
pub use symbols::{SymbolPoly, Tensor12};
