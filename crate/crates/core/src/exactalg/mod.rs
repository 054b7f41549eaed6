//! Exact field arithmetic and dense linear algebra over ℚ and number fields.

pub mod field;
pub mod matrix;
pub mod modular;

pub use field::{format_rational, parse_rational, rat, Field, Rational, RationalField};
pub use matrix::{kernel_basis, rank, Matrix};
