//! Exact and certified-numeric tools for deciding whether `L(1,f)` vanishes
//! for a rational-valued periodic function `f`.
//!
//! The exact route lives in [`okada`] (finite linear conditions on the values
//! of `f`) and [`cyclotomic`] (a product-of-units test in `Q(zeta_q)`).
//! [`numeric`] evaluates `L(1,f)` as a rigorous [`numeric::Ball`].

pub mod arith;
pub mod characters;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod linalg;
pub mod numeric;
pub mod okada;
pub mod par;
pub mod periodic;

pub use error::{Error, Result};
pub use periodic::PeriodicFunction;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
