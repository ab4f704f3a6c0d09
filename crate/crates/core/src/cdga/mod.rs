//! Free graded-commutative algebras over ℚ with a differential.
//!
//! Generators are kept in one canonical order, sorted by `(degree, name)`.
//! A [`Monomial`] is an exponent vector in that order; reordering signs
//! are absorbed into the coefficient of the owning term, so equality of
//! polynomials is structural.

mod algebra;
pub mod linalg;
mod monomial;
mod parse;
mod poly;
mod serial;
mod space;

pub use algebra::Cdga;
pub use monomial::Monomial;
pub use poly::{Coefficient, GradedPoly, Polynomial};
pub use serial::{CdgaJson, GeneratorJson, TermJson};
pub use space::{Generator, GeneratorSpace};
pub(crate) use space::is_name_char;
