//! Exact symbolic toolkit for highly connected rigid minimal Sullivan algebras.
//!
//! The crate builds the rigid family `M_k`, the graph-indexed family `M_n(G)`,
//! verifies the degree and divisibility lemmas that drive their rigidity, and
//! computes the monoid of homotopy classes of self-maps by a staged symbolic
//! coefficient analysis.
//!
//! Layout:
//!  - [`cdga`]: free graded-commutative algebras over the rationals with a
//!    differential, plus per-degree exact linear algebra.
//!  - [`arithmetic`]: degree schemes, divisibility tables and the linear
//!    diophantine lemma.
//!  - [`graphs`]: simple graphs, automorphism groups, finite groups and a
//!    Cayley-graph gadget construction.
//!  - [`models`]: the algebras themselves, ellipticity certificates, formal
//!    dimensions, constructive coboundaries and the odd-dimensional extension.
//!  - [`endo`]: the self-map solver and the resulting monoid reports.
//!  - [`run`]: batch orchestration used by the `sullivan` binary.

pub mod arithmetic;
pub mod cdga;
pub mod endo;
pub mod error;
pub mod graphs;
pub mod models;
pub mod run;

pub use error::{Error, Result};

/// Exact rational numbers with arbitrary precision.
pub type Q = num_rational::BigRational;

/// Builds a rational from a pair of machine integers.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}

/// Builds an integral rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}
