//! Exact symbolic computation in the infinitesimal Hecke algebra `H_z` of `sl2`.
//!
//! `H_z` is generated by the `sl2` triple `e, f, h` and the two-dimensional
//! representation `V = span{x, y}`, subject to the usual `sl2` and module
//! relations plus the deformed relation `[x, y] = z`, where `z` is a polynomial
//! in the Casimir multiple `Δ = h² + 4ef − 2h`.
//!
//! Elements are kept in the PBW normal form `f^a h^b e^c y^d x^m` with exact
//! rational coefficients. On top of the arithmetic the crate builds the
//! generator `t_z` of the center, the `f_n`/`g_n` recursions describing
//! `[Δ^n, x]`, maximal-vector bookkeeping, derivation checks, and a
//! brute-force linear-algebra oracle over truncated monomial bases.

pub mod algebra;
pub mod casimir;
pub mod center;
pub mod delta;
pub mod derivations;
pub mod error;
pub mod expr;
pub mod generator;
pub mod linalg;
pub mod monomial;
pub mod ncpoly;
pub mod oracle;
pub mod render;
pub mod structure;

pub use algebra::{AlgebraParams, HeckeAlgebra};
pub use delta::DeltaPoly;
pub use error::{AlgebraError, CenterError, DerivationError, OracleError, ParseError, StructureError};
pub use generator::Generator;
pub use monomial::Monomial;
pub use ncpoly::NcPoly;

/// Exact coefficient type used throughout the crate.
pub type Rational = num_rational::BigRational;
