//! Exact cohomology of symplectic and almost-complex Lie algebras.
//!
//! A Lie algebra is given by structure equations in Salamon notation; every
//! group is computed on left-invariant forms with exact rational arithmetic.
//! The crate reports invariant de Rham, `d^Λ`, symplectic Bott-Chern and
//! Aeppli dimensions, the non-HLC degrees, the Hard Lefschetz verdict,
//! almost-complex pure-type groups `H_J^{(p,q),(q,p)}` and the ranks of maps
//! induced by Lie algebra morphisms.

pub mod acx;
pub mod catalog;
pub mod cec;
pub mod cli;
pub mod forms;
pub mod linalg;
pub mod morphism;
pub mod parser;
pub mod symplectic;

/// Exact scalar used throughout.
pub type Rational = num_rational::BigRational;
