//! Gröbner bases of simplicial toric ideals in their natural coordinates,
//! together with the semigroup invariants that bound their degrees.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: points of the dilated simplex, configurations, lattice
//!   index and multiplicity;
//! - [`semigroup`]: graded pieces `nA`, reduction number, faces, normality;
//! - [`gb`]: binomial arithmetic, term orders, Buchberger, Hilbert series;
//! - [`toric`]: the elimination pipeline and the bound report;
//! - [`verifier`]: configuration files, sweeps up to symmetry and the
//!   reproduction presets behind the `toricgb` binary.

pub mod error;
pub mod gb;
pub mod lattice;
pub mod semigroup;
pub mod toric;
pub mod verifier;

pub use error::{Error, Result};
pub use lattice::{Configuration, LatticeVector};
