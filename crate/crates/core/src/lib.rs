//! Exact symbolic kernel for formal group algebras and formal affine
//! Demazure/Hecke algebras over small root data.
//!
//! Everything is computed in truncated multivariate power series with
//! coefficients in a field of rational functions over the rationals, so all
//! identity checks are coefficientwise and exact up to a stated truncation
//! degree. There is no floating point anywhere in this crate.
//!
//! The layers, bottom up:
//!
//! * [`scalar`] - exact rational functions in a declared set of parameter
//!   symbols (the coefficient field).
//! * [`series`] - sparse truncated multivariate power series with validity
//!   tracking.
//! * [`fgl`] - one-dimensional commutative formal group laws: construction,
//!   axiom validation, the inverse/kappa/mu invariants, and normalization.
//! * [`rootdata`] - root data, Weyl groups, reduced words, Bruhat order.
//! * [`fga`] - the formal group algebra attached to a root datum and a formal
//!   group law, with the Demazure and Hecke-type operators acting on it.
//! * [`hecke`] - the twisted (localized) algebra, Demazure and Hecke
//!   elements, word-basis expansion, braid defects.
//! * [`verify`] - named statement checkers producing structured verdicts.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod fga;
pub mod fgl;
pub mod hecke;
pub mod rootdata;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::Error;
pub use scalar::{ParamSet, Scalar};
pub use series::TruncSeries;
