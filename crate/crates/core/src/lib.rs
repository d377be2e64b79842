//! Stratified Morse numbers of general linear Morsifications `f - λℓ`.
//!
//! The exact count on each stratum comes from the polar curve of `(ℓ, f)`:
//! the curve is pushed into the plane by `(ℓ, f)` and the number of Morse
//! points abutting to the origin is the difference of the two axis orders of
//! its image. A numeric Morsification solver counts the same points directly
//! and serves as an independent cross-check.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod ideal;
pub mod polar;
pub mod oracle;
pub mod pipeline;
pub mod reduction;

pub use error::{Error, Result};
