//! Exact sparse multivariate polynomials over the rationals.

mod order;
mod parse;
mod poly;
mod univariate;

pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use poly::{Axis, AxisOrder, Monomial, Polynomial, Rational, VariableSet};
pub use univariate::UniPoly;

pub(crate) use poly::{rat_frac, rational_to_f64};
#[cfg(test)]
pub(crate) use poly::rat;
