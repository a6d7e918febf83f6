//! Univariate polynomial and rational-function algebra over the rationals.

mod factored;
mod partial_fractions;
mod polynomial;
mod rational_function;

pub use factored::LinearFactorProduct;
pub use partial_fractions::PartialFractions;
pub use polynomial::Polynomial;
pub use rational_function::RationalFunction;
