use thiserror::Error;

use crate::exact_arith::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("binomial coefficient with negative upper index {0}")]
    NegativeBinomial(i64),

    /// A rational function was evaluated at one of its poles.
    #[error("pole at t = {0}")]
    Pole(Rational),

    /// The denominator did not split over the supplied candidate poles.
    #[error("denominator factor of degree {degree} has no root among the candidate poles")]
    Factorization { degree: usize },

    #[error("partial fraction reconstruction does not match the source function")]
    Reconstruction,

    #[error("derivative order {0} is not supported")]
    DerivativeOrder(u32),

    #[error("tail sum of (t+k)^-{0} diverges")]
    Divergence(u32),

    #[error("zeta weight {0} is outside the basis ζ(2)..ζ(5)")]
    Weight(u32),

    #[error("rational function has a nonzero polynomial part")]
    NonProper,

    /// A pole lies inside the summation range.
    #[error("pole at t = {pole} lies inside the summation range starting at {start}")]
    PoleInRange { pole: Rational, start: i64 },

    #[error("pole shift {0} is not an integer")]
    NonIntegerPole(Rational),

    #[error("{0}")]
    Range(String),

    #[error("{0}")]
    Domain(String),
}
