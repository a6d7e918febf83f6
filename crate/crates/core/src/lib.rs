//! Exact rational approximations to ζ(4).
//!
//! Two families of linear forms in `1` and `ζ(4)` are built from a pair of
//! rational functions `R_{n,m}(t)` and `R̃_{n,m}(t)`:
//!
//! ```text
//!   Z_l(n,m) = -1/3 · Σ_{ν ≥ n-m+1} R'_{n,m}(ν)
//!   Z_r(n,m) =  1/6 · Σ_{ν ≥ 1}     R̃''_{n,m}(ν)
//! ```
//!
//! Both are evaluated exactly via partial fractions and zeta tails, and the
//! modules below check every companion formula (summand representations,
//! recurrences in `m`, closed forms along `m = 0` and `m = 1`) against those
//! exact values.
//!
//! - [`exact_arith`]: rationals, factorials, binomials, Pochhammer symbols,
//!   harmonic numbers.
//! - [`polyrat`]: dense polynomials, factored products, rational functions and
//!   partial fractions.
//! - [`zeta_forms`]: linear forms over `{1, ζ(2), …, ζ(5)}`, tail sums, and
//!   fixed-point numerics.
//! - [`apery_forms`]: the two families and their summand formulas.
//! - [`recurrence_lab`]: the recurrences, closed forms and the binomial-sum
//!   identity.

pub mod apery_forms;
pub mod error;
pub mod exact_arith;
pub mod polyrat;
pub mod recurrence_lab;
pub mod zeta_forms;

pub use error::{Error, Result};
pub use exact_arith::Rational;
pub use zeta_forms::ZetaLinearForm;
