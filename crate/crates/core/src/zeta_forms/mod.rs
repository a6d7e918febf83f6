//! Exact linear forms in zeta values, tail summation of partial fractions,
//! and fixed-point numerics for cross-checks.

mod linear_form;
mod numeric;
mod tail;

pub use linear_form::ZetaLinearForm;
pub use numeric::{eval_numeric, zeta_numeric, FixedPointNumber, GUARD_DIGITS};
pub use tail::{sum_derivative_tail, tail_power_sum};

/// Largest zeta argument carried by [`ZetaLinearForm`].
pub const MAX_WEIGHT: u32 = 5;
