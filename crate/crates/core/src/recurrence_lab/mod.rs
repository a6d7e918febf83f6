//! Recurrences in `m` and `n`, closed forms along `m = 0` and `m = 1`, and the
//! binomial-sum identity, all checked componentwise against exact forms.

mod binomial;
mod boundary;
mod closed_forms;
mod coefficients;
mod grid;
mod linear_time;
mod matrix;

pub use binomial::{binomial_sum_identity, binomial_sum_sides};
pub use boundary::{
    boundary_left_lhs, boundary_left_rhs, boundary_right_coeff_scan, boundary_right_coeffs,
    boundary_right_residual, check_boundary_rec_m0_left, check_boundary_rec_m0_left_with,
    check_boundary_rec_m0_right, check_boundary_rec_m0_right_with,
};
pub use closed_forms::{
    closed_form_m0, closed_form_m1, closed_form_m1_normalized, closed_form_rows, nested_u, nested_u_table, NestedSumU,
};
pub use coefficients::{
    a2_zero_scan, check_main_recurrence, main_recurrence_residual, rec_coeffs,
    RecurrenceCoefficients,
};
pub use grid::FormGrid;
pub use linear_time::{linear_time_evaluate, linear_time_row};
pub use matrix::{
    run_suite, suite_cells, CheckKind, CheckRecord, Suite, VerificationMatrix, A2_SCAN_BOUND,
};
