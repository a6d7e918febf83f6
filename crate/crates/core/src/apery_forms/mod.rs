//! The rational functions `R_{n,m}` and `R̃_{n,m}`, the exact linear forms
//! `Z_l` and `Z_r`, and the harmonic-number summand formulas that split them.

mod construct;
mod exact;
mod numeric_check;
mod summands;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use construct::{
    build_r, build_rtilde_term, r_blocks, rtilde_blocks, PochhammerBlock, PochhammerProduct,
};
pub use exact::{
    c1_exact, c2_exact, check_split_left, check_split_right, inner_sum_c, partial_fractions_of,
    w1_exact, w2_exact, zl_exact, zr_exact,
};
pub use numeric_check::{truncated_numeric, Side, TruncatedSum};
pub use summands::{
    audit_point, d_pochhammer_rule, Auditor, generated_f1, generated_g1, oracle_derivative_at,
    summand_f1, summand_f2, summand_g2, summand_g3, AuditOutcome, OracleDerivative, Route,
    SummandKind, SummandValue,
};

/// A cell `(n, m)` with `n ≥ m ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FormParameters {
    n: u32,
    m: u32,
}

impl FormParameters {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if m > n {
            return Err(Error::Range(format!("m = {m} exceeds n = {n}")));
        }
        Ok(FormParameters { n, m })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn as_i64(self) -> (i64, i64) {
        (self.n as i64, self.m as i64)
    }

    /// All cells with `0 ≤ m ≤ n ≤ n_max`, in lexicographic order.
    pub fn grid(n_max: u32) -> impl Iterator<Item = FormParameters> {
        (0..=n_max).flat_map(|n| (0..=n).map(move |m| FormParameters { n, m }))
    }
}

impl fmt::Display for FormParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}
