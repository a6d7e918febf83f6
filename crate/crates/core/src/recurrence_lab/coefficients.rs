use serde::{Deserialize, Serialize};

use crate::apery_forms::FormParameters;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::zeta_forms::ZetaLinearForm;

/// Values of the three coefficient polynomials of the `m`-recurrence at a
/// fixed `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceCoefficients {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
}

pub fn rec_coeffs(n: i64, m: i64) -> RecurrenceCoefficients {
    let q = |v: i64| Rational::from(v);
    let (nq, mq) = (q(n), q(m));
    let a0 = q(2 * n - m).pow(5).expect("nonnegative power");
    let p = |c: i64, i: i32, j: i32| q(c) * nq.pow(i).unwrap() * mq.pow(j).unwrap();
    let quartic = p(6, 4, 0) - p(24, 3, 1) + p(22, 2, 2) - p(8, 1, 3) + p(1, 0, 4) - p(24, 3, 0)
        + p(30, 2, 1)
        - p(14, 1, 2)
        + p(2, 0, 3)
        + p(8, 2, 0)
        - p(10, 1, 1)
        + p(2, 0, 2)
        - p(4, 1, 0)
        + p(1, 0, 1);
    let a1 = -(q(4 * n - 2 * m - 1) * quartic);
    let a2 = -(q(2 * n - m - 1).pow(3).unwrap() * q(4 * n - m) * q(m + 2));
    RecurrenceCoefficients { a0, a1, a2 }
}

/// First `(n, m)` with `0 ≤ m < n ≤ bound` where `a2` vanishes, if any.
pub fn a2_zero_scan(bound: i64) -> Option<(i64, i64)> {
    (1..=bound).flat_map(|n| (0..n).map(move |m| (n, m))).find(|&(n, m)| rec_coeffs(n, m).a2.is_zero())
}

/// `a0 Z(n,m) + a1 Z(n,m+1) + a2 Z(n,m+2)`.
pub fn main_recurrence_residual<F>(n: u32, m: u32, mut z: F) -> Result<ZetaLinearForm>
where
    F: FnMut(FormParameters) -> Result<ZetaLinearForm>,
{
    if m + 2 > n {
        return Err(Error::Range(format!("main recurrence needs m ≤ n-2, got (n, m) = ({n}, {m})")));
    }
    let c = rec_coeffs(n as i64, m as i64);
    let z0 = z(FormParameters::new(n, m)?)?;
    let z1 = z(FormParameters::new(n, m + 1)?)?;
    let z2 = z(FormParameters::new(n, m + 2)?)?;
    Ok(z0.scale(&c.a0) + z1.scale(&c.a1) + z2.scale(&c.a2))
}

/// True iff the `m`-recurrence annihilates `Z` at `(n, m)` componentwise.
pub fn check_main_recurrence<F>(n: u32, m: u32, z: F) -> Result<bool>
where
    F: FnMut(FormParameters) -> Result<ZetaLinearForm>,
{
    Ok(main_recurrence_residual(n, m, z)?.is_zero())
}
