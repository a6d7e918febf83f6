use std::collections::BTreeMap;

use crate::apery_forms::FormParameters;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::zeta_forms::ZetaLinearForm;

use super::closed_forms::{closed_form_m0, closed_form_m1_normalized, closed_form_rows};
use super::coefficients::rec_coeffs;

/// Fills `Z(n, 2..=n)` from the seeds `Z(n,0)`, `Z(n,1)` by solving the
/// `m`-recurrence for its last term.
fn fill_row(n: u32, z0: ZetaLinearForm, z1: Option<ZetaLinearForm>) -> Vec<ZetaLinearForm> {
    let mut row = vec![z0];
    let Some(z1) = z1 else { return row };
    row.push(z1);
    for m in 0..n.saturating_sub(1) {
        let c = rec_coeffs(n as i64, m as i64);
        assert!(!c.a2.is_zero(), "a2 vanishes at ({n}, {m})");
        let k = m as usize;
        let next = (row[k].scale(&c.a0) + row[k + 1].scale(&c.a1)).scale(&-c.a2.recip().unwrap());
        row.push(next);
    }
    row
}

/// Row `n` of the recurrence-filled table, `[Z(n,0), …, Z(n,n)]`.
pub fn linear_time_row(n: u32) -> Result<Vec<ZetaLinearForm>> {
    let z1 = if n == 0 { None } else { Some(closed_form_m1_normalized(n as u64)?) };
    Ok(fill_row(n, closed_form_m0(n as u64), z1))
}

/// `Z(n,m)` for `0 ≤ m ≤ n ≤ n_max` from the closed forms at `m = 0, 1`
/// and the `m`-recurrence. The `m = 1` seed is [`closed_form_m1_normalized`].
///
/// [`closed_form_m1_normalized`]: super::closed_form_m1_normalized
pub fn linear_time_evaluate(n_max: u32) -> Result<BTreeMap<FormParameters, ZetaLinearForm>> {
    if n_max < 2 {
        return Err(Error::Range(format!("linear-time table needs n_max ≥ 2, got {n_max}")));
    }
    let mut table = BTreeMap::new();
    for (n, (z0, z1)) in closed_form_rows(n_max as u64).into_iter().enumerate() {
        let n = n as u32;
        let z1 = z1.map(|z| z.scale(&Rational::frac(-1, 3)));
        for (m, z) in fill_row(n, z0, z1).into_iter().enumerate() {
            table.insert(FormParameters::new(n, m as u32)?, z);
        }
    }
    Ok(table)
}
