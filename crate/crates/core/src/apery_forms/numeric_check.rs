use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact_arith::Rational;
use crate::zeta_forms::FixedPointNumber;

use super::construct::{build_r, build_rtilde_term};
use super::summands::OracleDerivative;
use super::FormParameters;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Result of summing oracle derivative values directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSum {
    pub side: Side,
    pub value: Rational,
    pub terms: u64,
    pub nodes: usize,
    /// Difference between the last two extrapolants.
    pub last_difference: Rational,
    pub converged: bool,
}

const BLOCK: u64 = 64;
const MAX_NODES: usize = 48;
const MIN_NODES: usize = 6;
const WORKING_GUARD: u32 = 30;

/// Sums `-1/3 Σ R'(ν)` (left) or `1/6 Σ R̃''(ν)` (right) numerically.
///
/// Partial sums are taken at `N_k = k · 64` terms and extrapolated to
/// `N → ∞` by a Neville table in `1/N`; the loop stops once two successive
/// diagonal entries agree to `10^(-digits-2)` relative to the estimate.
pub fn truncated_numeric(p: FormParameters, side: Side, digits: u32) -> Result<TruncatedSum> {
    let (n, m) = p.as_i64();
    let zero = Rational::zero();
    let (oracles, start, weight) = match side {
        Side::Left => (vec![OracleDerivative::new(&build_r(p), &zero, 1)?], n - m + 1, Rational::frac(-1, 3)),
        Side::Right => {
            let mut v = Vec::with_capacity(p.n() as usize + 1);
            for j in 0..=p.n() {
                v.push(OracleDerivative::new(&build_rtilde_term(p, j)?, &zero, 2)?);
            }
            (v, 1, Rational::frac(1, 6))
        }
    };

    let scale = digits + WORKING_GUARD;
    let unit = BigInt::from(10u32).pow(scale);
    let mut partial = BigInt::zero();
    let mut nu = start;
    let mut counts: Vec<BigInt> = Vec::new();
    // Neville table, one row per node; row[l] extrapolates over l+1 nodes.
    let mut prev_row: Vec<BigInt> = Vec::new();
    let mut estimates: Vec<BigInt> = Vec::new();
    let mut last_difference = BigInt::zero();
    let mut converged = false;

    while counts.len() < MAX_NODES {
        for _ in 0..BLOCK {
            let mut term = Rational::zero();
            for o in &oracles {
                term += o.at(nu)?;
            }
            partial += FixedPointNumber::from_rational(&(&term * &weight), scale).mantissa();
            nu += 1;
        }
        let count = BigInt::from((counts.len() as u64 + 1) * BLOCK);
        let mut row = vec![partial.clone()];
        for l in 1..=counts.len() {
            let earlier = &counts[counts.len() - l];
            let diff = &row[l - 1] - &prev_row[l - 1];
            let ratio_den = &count - earlier;
            row.push(&row[l - 1] + div_round(&(diff * earlier), &ratio_den));
        }
        counts.push(count);
        let est = row.last().cloned().unwrap_or_default();
        prev_row = row;
        if let Some(last) = estimates.last() {
            last_difference = (&est - last).abs();
            let tol = est.abs() / BigInt::from(10u32).pow(digits + 2);
            if counts.len() >= MIN_NODES && last_difference <= tol {
                converged = true;
                estimates.push(est);
                break;
            }
        }
        estimates.push(est);
    }

    let value = Rational::new(estimates.last().cloned().unwrap_or_default(), unit.clone())?;
    Ok(TruncatedSum {
        side,
        value,
        terms: counts.len() as u64 * BLOCK,
        nodes: counts.len(),
        last_difference: Rational::new(last_difference, unit)?,
        converged,
    })
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if (r * 2u32).abs() >= b.abs() {
        q + 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery_forms::zl_exact;
    use crate::zeta_forms::eval_numeric;

    #[test]
    fn origin_cell_converges_both_sides() {
        let p = FormParameters::new(0, 0).unwrap();
        let exact = eval_numeric(&zl_exact(p).unwrap(), 30).value();
        for side in [Side::Left, Side::Right] {
            let t = truncated_numeric(p, side, 20).unwrap();
            assert!(t.converged, "{side:?}: {t:?}");
            let rel = ((&t.value - &exact) / &exact).abs();
            assert!(rel < Rational::new(1, BigInt::from(10u32).pow(20)).unwrap(), "{side:?}");
        }
    }
}
