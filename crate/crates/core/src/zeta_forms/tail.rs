use crate::error::{Error, Result};
use crate::exact_arith::{harmonic, pochhammer, Rational};
use crate::polyrat::PartialFractions;

use super::{ZetaLinearForm, MAX_WEIGHT};

/// `Σ_{ν ≥ start} (ν + k)^{-j} = ζ(j) - S_j(start + k - 1)`.
pub fn tail_power_sum(k: i64, j: u32, start: i64) -> Result<ZetaLinearForm> {
    if j < 2 {
        return Err(Error::Divergence(j));
    }
    if j > MAX_WEIGHT {
        return Err(Error::Weight(j));
    }
    let first = start + k;
    if first < 1 {
        return Err(Error::Range(format!(
            "tail of (t+{k})^-{j} from {start} passes through its pole"
        )));
    }
    let mut form = ZetaLinearForm::zeta(j, Rational::one());
    form.set_constant(-harmonic(j, (first - 1) as u64));
    Ok(form)
}

/// `Σ_{ν ≥ start} f^{(order)}(ν)` for a proper `f` given by its partial
/// fractions.
///
/// Each term `A/(t+p)^j` contributes
/// `(-1)^order · (j)_order · A · tail_power_sum(p, j + order, start)`.
pub fn sum_derivative_tail(pf: &PartialFractions, order: u32, start: i64) -> Result<ZetaLinearForm> {
    if !(1..=2).contains(&order) {
        return Err(Error::DerivativeOrder(order));
    }
    if !pf.polynomial_part().is_zero() {
        return Err(Error::NonProper);
    }
    let sign = if order % 2 == 0 { Rational::one() } else { -Rational::one() };
    let mut total = ZetaLinearForm::zero();
    for (p, j, a) in pf.iter_terms() {
        let k = p.to_i64().ok_or_else(|| Error::NonIntegerPole(p.clone()))?;
        if start + k < 1 {
            return Err(Error::PoleInRange { pole: -p, start });
        }
        let factor = &sign * pochhammer(&Rational::from(j), order as u64) * a;
        total += tail_power_sum(k, j + order, start)?.scale(&factor);
    }
    Ok(total)
}
