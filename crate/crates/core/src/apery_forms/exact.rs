use crate::error::Result;
use crate::exact_arith::Rational;
use crate::polyrat::{LinearFactorProduct, PartialFractions};
use crate::zeta_forms::{sum_derivative_tail, ZetaLinearForm};

use super::construct::{build_r, build_rtilde_term};
use super::summands::{summand_f2, summand_g2, summand_g3};
use super::FormParameters;

pub fn partial_fractions_of(f: &LinearFactorProduct) -> Result<PartialFractions> {
    PartialFractions::decompose(&f.expand(), &f.denominator_shifts())
}

/// `Z_l(n,m) = -1/3 · Σ_{ν ≥ n-m+1} R'_{n,m}(ν)`.
pub fn zl_exact(p: FormParameters) -> Result<ZetaLinearForm> {
    let (n, m) = p.as_i64();
    let pf = partial_fractions_of(&build_r(p))?;
    Ok(sum_derivative_tail(&pf, 1, n - m + 1)?.scale(&Rational::frac(-1, 3)))
}

/// `Z_r(n,m) = 1/6 · Σ_{ν ≥ 1} R̃''_{n,m}(ν)`, summed term by term in `j`.
pub fn zr_exact(p: FormParameters) -> Result<ZetaLinearForm> {
    let mut total = ZetaLinearForm::zero();
    for j in 0..=p.n() {
        let pf = partial_fractions_of(&build_rtilde_term(p, j)?)?;
        total += sum_derivative_tail(&pf, 2, 1)?;
    }
    Ok(total.scale(&Rational::frac(1, 6)))
}

/// `W_1 = Σ_{ν ≥ 1} R'(ν + 2n - m)`.
pub fn w1_exact(p: FormParameters) -> Result<ZetaLinearForm> {
    let (n, m) = p.as_i64();
    let shifted = build_r(p).shifted(&Rational::from(2 * n - m));
    sum_derivative_tail(&partial_fractions_of(&shifted)?, 1, 1)
}

/// `W_2 = Σ_{ν=m+1}^{n} F_2(ν)`.
pub fn w2_exact(p: FormParameters) -> Result<Rational> {
    let mut total = Rational::zero();
    for nu in p.m() as i64 + 1..=p.n() as i64 {
        total += summand_f2(p, nu)?;
    }
    Ok(total)
}

/// `c(n,m,j) = Σ_{ν ≥ 1} G''_{n,m,j}(ν + n)`.
pub fn inner_sum_c(p: FormParameters, j: u32) -> Result<ZetaLinearForm> {
    let g = build_rtilde_term(p, j)?.shifted(&Rational::from(p.n() as i64));
    sum_derivative_tail(&partial_fractions_of(&g)?, 2, 1)
}

/// `C_1 = Σ_j c(n,m,j)`.
pub fn c1_exact(p: FormParameters) -> Result<ZetaLinearForm> {
    (0..=p.n()).map(|j| inner_sum_c(p, j)).sum()
}

/// `C_2`: the finite part `1 ≤ ν ≤ n`, from `G_2` when `ν > j` and `G_3`
/// when `ν ≤ j`.
pub fn c2_exact(p: FormParameters) -> Result<Rational> {
    let n = p.n();
    let mut total = Rational::zero();
    for j in 0..n {
        for nu in j as i64 + 1..=n as i64 {
            total += summand_g2(p, j, nu)?;
        }
    }
    for j in 1..=n {
        for nu in 1..=j as i64 {
            total += summand_g3(p, j, nu)?;
        }
    }
    Ok(total)
}

/// `Z_l = -1/3 (W_1 + W_2)`.
pub fn check_split_left(p: FormParameters) -> Result<bool> {
    let split = (w1_exact(p)? + ZetaLinearForm::constant(w2_exact(p)?)).scale(&Rational::frac(-1, 3));
    Ok(split == zl_exact(p)?)
}

/// `Z_r = 1/6 (C_1 + C_2)`.
pub fn check_split_right(p: FormParameters) -> Result<bool> {
    let split = (c1_exact(p)? + ZetaLinearForm::constant(c2_exact(p)?)).scale(&Rational::frac(1, 6));
    Ok(split == zr_exact(p)?)
}
