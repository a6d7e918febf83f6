use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, sign_power, Rational};
use crate::zeta_forms::ZetaLinearForm;

/// `U_k(n)` together with its arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedSumU {
    pub k: u32,
    pub n: u64,
    pub value: Rational,
}

/// `binom(4i,2i) / binom(2i,i)^8`, the common part of every `U_k` summand.
fn u_weight(i: u64) -> Rational {
    let i = i as i64;
    let top = binomial(4 * i, 2 * i).expect("nonnegative");
    let mid = binomial(2 * i, i).expect("nonnegative");
    Rational::new(top, mid.pow(8)).expect("nonzero binomial")
}

/// `U_k(n) = Σ_{i=0}^{n} binom(4i,2i) / ((2i+1)^k binom(2i,i)^8)`.
pub fn nested_u(k: u32, n: u64) -> Result<NestedSumU> {
    if k == 0 {
        return Err(Error::Range("nested sum order k must be at least 1".into()));
    }
    let mut value = Rational::zero();
    for i in 0..=n {
        value += u_weight(i) / Rational::from(2 * i as i64 + 1).pow(k as i32)?;
    }
    Ok(NestedSumU { k, n, value })
}

/// `U_4(n), …, U_9(n)` for `n = 0..=n_max`, built incrementally.
pub fn nested_u_table(n_max: u64) -> Vec<[Rational; 6]> {
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    let mut acc: [Rational; 6] = Default::default();
    for i in 0..=n_max {
        let w = u_weight(i);
        let base = Rational::from(2 * i as i64 + 1);
        let mut denom = base.pow(4).unwrap();
        for slot in acc.iter_mut() {
            *slot += &w / &denom;
            denom *= &base;
        }
        rows.push(acc.clone());
    }
    rows
}

/// `105 U_9 + 955 U_8 + 3095 U_7 + 2045 U_6 - 12140 U_5 - 27300 U_4 + 12288 ζ(2)²`.
fn u_bracket(u: &[Rational; 6]) -> ZetaLinearForm {
    // u[0] = U_4, ..., u[5] = U_9
    let weights = [-27300i64, -12140, 2045, 3095, 955, 105];
    let c0: Rational = u.iter().zip(weights).map(|(x, w)| x * Rational::from(w)).sum();
    let mut form = ZetaLinearForm::constant(c0);
    form.add_zeta2_squared(&Rational::from(12288));
    form
}

fn central(n: u64) -> Rational {
    Rational::from_integer(binomial(2 * n as i64, n as i64).expect("nonnegative"))
}

fn poly(coeffs: &[i64], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, &c| acc * x + Rational::from(c))
}

/// Closed form of `Z_l(n,0)` in `U_4..U_9` and `ζ(2)² = (5/2) ζ(4)`.
pub fn closed_form_m0(n: u64) -> ZetaLinearForm {
    closed_form_m0_from(n, &nested_u_table(n)[n as usize])
}

fn closed_form_m0_from(n: u64, u: &[Rational; 6]) -> ZetaLinearForm {
    let nq = Rational::from(n as i64);
    let sign = sign_power(n as i64);
    let c4 = central(n).pow(4).unwrap();
    let head = u_bracket(u).scale(&(&sign * &c4 / Rational::from(30720)));
    let quartic = poly(&[831, 5265, 12601, 13499, 5460], &nq);
    let quarter = Rational::from_integer(binomial(4 * n as i64, 2 * n as i64).unwrap());
    let tail = sign * (Rational::from(4 * n as i64 + 1)) * quartic * quarter
        / (Rational::from(768) * Rational::from(2 * n as i64 + 1).pow(9).unwrap() * c4);
    head + ZetaLinearForm::constant(tail)
}

/// Closed form of `Z_l(n,1)` for `n ≥ 1`, transcribed as printed.
pub fn closed_form_m1(n: u64) -> Result<ZetaLinearForm> {
    if n == 0 {
        return Err(Error::Range("the m = 1 closed form needs n ≥ 1".into()));
    }
    Ok(closed_form_m1_from(n, &nested_u_table(n)[n as usize]))
}

fn closed_form_m1_from(n: u64, u: &[Rational; 6]) -> ZetaLinearForm {
    let nq = Rational::from(n as i64);
    let sign = sign_power(n as i64);
    let c4 = central(n).pow(4).unwrap();
    let head = u_bracket(u).scale(&(Rational::from(3) * &nq * &sign * &c4 / Rational::from(40960)));
    let nonic = poly(&[128, 2304, 18432, 86016, 255555, 490329, 587145, 398115, 116544, 16], &nq);
    let quarter = Rational::from_integer(binomial(4 * n as i64, 2 * n as i64).unwrap());
    let tail = -(sign * quarter * nonic)
        / (Rational::from(1024) * nq.pow(3).unwrap() * Rational::from(2 * n as i64 + 1).pow(9).unwrap() * c4);
    head + ZetaLinearForm::constant(tail)
}

/// The printed `m = 1` expression scaled by `-1/3`.
///
/// The printed expression equals `W_1(n,1) + W_2(n,1) = -3 Z_l(n,1)`, so this
/// is the form that matches `Z_l(n,1)`.
pub fn closed_form_m1_normalized(n: u64) -> Result<ZetaLinearForm> {
    Ok(closed_form_m1(n)?.scale(&Rational::frac(-1, 3)))
}

/// `closed_form_m0(n)` and `closed_form_m1(n)` for `n = 0..=n_max`, sharing
/// one incremental `U` table. The `m = 1` entry at `n = 0` is `None`.
pub fn closed_form_rows(n_max: u64) -> Vec<(ZetaLinearForm, Option<ZetaLinearForm>)> {
    nested_u_table(n_max)
        .iter()
        .enumerate()
        .map(|(n, u)| {
            let n = n as u64;
            (closed_form_m0_from(n, u), (n > 0).then(|| closed_form_m1_from(n, u)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_sum_examples() {
        for k in 1..=9 {
            assert_eq!(nested_u(k, 0).unwrap().value, Rational::one());
        }
        assert_eq!(nested_u(4, 1).unwrap().value, Rational::frac(3457, 3456));
        assert_eq!(nested_u(9, 1).unwrap().value, Rational::one() + Rational::frac(6, 19683 * 256));
        assert!(nested_u(0, 3).is_err());
        let table = nested_u_table(6);
        for k in 4..=9u32 {
            assert_eq!(table[6][(k - 4) as usize], nested_u(k, 6).unwrap().value);
        }
    }

    #[test]
    fn m0_initial_values() {
        assert_eq!(closed_form_m0(0), ZetaLinearForm::zeta(4, Rational::one()));
        assert_eq!(
            closed_form_m0(1),
            ZetaLinearForm::from_zeta4(Rational::frac(277, 16), Rational::from(-16))
        );
    }

    #[test]
    fn m1_printed_and_normalized() {
        let printed = closed_form_m1(1).unwrap();
        assert_eq!(printed, ZetaLinearForm::from_zeta4(Rational::from(39), Rational::from(-36)));
        assert_eq!(
            closed_form_m1_normalized(1).unwrap(),
            ZetaLinearForm::from_zeta4(Rational::from(-13), Rational::from(12))
        );
        assert_eq!(
            closed_form_m1_normalized(2).unwrap(),
            ZetaLinearForm::from_zeta4(Rational::frac(4090247, 1944), Rational::from(-1944))
        );
    }

    #[test]
    fn m1_rejects_zero() {
        assert!(closed_form_m1(0).is_err());
        assert_eq!(closed_form_rows(2)[0].1, None);
    }
}
