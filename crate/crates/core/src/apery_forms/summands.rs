use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{
    binomial, factorial_at, harmonic_at, pochhammer, pochhammer_signed, sign_power, Rational,
};
use crate::polyrat::{LinearFactorProduct, RationalFunction};

use super::construct::{build_r, build_rtilde_term, r_blocks, rtilde_blocks};
use super::FormParameters;

/// `d`-th derivative of `f(t + shift)` as an expanded rational function,
/// ready for repeated evaluation.
#[derive(Clone, Debug)]
pub struct OracleDerivative {
    function: RationalFunction,
}

impl OracleDerivative {
    pub fn new(f: &LinearFactorProduct, shift: &Rational, order: u32) -> Result<Self> {
        let function = f.shifted(shift).expand().differentiate(order)?;
        Ok(OracleDerivative { function })
    }

    pub fn at(&self, nu: i64) -> Result<Rational> {
        self.function.evaluate(&Rational::from(nu))
    }

    pub fn function(&self) -> &RationalFunction {
        &self.function
    }
}

/// `f^{(order)}(ν + shift)` by formal differentiation of the expanded form.
pub fn oracle_derivative_at(f: &LinearFactorProduct, shift: &Rational, order: u32, nu: i64) -> Result<Rational> {
    OracleDerivative::new(f, shift, order)?.at(nu)
}

/// `d/dt (x+t)_k` at `t = ν`, valid when `x + ν` is a positive integer.
pub fn d_pochhammer_rule(x: &Rational, k: u64, nu: i64) -> Result<Rational> {
    let base = x + Rational::from(nu);
    let b = base
        .to_i64()
        .filter(|&b| b >= 1)
        .ok_or_else(|| Error::Domain(format!("x + ν = {base} is not a positive integer")))?;
    let diff = harmonic_at(1, b + k as i64 - 1)? - harmonic_at(1, b - 1)?;
    Ok(pochhammer(&base, k) * diff)
}

fn q(k: i64) -> Rational {
    Rational::from(k)
}

fn fact(k: i64) -> Result<Rational> {
    factorial_at(k)
}

fn poch(x: i64, k: i64) -> Result<Rational> {
    pochhammer_signed(&q(x), k)
}

fn s1(k: i64) -> Result<Rational> {
    harmonic_at(1, k)
}

fn binom(n: i64, k: i64) -> Result<Rational> {
    Ok(Rational::from_integer(binomial(n, k)?))
}

fn out_of_range(what: &str, p: FormParameters, detail: String) -> Error {
    Error::Range(format!("{what} at {p}: {detail}"))
}

/// Printed form of `d/dt R_{n,m}(t+2n-m)` at `t = ν ≥ 1`.
pub fn summand_f1(p: FormParameters, nu: i64) -> Result<Rational> {
    if nu < 1 {
        return Err(out_of_range("F1", p, format!("ν = {nu} < 1")));
    }
    let (n, m) = p.as_i64();
    let v = nu;
    let num = sign_power(m)
        * fact(n)?
        * fact(n)?
        * poch(1 + v, 2 * n - m - 1)?
        * poch(n - m + v, m)?
        * poch(3 * n - m + 1 + v, n)?
        * poch(3 * n - m + 1 + v, 2 * n - m)?;
    let den = q(2)
        * fact(m)?
        * fact(2 * n - m)?
        * poch(2 * n - m + v, n + 1)?.pow(3)?
        * poch(2 * n - m + v, 2 * n - m + 1)?;
    let harmonics = -s1(v)? - s1(n - m + v)? + q(5) * s1(2 * n - m + v)? - q(5) * s1(3 * n - m + v)?
        - s1(4 * n - 2 * m + v)?
        + s1(n + v)?
        + s1(4 * n - m + v)?
        + s1(5 * n - 2 * m + v)?;
    let bracket = q(-6 * v)
        + q(v * (5 * n - 2 * m + 2 * v)) * harmonics
        + Rational::frac(5 * n * (m - 2 * n), m - 2 * n - v)
        + Rational::frac(n * (3 * n - 2 * m), n + v)
        + Rational::frac(3 * n * (m - n), n - m + v);
    Ok(num / den * bracket)
}

/// Printed form of `d/dt R_{n,m}(t+n-m)` at `t = ν`, `1 ≤ ν ≤ n`.
pub fn summand_f2(p: FormParameters, nu: i64) -> Result<Rational> {
    let (n, m) = p.as_i64();
    if !(1..=n).contains(&nu) {
        return Err(out_of_range("F2", p, format!("ν = {nu} outside 1..={n}")));
    }
    let v = nu;
    let half = q(v + n - m) + Rational::frac(n, 2);
    let a = sign_power(m) * half * poch(v - m, m)? / fact(m)?;
    let b = sign_power(n - v) * fact(v + n - m - 1)? * fact(n - v)? / fact(2 * n - m)?;
    let c = poch(v + 2 * n - m + 1, n)? / poch(v + n - m, n + 1)?;
    let d = poch(v + 2 * n - m + 1, 2 * n - m)? / poch(v + n - m, 2 * n - m + 1)?;
    let e = (fact(n)? / poch(v + n - m, n + 1)?).pow(2)?;
    Ok(a * b * c * d * e)
}

/// Printed form of `d²/dt² G_{n,m,j}(t)` at `t = ν` for `0 ≤ j < ν ≤ n`.
pub fn summand_g2(p: FormParameters, j: u32, nu: i64) -> Result<Rational> {
    let (n, m) = p.as_i64();
    let j = j as i64;
    if !(j < n && j < nu && nu <= n) {
        return Err(out_of_range("G2", p, format!("(j, ν) = ({j}, {nu}) outside 0 ≤ j < ν ≤ n")));
    }
    let v = nu;
    let num = q(2)
        * sign_power(n + v)
        * binom(n, j)?.pow(2)?
        * binom(2 * n - m + j, n)?
        * poch(1, n - v)?
        * poch(2, n - m + v - 1)?
        * poch(1 - j + v, n - 1)?;
    let den = q(v).pow(3)? * q(n - m + v).pow(2)? * poch(1 + v, n)? * poch(1 + v, 2 * n - m)?;
    let pp = q(v * (v - j) * (n - m + v));
    let bracket = &pp * (Rational::frac(1, j - n - v) - s1(v - j)? + s1(n + v - j)?)
        + &pp * (-s1(2 * n - m + v)? + s1(v)?)
        + &pp * (s1(v)? - s1(n + v)?)
        - q(v * (v - j))
        + q(v * (n - m + v))
        + q(2 * (j - v) * (n - m + v))
        + &pp
        + &pp * (q(-1) + s1(n - m + v)?)
        - &pp * s1(n - v)?;
    Ok(num / den * bracket)
}

/// Printed form of `d²/dt² G_{n,m,j}(t)` at `t = ν` for `1 ≤ ν ≤ j ≤ n`.
pub fn summand_g3(p: FormParameters, j: u32, nu: i64) -> Result<Rational> {
    let (n, m) = p.as_i64();
    let j = j as i64;
    if !(1 <= j && j <= n && 1 <= nu && nu <= j) {
        return Err(out_of_range("G3", p, format!("(j, ν) = ({j}, {nu}) outside 1 ≤ ν ≤ j ≤ n")));
    }
    let v = nu;
    let num = q(2)
        * binom(n, j)?.pow(2)?
        * binom(2 * n - m + j, n)?
        * sign_power(n + v)
        * fact(n + v - m - 1)?
        * fact(n - v)?
        * fact(n + v - j - 1)?
        * poch(v - j, j - v)?;
    let den = poch(v, n + 1)? * poch(v, 2 * n - m + 1)?;
    Ok(num / den)
}

/// `F1` regenerated from the block form of `R(t+2n-m)` by the
/// Pochhammer derivative rule and the product rule.
pub fn generated_f1(p: FormParameters, nu: i64) -> Result<Rational> {
    let (n, m) = p.as_i64();
    r_blocks(p).shifted(&q(2 * n - m)).generated_derivative(1, nu)
}

/// The summand of `c(n,m,j)`: `d²/dt² G_{n,m,j}(t+n)` at `t = ν ≥ 1`,
/// regenerated from the block form.
pub fn generated_g1(p: FormParameters, j: u32, nu: i64) -> Result<Rational> {
    rtilde_blocks(p, j)?.shifted(&q(p.n() as i64)).generated_derivative(2, nu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SummandKind {
    F1,
    F2,
    G1,
    G2,
    G3,
}

impl SummandKind {
    pub const ALL: [SummandKind; 5] =
        [SummandKind::F1, SummandKind::F2, SummandKind::G1, SummandKind::G2, SummandKind::G3];

    pub fn uses_j(self) -> bool {
        matches!(self, SummandKind::G1 | SummandKind::G2 | SummandKind::G3)
    }

    /// `(shift, order)` of the oracle derivative matching this summand.
    fn oracle_shift(self, p: FormParameters) -> (i64, u32) {
        let (n, m) = p.as_i64();
        match self {
            SummandKind::F1 => (2 * n - m, 1),
            SummandKind::F2 => (n - m, 1),
            SummandKind::G1 => (n, 2),
            SummandKind::G2 | SummandKind::G3 => (0, 2),
        }
    }

    /// Whether `(j, ν)` lies in the stated validity range.
    pub fn in_range(self, p: FormParameters, j: u32, nu: i64) -> bool {
        let n = p.n() as i64;
        let j = j as i64;
        match self {
            SummandKind::F1 => nu >= 1,
            SummandKind::F2 => (1..=n).contains(&nu),
            SummandKind::G1 => j <= n && nu >= 1,
            SummandKind::G2 => j < n && j < nu && nu <= n,
            SummandKind::G3 => 1 <= j && j <= n && 1 <= nu && nu <= j,
        }
    }
}

impl fmt::Display for SummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Route {
    PrintedFormula,
    OracleDerivative,
    GeneratedFormula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandValue {
    #[serde(rename = "nu")]
    pub nu: i64,
    pub value: Rational,
    pub route: Route,
}

/// All route values at one sample point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditOutcome {
    pub kind: SummandKind,
    pub n: u32,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    pub nu: i64,
    pub values: Vec<SummandValue>,
    pub agree: bool,
}

/// Caches oracle derivatives per `(kind, j)` so that many points of one cell
/// share a single expansion.
#[derive(Default)]
pub struct Auditor {
    oracles: HashMap<(FormParameters, SummandKind, u32), OracleDerivative>,
}

impl Auditor {
    pub fn new() -> Self {
        Self::default()
    }

    fn oracle(&mut self, kind: SummandKind, p: FormParameters, j: u32) -> Result<&OracleDerivative> {
        let key = (p, kind, if kind.uses_j() { j } else { 0 });
        if !self.oracles.contains_key(&key) {
            let f = if kind.uses_j() { build_rtilde_term(p, j)? } else { build_r(p) };
            let (shift, order) = kind.oracle_shift(p);
            self.oracles.insert(key, OracleDerivative::new(&f, &q(shift), order)?);
        }
        Ok(&self.oracles[&key])
    }

    /// Evaluates every available route at `(kind, p, j, ν)`; `j` is ignored
    /// for `F1` and `F2`.
    pub fn audit(&mut self, kind: SummandKind, p: FormParameters, j: u32, nu: i64) -> Result<AuditOutcome> {
        if !kind.in_range(p, j, nu) {
            return Err(out_of_range(&kind.to_string(), p, format!("(j, ν) = ({j}, {nu})")));
        }
        let oracle = self.oracle(kind, p, j)?.at(nu)?;
        let mut values = vec![SummandValue { nu, value: oracle, route: Route::OracleDerivative }];
        let printed = match kind {
            SummandKind::F1 => Some(summand_f1(p, nu)?),
            SummandKind::F2 => Some(summand_f2(p, nu)?),
            SummandKind::G1 => None,
            SummandKind::G2 => Some(summand_g2(p, j, nu)?),
            SummandKind::G3 => Some(summand_g3(p, j, nu)?),
        };
        if let Some(value) = printed {
            values.push(SummandValue { nu, value, route: Route::PrintedFormula });
        }
        let generated = match kind {
            SummandKind::F1 => Some(generated_f1(p, nu)?),
            SummandKind::G1 => Some(generated_g1(p, j, nu)?),
            _ => None,
        };
        if let Some(value) = generated {
            values.push(SummandValue { nu, value, route: Route::GeneratedFormula });
        }
        let agree = values.iter().all(|v| v.value == values[0].value);
        Ok(AuditOutcome {
            kind,
            n: p.n(),
            m: p.m(),
            j: kind.uses_j().then_some(j),
            nu,
            values,
            agree,
        })
    }
}

/// One-shot form of [`Auditor::audit`].
pub fn audit_point(kind: SummandKind, p: FormParameters, j: u32, nu: i64) -> Result<AuditOutcome> {
    Auditor::new().audit(kind, p, j, nu)
}
