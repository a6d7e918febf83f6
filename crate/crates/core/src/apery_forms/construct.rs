use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, harmonic, pochhammer, sign_power, Rational};
use crate::polyrat::LinearFactorProduct;

use super::FormParameters;

/// `(t + offset)_length ^ exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerBlock {
    pub offset: Rational,
    pub length: u64,
    pub exponent: i32,
}

/// A scalar times a product of Pochhammer blocks in `t`.
///
/// This keeps the block structure of the defining formulas, which the
/// harmonic-number derivative rules act on; [`to_linear_factors`]
/// flattens it for the algebraic routes.
///
/// [`to_linear_factors`]: PochhammerProduct::to_linear_factors
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerProduct {
    pub scalar: Rational,
    pub blocks: Vec<PochhammerBlock>,
}

impl PochhammerProduct {
    fn new(scalar: Rational) -> Self {
        PochhammerProduct { scalar, blocks: Vec::new() }
    }

    fn block(mut self, offset: impl Into<Rational>, length: i64, exponent: i32) -> Self {
        debug_assert!(length >= 0);
        self.blocks.push(PochhammerBlock { offset: offset.into(), length: length as u64, exponent });
        self
    }

    /// The product with `t` replaced by `t + by`.
    pub fn shifted(&self, by: &Rational) -> Self {
        PochhammerProduct {
            scalar: self.scalar.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|b| PochhammerBlock { offset: &b.offset + by, ..b.clone() })
                .collect(),
        }
    }

    pub fn to_linear_factors(&self) -> LinearFactorProduct {
        let mut f = LinearFactorProduct::new(self.scalar.clone());
        for b in &self.blocks {
            f.push_pochhammer(&b.offset, b.length, b.exponent);
        }
        f
    }

    pub fn evaluate(&self, t: &Rational) -> Result<Rational> {
        let mut num = self.scalar.clone();
        let mut den = Rational::one();
        for b in &self.blocks {
            let v = pochhammer(&(t + &b.offset), b.length);
            if b.exponent > 0 {
                num *= &v.pow(b.exponent)?;
            } else {
                den *= &v.pow(-b.exponent)?;
            }
        }
        num.checked_div(&den).map_err(|_| Error::Pole(t.clone()))
    }

    /// `f^{(order)}(ν)` from logarithmic derivatives: each block contributes
    /// `exponent · (S_1(ν+x+k-1) - S_1(ν+x-1))` to `(log f)'` and
    /// `-exponent · (S_2(ν+x+k-1) - S_2(ν+x-1))` to `(log f)''`.
    ///
    /// Requires `x + ν ≥ 1` for every integer block offset, so no factor
    /// vanishes; non-integer offsets are summed termwise.
    pub fn generated_derivative(&self, order: u32, nu: i64) -> Result<Rational> {
        if !(1..=2).contains(&order) {
            return Err(Error::DerivativeOrder(order));
        }
        let t = Rational::from(nu);
        let value = self.evaluate(&t)?;
        let mut first = Rational::zero();
        let mut second = Rational::zero();
        for b in &self.blocks {
            let e = Rational::from(b.exponent as i64);
            let (l1, l2) = log_derivatives(&b.offset, b.length, nu)?;
            first += &e * l1;
            second -= &e * l2;
        }
        Ok(match order {
            1 => value * first,
            _ => value * (&first * &first + second),
        })
    }
}

/// `(Σ 1/(ν+x+i), Σ 1/(ν+x+i)²)` over `0 ≤ i < k`.
fn log_derivatives(x: &Rational, k: u64, nu: i64) -> Result<(Rational, Rational)> {
    if k == 0 {
        return Ok((Rational::zero(), Rational::zero()));
    }
    let base = x + Rational::from(nu);
    if let Some(b) = base.to_i64() {
        if b < 1 {
            return Err(Error::Domain(format!(
                "Pochhammer block (t{x:+})_{k} is not positive at t = {nu}",
                x = x.to_string()
            )));
        }
        let top = (b as u64) + k - 1;
        let lo = (b - 1) as u64;
        return Ok((harmonic(1, top) - harmonic(1, lo), harmonic(2, top) - harmonic(2, lo)));
    }
    let mut s1 = Rational::zero();
    let mut s2 = Rational::zero();
    let mut cur = base;
    for _ in 0..k {
        let inv = cur.recip()?;
        s2 += &inv * &inv;
        s1 += inv;
        cur += &Rational::one();
    }
    Ok((s1, s2))
}

fn fact(k: i64) -> Rational {
    Rational::from_integer(factorial(k as u64))
}

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k).expect("nonnegative upper index"))
}

/// Block form of `R_{n,m}(t)`.
pub fn r_blocks(p: FormParameters) -> PochhammerProduct {
    let (n, m) = p.as_i64();
    let scalar = sign_power(m) * fact(n) * fact(n) / (fact(m) * fact(2 * n - m));
    PochhammerProduct::new(scalar)
        .block(Rational::frac(n, 2), 1, 1)
        .block(-n, m, 1)
        .block(m - 2 * n, 2 * n - m, 1)
        .block(n + 1, n, 1)
        .block(0, n + 1, -1)
        .block(n + 1, 2 * n - m, 1)
        .block(0, 2 * n - m + 1, -1)
        .block(0, n + 1, -2)
}

/// Block form of `G_{n,m,j}(t)`, the `j`-th summand of `R̃_{n,m}(t)`.
pub fn rtilde_blocks(p: FormParameters, j: u32) -> Result<PochhammerProduct> {
    let (n, m) = p.as_i64();
    let j = j as i64;
    if j > n {
        return Err(Error::Range(format!("R̃ term index j = {j} exceeds n = {n}")));
    }
    let scalar = binom(n, j) * binom(n, j) * binom(2 * n - m + j, n);
    Ok(PochhammerProduct::new(scalar)
        .block(-n, 2 * n - m, 1)
        .block(-j, n, 1)
        .block(0, n + 1, -1)
        .block(0, 2 * n - m + 1, -1))
}

/// `R_{n,m}(t)` as a merged linear-factor product.
pub fn build_r(p: FormParameters) -> LinearFactorProduct {
    r_blocks(p).to_linear_factors()
}

/// `G_{n,m,j}(t)` as a merged linear-factor product.
pub fn build_rtilde_term(p: FormParameters, j: u32) -> Result<LinearFactorProduct> {
    Ok(rtilde_blocks(p, j)?.to_linear_factors())
}
