//! Scaled-integer fixed point with an explicit error bound, and ζ(s) by
//! Euler–Maclaurin summation.
//!
//! For integer `s ≥ 2` every Euler–Maclaurin term is rational, so the only
//! error sources are per-term rounding (at most one ulp each) and the
//! remainder. Since `x^{-s}` is completely monotone, the remainder after the
//! last included Bernoulli term is bounded by the first omitted one.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_arith::Rational;

use super::ZetaLinearForm;

/// Extra decimal digits carried beyond a requested precision.
pub const GUARD_DIGITS: u32 = 8;

/// `mantissa · 10^{-scale}`, within `error_ulps · 10^{-scale}` of the true
/// value it approximates.
#[derive(Clone, PartialEq, Eq)]
pub struct FixedPointNumber {
    mantissa: BigInt,
    scale: u32,
    error_ulps: BigInt,
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// Round-half-away-from-zero division of `a` by a positive `b`.
/// `a / b` rounded to nearest, ties away from zero; `b > 0`.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.abs().div_mod_floor(b);
    let q = if BigInt::from(2) * r >= *b { q + 1 } else { q };
    if a.is_negative() {
        -q
    } else {
        q
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

impl FixedPointNumber {
    pub fn zero(scale: u32) -> Self {
        FixedPointNumber { mantissa: BigInt::zero(), scale, error_ulps: BigInt::zero() }
    }

    /// Nearest fixed-point value; the error is zero when the rational is
    /// exactly representable and one ulp otherwise.
    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        let scaled = r.numer() * pow10(scale);
        let (q, rem) = scaled.div_mod_floor(r.denom());
        let exact = rem.is_zero();
        let mantissa = if exact { q } else { div_round(&scaled, r.denom()) };
        FixedPointNumber {
            mantissa,
            scale,
            error_ulps: if exact { BigInt::zero() } else { BigInt::one() },
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn error_ulps(&self) -> &BigInt {
        &self.error_ulps
    }

    /// The represented value as an exact rational.
    pub fn value(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.scale)).expect("nonzero power of ten")
    }

    /// Absolute error bound as an exact rational.
    pub fn error_bound(&self) -> Rational {
        Rational::new(self.error_ulps.clone(), pow10(self.scale)).expect("nonzero power of ten")
    }

    pub fn add(&self, other: &FixedPointNumber) -> FixedPointNumber {
        assert_eq!(self.scale, other.scale, "fixed-point scales must match");
        FixedPointNumber {
            mantissa: &self.mantissa + &other.mantissa,
            scale: self.scale,
            error_ulps: &self.error_ulps + &other.error_ulps,
        }
    }

    pub fn sub(&self, other: &FixedPointNumber) -> FixedPointNumber {
        assert_eq!(self.scale, other.scale, "fixed-point scales must match");
        FixedPointNumber {
            mantissa: &self.mantissa - &other.mantissa,
            scale: self.scale,
            error_ulps: &self.error_ulps + &other.error_ulps,
        }
    }

    /// Multiplication by an exact rational: the existing error scales by
    /// `|c|`, plus one ulp of rounding.
    pub fn mul_rational(&self, c: &Rational) -> FixedPointNumber {
        let prod = &self.mantissa * c.numer();
        let (q, rem) = prod.div_mod_floor(c.denom());
        let (mantissa, round) =
            if rem.is_zero() { (q, BigInt::zero()) } else { (div_round(&prod, c.denom()), BigInt::one()) };
        let scaled_err = ceil_div(&(&self.error_ulps * c.numer().abs()), c.denom());
        FixedPointNumber { mantissa, scale: self.scale, error_ulps: scaled_err + round }
    }

    /// Rounds to a coarser scale, absorbing the rounding into the bound.
    pub fn rescale(&self, scale: u32) -> FixedPointNumber {
        if scale >= self.scale {
            let f = pow10(scale - self.scale);
            return FixedPointNumber {
                mantissa: &self.mantissa * &f,
                scale,
                error_ulps: &self.error_ulps * &f,
            };
        }
        let f = pow10(self.scale - scale);
        let (q, rem) = self.mantissa.div_mod_floor(&f);
        let exact = rem.is_zero();
        let mantissa = if exact { q } else { div_round(&self.mantissa, &f) };
        let err = ceil_div(&self.error_ulps, &f) + if exact { 0 } else { 1 };
        FixedPointNumber { mantissa, scale, error_ulps: err }
    }

    /// Decimal string with `digits` places after the point (rounded).
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let m = if digits < self.scale {
            div_round(&self.mantissa, &pow10(self.scale - digits))
        } else {
            &self.mantissa * pow10(digits - self.scale)
        };
        let neg = m.is_negative();
        let mut s = m.abs().to_string();
        let d = digits as usize;
        if s.len() <= d {
            s = "0".repeat(d + 1 - s.len()) + &s;
        }
        let (int, frac) = s.split_at(s.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl fmt::Display for FixedPointNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(self.scale))
    }
}

impl fmt::Debug for FixedPointNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {} ulp(10^-{})", self, self.error_ulps, self.scale)
    }
}

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

/// `B_{2k} / (2k)!` for `k = 1..`, via tangent numbers.
fn bernoulli_ratios(count: usize) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap();
    if guard.len() < count {
        let n = count.max(2 * guard.len());
        // Tangent numbers T_1..T_n (Brent–Harvey in-place recurrence).
        let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
        t[1] = BigInt::one();
        for k in 2..=n {
            t[k] = &t[k - 1] * BigInt::from(k - 1);
        }
        for k in 2..=n {
            for j in k..=n {
                t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
            }
        }
        let mut out = Vec::with_capacity(n);
        let mut fact = BigInt::one();
        for k in 1..=n {
            fact *= BigInt::from((2 * k - 1) * (2 * k));
            let four_k = num_traits::pow(BigInt::from(4), k);
            let num = BigInt::from(2 * k) * &t[k];
            let den = &four_k * (&four_k - 1u32) * &fact;
            let b = Rational::new(num, den).expect("nonzero");
            out.push(if k % 2 == 1 { b } else { -b });
        }
        *guard = out;
    }
    guard[..count].to_vec()
}

// ---------------------------------------------------------------------------
// Zeta values
// ---------------------------------------------------------------------------

fn zeta_cache() -> &'static Mutex<HashMap<(u32, u32), FixedPointNumber>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), FixedPointNumber>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// ζ(s) for `2 ≤ s ≤ 5`, returned at scale `digits + GUARD_DIGITS` with a
/// certified error bound below `10^{-digits}`.
pub fn zeta_numeric(s: u32, digits: u32) -> FixedPointNumber {
    assert!((2..=5).contains(&s), "zeta argument {s} outside 2..=5");
    assert!(digits >= 1, "digits must be positive");
    let scale = digits + GUARD_DIGITS;
    if let Some(v) = zeta_cache().lock().unwrap().get(&(s, scale)) {
        return v.clone();
    }
    let value = euler_maclaurin(s, scale);
    zeta_cache().lock().unwrap().insert((s, scale), value.clone());
    value
}

fn euler_maclaurin(s: u32, scale: u32) -> FixedPointNumber {
    let extra = 6;
    let wp = scale + extra;
    let one = pow10(wp);
    let n = (wp as u64).max(16);
    let big_n = BigInt::from(n);

    let mut mantissa = BigInt::zero();
    let mut err = BigInt::zero();
    for k in 1..n {
        mantissa += div_round(&one, &num_traits::pow(BigInt::from(k), s as usize));
        err += 1;
    }
    let n_pow_s = num_traits::pow(big_n.clone(), s as usize);
    // N^{1-s}/(s-1) + N^{-s}/2
    mantissa += div_round(&(&one * &big_n), &(&n_pow_s * BigInt::from(s - 1)));
    mantissa += div_round(&one, &(&n_pow_s * 2));
    err += 2;

    // B_{2j}/(2j)! · (s)_{2j-1} · N^{-s-2j+1}
    let mut j = 1usize;
    let mut batch = 32usize;
    let mut ratios = bernoulli_ratios(batch);
    let mut rising = Rational::from(s); // (s)_{2j-1}
    let mut n_power = &n_pow_s * &big_n; // N^{s+2j-1}
    let n_sq = &big_n * &big_n;
    loop {
        if j > ratios.len() {
            batch *= 2;
            ratios = bernoulli_ratios(batch);
        }
        let coeff = &ratios[j - 1] * &rising;
        let num = coeff.numer() * &one;
        let den = coeff.denom() * &n_power;
        let term = div_round(&num, &den);
        if term.is_zero() {
            // |term| < 1/2 ulp: this is the first omitted term and bounds the
            // remainder.
            err += 1;
            break;
        }
        mantissa += term;
        err += 1;
        let a = Rational::from(s as u64 + 2 * j as u64 - 1);
        let b = Rational::from(s as u64 + 2 * j as u64);
        rising = rising * a * b;
        n_power *= &n_sq;
        j += 1;
    }

    FixedPointNumber { mantissa, scale: wp, error_ulps: err }.rescale(scale)
}

/// Numeric value of `c0 + Σ c_s ζ(s)` at scale `digits + GUARD_DIGITS`.
pub fn eval_numeric(form: &ZetaLinearForm, digits: u32) -> FixedPointNumber {
    let scale = digits + GUARD_DIGITS;
    let mut acc = FixedPointNumber::zero(scale);
    for (s, c) in form.nonzero_terms() {
        let term = if s == 0 {
            FixedPointNumber::from_rational(c, scale)
        } else {
            zeta_numeric(s, digits).mul_rational(c)
        };
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// π by Machin's formula at `scale` digits, independent of the zeta code.
    fn machin_pi(scale: u32) -> Rational {
        fn arctan_inv(x: i64, one: &BigInt) -> BigInt {
            let x2 = BigInt::from(x * x);
            let mut power = one / BigInt::from(x);
            let mut total = power.clone();
            let mut k = 1i64;
            while !power.is_zero() {
                power = &power / &x2;
                let term = &power / BigInt::from(2 * k + 1);
                if k % 2 == 1 {
                    total -= term;
                } else {
                    total += term;
                }
                k += 1;
            }
            total
        }
        let wp = scale + 10;
        let one = pow10(wp);
        let pi = BigInt::from(4) * (BigInt::from(4) * arctan_inv(5, &one) - arctan_inv(239, &one));
        Rational::new(pi, one).unwrap()
    }

    fn close(a: &Rational, b: &Rational, tol_digits: u32) -> bool {
        let tol = Rational::new(1, pow10(tol_digits)).unwrap();
        (a - b).abs() < tol
    }

    #[test]
    fn bernoulli_prefix() {
        let r = bernoulli_ratios(3);
        assert_eq!(r[0], Rational::frac(1, 12)); // B2/2!
        assert_eq!(r[1], Rational::frac(-1, 720)); // B4/4!
        assert_eq!(r[2], Rational::frac(1, 30240)); // B6/6!
    }

    #[test]
    fn zeta_two_and_four_match_pi() {
        let pi = machin_pi(60);
        let pi2 = &pi * &pi;
        let z2 = &pi2 / Rational::from(6);
        let z4 = &pi2 * &pi2 / Rational::from(90);
        for digits in [10u32, 30, 50] {
            let v2 = zeta_numeric(2, digits);
            let v4 = zeta_numeric(4, digits);
            assert!(close(&v2.value(), &z2, digits), "zeta(2) at {digits}");
            assert!(close(&v4.value(), &z4, digits), "zeta(4) at {digits}");
            assert!(v2.error_bound() < Rational::new(1, pow10(digits)).unwrap());
        }
        assert_eq!(zeta_numeric(2, 10).to_decimal_string(10), "1.6449340668");
        assert_eq!(zeta_numeric(4, 10).to_decimal_string(10), "1.0823232337");
    }

    #[test]
    fn zeta_squares_consistency() {
        let d = 40;
        let z2 = zeta_numeric(2, d).value();
        let z4 = zeta_numeric(4, d).value();
        assert!(close(&(&z2 * &z2), &(z4 * Rational::frac(5, 2)), d - 2));
    }

    #[test]
    fn odd_zeta_values() {
        // Known decimal expansions.
        let z3 = "1.2020569031595942853997381615114499907649862923405";
        let z5 = "1.0369277551433699263313654864570341680570809195019";
        assert_eq!(zeta_numeric(3, 45).to_decimal_string(45), &z3[..47]);
        assert_eq!(zeta_numeric(5, 45).to_decimal_string(45), "1.036927755143369926331365486457034168057080920");
        assert_eq!(&z5[..46], "1.03692775514336992633136548645703416805708091");
    }

    #[test]
    fn eval_examples() {
        let z4 = ZetaLinearForm::zeta(4, Rational::one());
        assert_eq!(eval_numeric(&z4, 10).to_decimal_string(10), "1.0823232337");
        let zero = eval_numeric(&ZetaLinearForm::zero(), 10);
        assert!(zero.mantissa().is_zero() && zero.error_ulps().is_zero());
        // 277/16 - 16 ζ(4) is a small negative number.
        let f = ZetaLinearForm::from_zeta4(Rational::frac(277, 16), Rational::from(-16));
        let v = eval_numeric(&f, 15).value();
        assert!(v < Rational::zero() && v > Rational::frac(-1, 100));
    }

    #[test]
    fn error_bounds_are_honored() {
        let forms = [
            ZetaLinearForm::from_zeta4(Rational::frac(277, 16), Rational::from(-16)),
            ZetaLinearForm::from_zeta4(Rational::frac(4_090_247, 1944), Rational::from(-1944)),
            &ZetaLinearForm::zeta(3, Rational::frac(-7, 3)) + &ZetaLinearForm::zeta(5, Rational::from(11)),
        ];
        for f in &forms {
            for d in [5u32, 20, 35] {
                let lo = eval_numeric(f, d);
                let hi = eval_numeric(f, d + 10);
                assert!((lo.value() - hi.value()).abs() < lo.error_bound(), "{f} at {d}");
            }
        }
    }

    #[test]
    fn decimal_formatting() {
        let x = FixedPointNumber::from_rational(&Rational::frac(-1, 8), 4);
        assert_eq!(x.to_decimal_string(4), "-0.1250");
        assert_eq!(x.to_decimal_string(2), "-0.13");
        assert_eq!(FixedPointNumber::from_rational(&Rational::from(3), 2).to_decimal_string(0), "3");
        assert!(x.error_ulps().is_zero());
        let third = FixedPointNumber::from_rational(&Rational::frac(1, 3), 5);
        assert_eq!(third.error_ulps(), &BigInt::one());
    }
}
