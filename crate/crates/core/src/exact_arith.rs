//! Exact scalars and the combinatorial primitives built on them.
//!
//! [`Rational`] is a thin newtype over [`num_rational::BigRational`], which
//! keeps every value in lowest terms with a positive denominator. Factorials
//! and harmonic numbers are cached process-wide; call [`prepare`] before a
//! parallel section to populate the caches for the largest index used.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(&self.0 / &rhs.0))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::from_integer(value)
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(value: $t) -> Self {
                Rational::from_integer(BigInt::from(value))
            }
        }
    )*};
}
from_prim!(i32, i64, u32, u64, usize);

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Panics on a zero divisor, like integer division; use `checked_div` where
// the divisor is data-dependent.
binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let parse = |part: &str| part.trim().parse::<BigInt>().map_err(|_| bad());
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q.sign() != Sign::Plus {
                    return Err(bad());
                }
                Rational::new(parse(p)?, q)
            }
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Combinatorics
// ---------------------------------------------------------------------------

fn factorial_cache() -> &'static RwLock<Vec<BigInt>> {
    static CACHE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

const MAX_HARMONIC_ORDER: usize = 8;

/// `cache[a]` holds `S_a(0), S_a(1), …`.
fn harmonic_cache() -> &'static RwLock<Vec<Vec<Rational>>> {
    static CACHE: OnceLock<RwLock<Vec<Vec<Rational>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![vec![Rational::zero()]; MAX_HARMONIC_ORDER + 1]))
}

/// Populates the factorial and harmonic caches up to `max_index`.
pub fn prepare(max_index: u64) {
    factorial(max_index);
    for a in 1..=MAX_HARMONIC_ORDER as u32 {
        harmonic(a, max_index);
    }
}

pub fn factorial(k: u64) -> BigInt {
    let k = k as usize;
    if let Some(v) = factorial_cache().read().unwrap().get(k) {
        return v.clone();
    }
    let mut cache = factorial_cache().write().unwrap();
    while cache.len() <= k {
        let next = cache.last().unwrap() * BigInt::from(cache.len());
        cache.push(next);
    }
    cache[k].clone()
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`; negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

/// Rising factorial `x (x+1) ⋯ (x+k-1)`.
pub fn pochhammer(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    let one = Rational::one();
    for _ in 0..k {
        acc *= &term;
        term += &one;
    }
    acc
}

/// Pochhammer symbol `Γ(x+k)/Γ(x)` for any integer `k`; for `k < 0` this is
/// `1/((x-1)(x-2)⋯(x+k))`.
pub fn pochhammer_signed(x: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        Ok(pochhammer(x, k as u64))
    } else {
        let start = x + Rational::from(k);
        pochhammer(&start, k.unsigned_abs()).recip()
    }
}

/// Generalized harmonic number `S_a(n) = Σ_{k=1}^{n} k^{-a}`.
pub fn harmonic(a: u32, n: u64) -> Rational {
    let idx = n as usize;
    let order = a as usize;
    if order > MAX_HARMONIC_ORDER {
        return (1..=n)
            .map(|k| Rational::from(k).pow(-(a as i32)).expect("k >= 1"))
            .sum();
    }
    if let Some(v) = harmonic_cache().read().unwrap()[order].get(idx) {
        return v.clone();
    }
    let mut cache = harmonic_cache().write().unwrap();
    let row = &mut cache[order];
    while row.len() <= idx {
        let k = BigInt::from(row.len());
        let term = Rational(BigRational::new(BigInt::one(), num_traits::pow(k, order)));
        let next = row.last().unwrap() + term;
        row.push(next);
    }
    row[idx].clone()
}

/// `S_a(n)` for a signed upper index; negative `n` is a domain error.
pub fn harmonic_at(a: u32, n: i64) -> Result<Rational> {
    if n < 0 {
        Err(Error::Domain(format!("harmonic number S_{a}({n}) with negative index")))
    } else {
        Ok(harmonic(a, n as u64))
    }
}

/// `n!` for a signed argument; negative arguments are a domain error.
pub fn factorial_at(n: i64) -> Result<Rational> {
    if n < 0 {
        Err(Error::Domain(format!("factorial of negative integer {n}")))
    } else {
        Ok(Rational::from_integer(factorial(n as u64)))
    }
}

/// `(-1)^k` as a rational.
pub fn sign_power(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(4, 5).unwrap(), BigInt::from(0));
        assert_eq!(binomial(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(4, -1).unwrap(), BigInt::from(0));
        assert_eq!(binomial(-1, 0), Err(Error::NegativeBinomial(-1)));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&Rational::one(), 5), Rational::from(120));
        assert_eq!(pochhammer(&r("-7/2"), 0), Rational::one());
        assert_eq!(pochhammer(&r("1/2"), 2), r("3/4"));
        assert_eq!(pochhammer_signed(&Rational::from(2), -1).unwrap(), Rational::one());
        assert_eq!(pochhammer_signed(&Rational::from(5), -2).unwrap(), r("1/12"));
        assert!(pochhammer_signed(&Rational::from(1), -1).is_err());
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(1, 3), r("11/6"));
        assert_eq!(harmonic(2, 2), r("5/4"));
        assert_eq!(harmonic(4, 0), Rational::zero());
        assert_eq!(harmonic(9, 2), Rational::one() + r("1/512"));
    }

    #[test]
    fn rational_invariants() {
        let x = Rational::new(6, -4).unwrap();
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(Rational::from(7).to_string(), "7");
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Rational::one().checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(r("-10/4"), Rational::frac(-5, 2));
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_json_is_string() {
        let x = Rational::frac(4_090_247, 1944);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"4090247/1944\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn harmonic_increments() {
        for a in 1..=5u32 {
            for n in 1..=500u64 {
                let step = harmonic(a, n) - harmonic(a, n - 1);
                assert_eq!(step, Rational::from(n).pow(-(a as i32)).unwrap());
            }
        }
    }

    #[test]
    fn binomial_matches_factorials() {
        for n in 0..=60i64 {
            for k in 0..=n {
                let via_fact =
                    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64));
                assert_eq!(binomial(n, k).unwrap(), via_fact);
            }
        }
    }

    proptest! {
        #[test]
        fn pochhammer_splits(p in -40i64..40, q in 1i64..7, j in 0u64..=50, k in 0u64..=50) {
            let x = Rational::frac(p, q);
            let whole = pochhammer(&x, j + k);
            let split = pochhammer(&x, j) * pochhammer(&(&x + Rational::from(j)), k);
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn rational_string_roundtrip(p in any::<i64>(), q in 1i64..i64::MAX) {
            let x = Rational::frac(p, q);
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
