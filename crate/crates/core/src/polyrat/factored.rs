use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::{Polynomial, RationalFunction};

/// `scalar · ∏ (t + shift)^exponent` with distinct shifts and nonzero
/// exponents.
///
/// Because equal shifts are merged, common numerator and denominator factors
/// cancel on construction and [`expand`](Self::expand) yields a reduced
/// rational function without a gcd computation.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearFactorProduct {
    scalar: Rational,
    factors: BTreeMap<Rational, i32>,
}

impl LinearFactorProduct {
    pub fn new(scalar: Rational) -> Self {
        LinearFactorProduct { scalar, factors: BTreeMap::new() }
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i32)> + '_ {
        self.factors.iter().map(|(s, &e)| (s, e))
    }

    pub fn push_factor(&mut self, shift: Rational, exponent: i32) {
        if exponent == 0 || self.scalar.is_zero() {
            return;
        }
        let e = self.factors.entry(shift.clone()).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.remove(&shift);
        }
    }

    pub fn with_factor(mut self, shift: Rational, exponent: i32) -> Self {
        self.push_factor(shift, exponent);
        self
    }

    /// Multiplies by `(t + x)_k^exponent`, i.e. the factors `t + x + i` for
    /// `0 ≤ i < k`.
    pub fn push_pochhammer(&mut self, x: &Rational, k: u64, exponent: i32) {
        let mut shift = x.clone();
        for _ in 0..k {
            self.push_factor(shift.clone(), exponent);
            shift += &Rational::one();
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        self.scalar *= c;
        if self.scalar.is_zero() {
            self.factors.clear();
        }
    }

    pub fn times(&self, other: &LinearFactorProduct) -> LinearFactorProduct {
        let mut out = self.clone();
        out.scale(&other.scalar);
        for (s, e) in other.factors() {
            out.push_factor(s.clone(), e);
        }
        out
    }

    /// The product with `t` replaced by `t + offset`.
    pub fn shifted(&self, offset: &Rational) -> LinearFactorProduct {
        LinearFactorProduct {
            scalar: self.scalar.clone(),
            factors: self.factors.iter().map(|(s, &e)| (s + offset, e)).collect(),
        }
    }

    /// Shifts of factors with negative exponent; the poles sit at `t = -shift`.
    pub fn denominator_shifts(&self) -> Vec<Rational> {
        self.factors.iter().filter(|(_, &e)| e < 0).map(|(s, _)| s.clone()).collect()
    }

    pub fn numerator_degree(&self) -> u64 {
        self.factors.values().filter(|&&e| e > 0).map(|&e| e as u64).sum()
    }

    pub fn denominator_degree(&self) -> u64 {
        self.factors.values().filter(|&&e| e < 0).map(|&e| e.unsigned_abs() as u64).sum()
    }

    pub fn expand(&self) -> RationalFunction {
        if self.scalar.is_zero() {
            return RationalFunction::zero();
        }
        let mut num = Polynomial::constant(self.scalar.clone());
        let mut den = Polynomial::one();
        for (shift, &e) in &self.factors {
            let target = if e > 0 { &mut num } else { &mut den };
            for _ in 0..e.unsigned_abs() {
                target.mul_linear_assign(shift);
            }
        }
        RationalFunction::from_coprime(num, den)
    }

    /// Direct evaluation at `t0` without expanding.
    pub fn evaluate(&self, t0: &Rational) -> Result<Rational> {
        let mut num = self.scalar.clone();
        let mut den = Rational::one();
        for (shift, &e) in &self.factors {
            let base = t0 + shift;
            if e > 0 {
                num *= &base.pow(e).expect("positive exponent");
            } else {
                den *= &base.pow(-e).expect("positive exponent");
            }
        }
        if den.is_zero() {
            return Err(Error::Pole(t0.clone()));
        }
        Ok(num / den)
    }
}

impl fmt::Debug for LinearFactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for (s, e) in &self.factors {
            write!(f, " * (t + {s})^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn expand_examples() {
        let f = LinearFactorProduct::new(q(1)).with_factor(q(0), 1).with_factor(q(1), 1).expand();
        assert_eq!(f.numerator(), &Polynomial::from_coeffs(vec![q(0), q(1), q(1)]));
        assert_eq!(f.denominator(), &Polynomial::one());

        let g = LinearFactorProduct::new(q(1)).with_factor(q(0), -1).expand();
        assert_eq!(g.numerator(), &Polynomial::one());
        assert_eq!(g.denominator(), &Polynomial::linear(q(0)));
    }

    #[test]
    fn merging_cancels() {
        let f = LinearFactorProduct::new(q(3)).with_factor(q(2), 2).with_factor(q(2), -2);
        assert_eq!(f.factors().count(), 0);
        let mut g = LinearFactorProduct::new(q(1));
        g.push_pochhammer(&q(0), 3, -1);
        g.push_pochhammer(&q(1), 2, 1);
        assert_eq!(g.denominator_shifts(), vec![q(0)]);
        assert_eq!(g.numerator_degree(), 0);
    }

    #[test]
    fn shifted_evaluation() {
        let mut f = LinearFactorProduct::new(q(2));
        f.push_pochhammer(&q(1), 2, 1);
        f.push_factor(q(0), -1);
        let s = f.shifted(&q(3));
        assert_eq!(s.evaluate(&q(1)).unwrap(), f.evaluate(&q(4)).unwrap());
        assert_eq!(f.evaluate(&q(0)), Err(Error::Pole(q(0))));
    }

    proptest! {
        #[test]
        fn expansion_ignores_factor_order(fs in prop::collection::vec((-5i64..5, -3i32..4), 0..6), seed in any::<u64>()) {
            let forward = fs.iter().fold(LinearFactorProduct::new(q(1)), |acc, &(s, e)| acc.with_factor(q(s), e));
            let mut shuffled = fs.clone();
            let len = shuffled.len();
            if len > 1 {
                shuffled.rotate_left((seed as usize) % len);
                shuffled.reverse();
            }
            let backward = shuffled.iter().fold(LinearFactorProduct::new(q(1)), |acc, &(s, e)| acc.with_factor(q(s), e));
            prop_assert_eq!(forward.expand(), backward.expand());
        }

        #[test]
        fn expansion_matches_direct_evaluation(fs in prop::collection::vec((-5i64..5, -3i32..4), 0..6), t in 6i64..20) {
            let f = fs.iter().fold(LinearFactorProduct::new(q(1)), |acc, &(s, e)| acc.with_factor(q(s), e));
            prop_assert_eq!(f.expand().evaluate(&q(t)).unwrap(), f.evaluate(&q(t)).unwrap());
        }
    }
}
