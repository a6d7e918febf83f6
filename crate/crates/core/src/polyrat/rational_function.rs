use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::Polynomial;

/// A reduced quotient of polynomials: numerator and denominator are coprime
/// and the denominator is monic.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = numerator.gcd(&denominator);
        let (num, _) = numerator.div_rem(&g)?;
        let (den, _) = denominator.div_rem(&g)?;
        Ok(Self::from_coprime(num, den))
    }

    /// Normalizes the denominator to be monic; the caller guarantees the parts
    /// are coprime.
    pub(crate) fn from_coprime(numerator: Polynomial, denominator: Polynomial) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        let lc = denominator.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RationalFunction { numerator, denominator };
        }
        let inv = lc.recip().expect("nonzero leading coefficient");
        RationalFunction { numerator: numerator.scale(&inv), denominator: denominator.scale(&inv) }
    }

    pub fn zero() -> Self {
        RationalFunction { numerator: Polynomial::zero(), denominator: Polynomial::one() }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { numerator: p, denominator: Polynomial::one() }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `deg(denominator) - deg(numerator)`; `None` for the zero function.
    pub fn degree_gap(&self) -> Option<i64> {
        let n = self.numerator.degree()? as i64;
        Some(self.denominator.degree().unwrap_or(0) as i64 - n)
    }

    pub fn is_proper(&self) -> bool {
        self.degree_gap().is_none_or(|g| g > 0)
    }

    pub fn evaluate(&self, t0: &Rational) -> Result<Rational> {
        let den = self.denominator.eval(t0);
        if den.is_zero() {
            return Err(Error::Pole(t0.clone()));
        }
        Ok(self.numerator.eval(t0) / den)
    }

    /// First derivative in reduced form.
    ///
    /// With `g = gcd(D, D')`, `r = D/g` and `s = D'/g`, the reduced derivative
    /// is `(N' r - N s) / (D r)`; the two parts are coprime whenever `N/D` is.
    pub fn derivative(&self) -> RationalFunction {
        let n = &self.numerator;
        let d = &self.denominator;
        if d.degree() == Some(0) {
            return Self::from_polynomial(n.derivative());
        }
        let dp = d.derivative();
        let g = d.gcd(&dp);
        let (r, _) = d.div_rem(&g).expect("gcd is nonzero");
        let (s, _) = dp.div_rem(&g).expect("gcd is nonzero");
        let num = &(&n.derivative() * &r) - &(n * &s);
        let den = d * &r;
        Self::from_coprime(num, den)
    }

    pub fn differentiate(&self, order: u32) -> Result<RationalFunction> {
        match order {
            1 => Ok(self.derivative()),
            2 => Ok(self.derivative().derivative()),
            _ => Err(Error::DerivativeOrder(order)),
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        let den = &self.denominator * &other.denominator;
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        let num = &self.numerator * &other.numerator;
        let den = &self.denominator * &other.denominator;
        Self::new(num, den).expect("nonzero denominator")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::LinearFactorProduct;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn construction_reduces() {
        // (t^2 - 1) / (2t + 2) = (t - 1)/2
        let f = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[2, 2])).unwrap();
        assert_eq!(f.denominator(), &poly(&[1]));
        assert_eq!(f.numerator(), &Polynomial::from_coeffs(vec![q(-1) / q(2), q(1) / q(2)]));
        assert_eq!(RationalFunction::new(poly(&[1]), Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_examples() {
        let t2 = RationalFunction::from_polynomial(poly(&[0, 0, 1]));
        assert_eq!(t2.derivative(), RationalFunction::from_polynomial(poly(&[0, 2])));

        let inv_t = RationalFunction::new(poly(&[1]), poly(&[0, 1])).unwrap();
        assert_eq!(inv_t.derivative(), RationalFunction::new(poly(&[-1]), poly(&[0, 0, 1])).unwrap());

        let prod = RationalFunction::from_polynomial(&poly(&[1, 1]) * &poly(&[2, 1]));
        assert_eq!(prod.derivative().evaluate(&q(1)).unwrap(), q(5));
        assert_eq!(prod.differentiate(3), Err(Error::DerivativeOrder(3)));
    }

    #[test]
    fn derivative_stays_reduced() {
        // 1 / (t^3 (t+1)^2): derivative denominator is t^4 (t+1)^3
        let f = LinearFactorProduct::new(q(1))
            .with_factor(q(0), -3)
            .with_factor(q(1), -2)
            .expand();
        let d = f.derivative();
        assert_eq!(d.denominator().degree(), Some(7));
        let again = RationalFunction::new(d.numerator().clone(), d.denominator().clone()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn evaluation() {
        let f = RationalFunction::from_polynomial(poly(&[0, 1, 1]));
        assert_eq!(f.evaluate(&q(2)).unwrap(), q(6));
        let inv_t = RationalFunction::new(poly(&[1]), poly(&[0, 1])).unwrap();
        assert_eq!(inv_t.evaluate(&q(0)), Err(Error::Pole(q(0))));
        let g = RationalFunction::new(poly(&[1]), poly(&[0, 1, 1])).unwrap();
        assert_eq!(g.evaluate(&q(1)).unwrap(), q(1) / q(2));
    }

    fn small_product() -> impl Strategy<Value = LinearFactorProduct> {
        (1i64..5, prop::collection::vec((-4i64..4, -2i32..3), 0..4)).prop_map(|(c, fs)| {
            fs.into_iter()
                .fold(LinearFactorProduct::new(q(c)), |acc, (s, e)| acc.with_factor(q(s), e))
        })
    }

    proptest! {
        #[test]
        fn product_rule(f in small_product(), g in small_product()) {
            let (f, g) = (f.expand(), g.expand());
            let lhs = f.mul(&g).derivative();
            let rhs = f.derivative().mul(&g).add(&f.mul(&g.derivative()));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
