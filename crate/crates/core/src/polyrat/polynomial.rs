use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Dense polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `t + shift`.
    pub fn linear(shift: Rational) -> Self {
        Self::from_coeffs(vec![shift, Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip().expect("leading coefficient is nonzero")),
        }
    }

    /// Multiplies in place by `t + shift`.
    pub fn mul_linear_assign(&mut self, shift: &Rational) {
        if self.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(&self.coeffs[0] * shift);
        for i in 1..self.coeffs.len() {
            out.push(&self.coeffs[i - 1] + &self.coeffs[i] * shift);
        }
        out.push(self.coeffs.last().unwrap().clone());
        self.coeffs = out;
    }

    /// Synthetic division by `t + shift`: returns the quotient and `p(-shift)`.
    pub fn div_linear(&self, shift: &Rational) -> (Polynomial, Rational) {
        if self.is_zero() {
            return (Self::zero(), Rational::zero());
        }
        let root = -shift;
        let n = self.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            carry = &self.coeffs[i] + &carry * &root;
            if i > 0 {
                quotient[i - 1] = carry.clone();
            }
        }
        (Polynomial::from_coeffs(quotient), carry)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lc = divisor.leading().unwrap().recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &inv_lc;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// The first `count` Taylor coefficients of `p` about `t = -shift`, i.e.
    /// the low coefficients of `p(s - shift)` as a polynomial in `s`.
    pub fn taylor_coeffs(&self, shift: &Rational, count: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(count);
        let mut cur = self.clone();
        for _ in 0..count {
            let (q, r) = cur.div_linear(shift);
            out.push(r);
            cur = q;
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn linear_multiplication_and_division() {
        let mut p = poly(&[2]);
        p.mul_linear_assign(&Rational::from(1));
        p.mul_linear_assign(&Rational::from(2));
        assert_eq!(p, poly(&[4, 6, 2]));
        let (q, r) = p.div_linear(&Rational::from(1));
        assert_eq!(q, poly(&[4, 2]));
        assert!(r.is_zero());
        let (_, r) = p.div_linear(&Rational::from(0));
        assert_eq!(r, Rational::from(4));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[5, -3, 0, 7, 1]);
        let b = poly(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap() < 2);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(a.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_of_products() {
        let a = &poly(&[1, 1]) * &poly(&[2, 1]);
        let b = &poly(&[1, 1]) * &poly(&[3, 1]);
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
        assert_eq!(poly(&[2]).gcd(&poly(&[0, 1])), poly(&[1]));
    }

    #[test]
    fn taylor_coefficients_at_a_point() {
        // t^2 about t = 1: (s+1)^2 = 1 + 2s + s^2
        let p = poly(&[0, 0, 1]);
        let c = p.taylor_coeffs(&Rational::from(-1), 3);
        assert_eq!(c, vec![Rational::from(1), Rational::from(2), Rational::from(1)]);
    }

    #[test]
    fn derivative_and_eval() {
        let p = poly(&[2, 3, 1]);
        assert_eq!(p.derivative(), poly(&[3, 2]));
        assert_eq!(p.eval(&Rational::from(2)), Rational::from(12));
    }
}
