use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::{Polynomial, RationalFunction};

/// `polynomial_part + Σ_{p,j} A_{p,j} / (t + p)^j`.
///
/// `terms[p][j-1]` holds `A_{p,j}`; the last entry of every list is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialFractions {
    polynomial_part: Polynomial,
    terms: BTreeMap<Rational, Vec<Rational>>,
}

impl PartialFractions {
    /// Decomposes `f`, whose denominator must split into linear factors
    /// `t + p` with every `p` among `candidates`.
    ///
    /// Laurent coefficients at each pole come from the low Taylor coefficients
    /// of the numerator and of the cofactor `D / (t+p)^e`, followed by a
    /// truncated series division. The reconstruction identity is checked on
    /// every call.
    pub fn decompose(f: &RationalFunction, candidates: &[Rational]) -> Result<Self> {
        let den = f.denominator();
        let (polynomial_part, rem) = f.numerator().div_rem(den)?;

        let mut leftover = den.clone();
        let mut orders: Vec<(Rational, usize)> = Vec::new();
        for p in candidates {
            if orders.iter().any(|(q, _)| q == p) {
                continue;
            }
            let mut e = 0;
            loop {
                let (quot, r) = leftover.div_linear(p);
                if !r.is_zero() {
                    break;
                }
                leftover = quot;
                e += 1;
            }
            if e > 0 {
                orders.push((p.clone(), e));
            }
        }
        if let Some(d) = leftover.degree().filter(|&d| d > 0) {
            return Err(Error::Factorization { degree: d });
        }

        let mut terms = BTreeMap::new();
        if !rem.is_zero() {
            for (p, e) in &orders {
                let mut cofactor = den.clone();
                for _ in 0..*e {
                    cofactor = cofactor.div_linear(p).0;
                }
                let series = series_quotient(&rem.taylor_coeffs(p, *e), &cofactor.taylor_coeffs(p, *e))?;
                let mut coeffs: Vec<Rational> = series.into_iter().rev().collect();
                while coeffs.last().is_some_and(Rational::is_zero) {
                    coeffs.pop();
                }
                if !coeffs.is_empty() {
                    terms.insert(p.clone(), coeffs);
                }
            }
        }

        let pf = PartialFractions { polynomial_part, terms };
        if !pf.reconstructs(f) {
            return Err(Error::Reconstruction);
        }
        Ok(pf)
    }

    pub fn polynomial_part(&self) -> &Polynomial {
        &self.polynomial_part
    }

    pub fn terms(&self) -> &BTreeMap<Rational, Vec<Rational>> {
        &self.terms
    }

    /// Iterates `(p, j, A_{p,j})` over nonzero coefficients.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Rational, u32, &Rational)> + '_ {
        self.terms.iter().flat_map(|(p, cs)| {
            cs.iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(move |(i, a)| (p, i as u32 + 1, a))
        })
    }

    pub fn max_order(&self) -> usize {
        self.terms.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Checks `polynomial_part · D + Σ A_{p,j} · D/(t+p)^j = N` exactly.
    pub fn reconstructs(&self, f: &RationalFunction) -> bool {
        let den = f.denominator();
        let mut acc = &self.polynomial_part * den;
        for (p, coeffs) in &self.terms {
            let mut cof = den.clone();
            for a in coeffs {
                let (q, r) = cof.div_linear(p);
                if !r.is_zero() {
                    return false;
                }
                cof = q;
                acc = &acc + &cof.scale(a);
            }
        }
        &acc == f.numerator()
    }
}

/// First `num.len()` coefficients of the power series `num / den`.
fn series_quotient(num: &[Rational], den: &[Rational]) -> Result<Vec<Rational>> {
    let inv = den[0].recip()?;
    let mut out: Vec<Rational> = Vec::with_capacity(num.len());
    for k in 0..num.len() {
        let mut acc = num[k].clone();
        for i in 1..=k {
            acc -= &den[i] * &out[k - i];
        }
        out.push(acc * &inv);
    }
    Ok(out)
}

impl fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.polynomial_part.is_zero() {
            write!(f, "{}", self.polynomial_part)?;
            first = false;
        }
        for (p, j, a) in self.iter_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{a}/(t+{p})^{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::LinearFactorProduct;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn simple_poles() {
        let f = RationalFunction::new(poly(&[1]), poly(&[0, 1, 1])).unwrap();
        let pf = PartialFractions::decompose(&f, &[q(0), q(1)]).unwrap();
        assert!(pf.polynomial_part().is_zero());
        assert_eq!(pf.terms()[&q(0)], vec![q(1)]);
        assert_eq!(pf.terms()[&q(1)], vec![q(-1)]);
        assert_eq!(pf.to_string(), "1/(t+0)^1 + -1/(t+1)^1");
    }

    #[test]
    fn double_pole() {
        // (2t+1)/(t^2 (t+1)) = 1/t^2 + 1/t - 1/(t+1), solved by matching
        // coefficients of A(t)(t+1) + B(t+1) + C t^2 = 2t + 1.
        let f = RationalFunction::new(poly(&[1, 2]), poly(&[0, 0, 1, 1])).unwrap();
        let pf = PartialFractions::decompose(&f, &[q(0), q(1)]).unwrap();
        assert_eq!(pf.terms()[&q(0)], vec![q(1), q(1)]);
        assert_eq!(pf.terms()[&q(1)], vec![q(-1)]);
    }

    #[test]
    fn polynomial_part_is_split_off() {
        // (t^3 + 1) / t = t^2 + 1/t
        let f = RationalFunction::new(poly(&[1, 0, 0, 1]), poly(&[0, 1])).unwrap();
        let pf = PartialFractions::decompose(&f, &[q(0)]).unwrap();
        assert_eq!(pf.polynomial_part(), &poly(&[0, 0, 1]));
        assert_eq!(pf.terms()[&q(0)], vec![q(1)]);
    }

    #[test]
    fn missing_candidate_is_an_error() {
        let f = RationalFunction::new(poly(&[1]), poly(&[2, 3, 1])).unwrap();
        assert_eq!(
            PartialFractions::decompose(&f, &[q(1)]),
            Err(Error::Factorization { degree: 1 })
        );
        let irreducible = RationalFunction::new(poly(&[1]), poly(&[1, 0, 1])).unwrap();
        assert_eq!(
            PartialFractions::decompose(&irreducible, &[q(0)]),
            Err(Error::Factorization { degree: 2 })
        );
    }

    #[test]
    fn half_integer_pole() {
        let f = LinearFactorProduct::new(q(1))
            .with_factor(Rational::frac(1, 2), -2)
            .with_factor(q(3), 1)
            .expand();
        let pf = PartialFractions::decompose(&f, &[Rational::frac(1, 2)]).unwrap();
        assert!(pf.reconstructs(&f));
        assert_eq!(pf.max_order(), 2);
    }

    proptest! {
        #[test]
        fn reconstruction_invariant(
            num in prop::collection::vec((-6i64..6, 1i32..3), 0..5),
            den in prop::collection::vec((0i64..6, 1i32..4), 1..5),
            c in 1i64..9,
        ) {
            let mut f = LinearFactorProduct::new(q(c));
            for &(s, e) in &num { f.push_factor(q(s), e); }
            for &(s, e) in &den { f.push_factor(q(s), -e); }
            let rf = f.expand();
            let cands: Vec<Rational> = (0..6).map(q).collect();
            let pf = PartialFractions::decompose(&rf, &cands).unwrap();
            prop_assert!(pf.reconstructs(&rf));
            for cs in pf.terms().values() {
                prop_assert!(!cs.last().unwrap().is_zero());
            }
        }
    }
}
