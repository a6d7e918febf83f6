use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_arith::Rational;

use super::MAX_WEIGHT;

const KEYS: [&str; 5] = ["c0", "z2", "z3", "z4", "z5"];

/// `c0 + c2 ζ(2) + c3 ζ(3) + c4 ζ(4) + c5 ζ(5)` with rational coefficients.
///
/// The basis is treated as free: two forms are equal iff all coefficients
/// agree.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ZetaLinearForm {
    // [c0, c2, c3, c4, c5]
    coeffs: [Rational; 5],
}

fn slot(s: u32) -> usize {
    assert!((2..=MAX_WEIGHT).contains(&s), "zeta argument {s} outside 2..=5");
    (s - 1) as usize
}

impl ZetaLinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = Self::zero();
        f.coeffs[0] = c;
        f
    }

    /// `c · ζ(s)` for `2 ≤ s ≤ 5`.
    pub fn zeta(s: u32, c: Rational) -> Self {
        let mut f = Self::zero();
        f.coeffs[slot(s)] = c;
        f
    }

    /// `c0 + c4 ζ(4)`.
    pub fn from_zeta4(c0: Rational, c4: Rational) -> Self {
        let mut f = Self::constant(c0);
        f.coeffs[slot(4)] = c4;
        f
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn set_constant(&mut self, c: Rational) {
        self.coeffs[0] = c;
    }

    pub fn zeta_coeff(&self, s: u32) -> &Rational {
        &self.coeffs[slot(s)]
    }

    pub fn set_zeta_coeff(&mut self, s: u32, c: Rational) {
        self.coeffs[slot(s)] = c;
    }

    /// Adds `c · ζ(2)²`, stored as `(5/2) c · ζ(4)`.
    pub fn add_zeta2_squared(&mut self, c: &Rational) {
        self.coeffs[slot(4)] += c * Rational::frac(5, 2);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when only `1` and `ζ(4)` carry nonzero coefficients.
    pub fn is_pure_weight_four(&self) -> bool {
        [2, 3, 5].iter().all(|&s| self.zeta_coeff(s).is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ZetaLinearForm { coeffs: std::array::from_fn(|i| &self.coeffs[i] * c) }
    }

    /// `(s, coefficient)` pairs with `s = 0` for the constant, skipping zeros.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (if i == 0 { 0 } else { i as u32 + 1 }, c))
    }
}

impl Add for &ZetaLinearForm {
    type Output = ZetaLinearForm;
    fn add(self, rhs: &ZetaLinearForm) -> ZetaLinearForm {
        ZetaLinearForm { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]) }
    }
}

impl Add for ZetaLinearForm {
    type Output = ZetaLinearForm;
    fn add(self, rhs: ZetaLinearForm) -> ZetaLinearForm {
        &self + &rhs
    }
}

impl Sub for &ZetaLinearForm {
    type Output = ZetaLinearForm;
    fn sub(self, rhs: &ZetaLinearForm) -> ZetaLinearForm {
        ZetaLinearForm { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]) }
    }
}

impl Sub for ZetaLinearForm {
    type Output = ZetaLinearForm;
    fn sub(self, rhs: ZetaLinearForm) -> ZetaLinearForm {
        &self - &rhs
    }
}

impl AddAssign<&ZetaLinearForm> for ZetaLinearForm {
    fn add_assign(&mut self, rhs: &ZetaLinearForm) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl AddAssign for ZetaLinearForm {
    fn add_assign(&mut self, rhs: ZetaLinearForm) {
        *self += &rhs;
    }
}

impl Mul<&Rational> for &ZetaLinearForm {
    type Output = ZetaLinearForm;
    fn mul(self, rhs: &Rational) -> ZetaLinearForm {
        self.scale(rhs)
    }
}

impl Neg for &ZetaLinearForm {
    type Output = ZetaLinearForm;
    fn neg(self) -> ZetaLinearForm {
        ZetaLinearForm { coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }
}

impl std::iter::Sum for ZetaLinearForm {
    fn sum<I: Iterator<Item = ZetaLinearForm>>(iter: I) -> Self {
        iter.fold(ZetaLinearForm::zero(), |mut acc, f| {
            acc += &f;
            acc
        })
    }
}

impl fmt::Display for ZetaLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.nonzero_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if s == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*zeta({s})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZetaLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ZetaLinearForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let present: Vec<usize> = (0..5).filter(|&i| !self.coeffs[i].is_zero()).collect();
        let mut map = serializer.serialize_map(Some(present.len()))?;
        for i in present {
            map.serialize_entry(KEYS[i], &self.coeffs[i])?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ZetaLinearForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct FormVisitor;

        impl<'de> Visitor<'de> for FormVisitor {
            type Value = ZetaLinearForm;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map with keys among c0, z2, z3, z4, z5")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut form = ZetaLinearForm::zero();
                while let Some(key) = access.next_key::<String>()? {
                    let idx = KEYS
                        .iter()
                        .position(|k| *k == key)
                        .ok_or_else(|| serde::de::Error::unknown_field(&key, &KEYS))?;
                    form.coeffs[idx] = access.next_value()?;
                }
                Ok(form)
            }
        }

        deserializer.deserialize_map(FormVisitor)
    }
}
