use crate::apery_forms::FormParameters;
use crate::error::Result;
use crate::exact_arith::{factorial, pochhammer, sign_power, Rational};
use crate::zeta_forms::ZetaLinearForm;

fn poly(coeffs: &[i64], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, &c| acc * x + Rational::from(c))
}

fn cell(n: u32) -> FormParameters {
    FormParameters::new(n, 0).expect("m = 0 is always valid")
}

/// Right-hand side of the first-order inhomogeneous recurrence for `Z_l(n,0)`.
pub fn boundary_left_rhs(n: u32) -> Rational {
    let ni = n as i64;
    let nq = Rational::from(ni);
    let fact_n = Rational::from_integer(factorial(n as u64));
    let fact_2n1 = Rational::from_integer(factorial(2 * n as u64 + 1));
    let quartic = poly(&[831, 5265, 12601, 13499, 5460], &nq);
    let num = sign_power(ni)
        * fact_n.pow(8).unwrap()
        * pochhammer(&Rational::from(1 + 2 * ni), 2 * n as u64)
        * Rational::from(1 + 4 * ni)
        * quartic;
    -(num / (Rational::from(48) * fact_2n1.pow(5).unwrap()))
}

/// `-16 (2n+1)^4 Z_l(n,0) - (n+1)^4 Z_l(n+1,0)`.
pub fn boundary_left_lhs<F>(n: u32, mut z: F) -> Result<ZetaLinearForm>
where
    F: FnMut(FormParameters) -> Result<ZetaLinearForm>,
{
    let ni = n as i64;
    let a = Rational::from(-16) * Rational::from(2 * ni + 1).pow(4)?;
    let b = -Rational::from(ni + 1).pow(4)?;
    Ok(z(cell(n))?.scale(&a) + z(cell(n + 1))?.scale(&b))
}

pub fn check_boundary_rec_m0_left_with<F>(n: u32, z: F) -> Result<bool>
where
    F: FnMut(FormParameters) -> Result<ZetaLinearForm>,
{
    Ok(boundary_left_lhs(n, z)? == ZetaLinearForm::constant(boundary_left_rhs(n)))
}

/// The inhomogeneous `Z_l(·,0)` recurrence at `n`, using exact `Z_l`.
pub fn check_boundary_rec_m0_left(n: u32) -> Result<bool> {
    check_boundary_rec_m0_left_with(n, crate::apery_forms::zl_exact)
}

/// Coefficients `[c_n, c_{n+1}, c_{n+2}]` of the order-two recurrence for
/// `Z_r(·,0)`.
pub fn boundary_right_coeffs(n: u32) -> [Rational; 3] {
    let nq = Rational::from(n as i64);
    let lin = |a: i64, b: i64| Rational::from(a) * &nq + Rational::from(b);
    let c0 = Rational::from(16)
        * lin(1, 1).pow(3).unwrap()
        * lin(2, 1).pow(4).unwrap()
        * lin(4, 3)
        * lin(4, 5)
        * poly(&[37656, 92804, 85858, 35339, 5460], &nq);
    let c1 = poly(
        &[
            2094206184,
            25833166356,
            144869028586,
            488951050619,
            1108272850929,
            1782121652067,
            2092705983417,
            1818232366245,
            1169740743051,
            550778114541,
            184637211081,
            41762423804,
            5716680688,
            357913920,
        ],
        &nq,
    );
    let c2 = Rational::from(8)
        * lin(1, 2).pow(4).unwrap()
        * lin(2, 3).pow(5).unwrap()
        * poly(&[831, 5265, 12601, 13499, 5460], &nq);
    [c0, c1, c2]
}

/// `c_n Z(n,0) + c_{n+1} Z(n+1,0) + c_{n+2} Z(n+2,0)`.
pub fn boundary_right_residual<F>(n: u32, mut z: F) -> Result<ZetaLinearForm>
where
    F: FnMut(FormParameters) -> Result<ZetaLinearForm>,
{
    let [c0, c1, c2] = boundary_right_coeffs(n);
    Ok(z(cell(n))?.scale(&c0) + z(cell(n + 1))?.scale(&c1) + z(cell(n + 2))?.scale(&c2))
}

pub fn check_boundary_rec_m0_right_with<F>(n: u32, z: F) -> Result<bool>
where
    F: FnMut(FormParameters) -> Result<ZetaLinearForm>,
{
    let [c0, _, c2] = boundary_right_coeffs(n);
    Ok(!c0.is_zero() && !c2.is_zero() && boundary_right_residual(n, z)?.is_zero())
}

/// The homogeneous `Z_r(·,0)` recurrence at `n` together with nonvanishing
/// of its outer coefficients, using exact `Z_r`.
pub fn check_boundary_rec_m0_right(n: u32) -> Result<bool> {
    check_boundary_rec_m0_right_with(n, crate::apery_forms::zr_exact)
}

/// First `n ≤ bound` where an outer coefficient of the `Z_r(·,0)`
/// recurrence vanishes, if any.
pub fn boundary_right_coeff_scan(bound: u32) -> Option<u32> {
    (0..=bound).find(|&n| {
        let [c0, _, c2] = boundary_right_coeffs(n);
        c0.is_zero() || c2.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_rhs_at_zero() {
        assert_eq!(boundary_left_rhs(0), Rational::frac(-277, 16));
        assert!(check_boundary_rec_m0_left(0).unwrap());
        assert!(check_boundary_rec_m0_left(1).unwrap());
        let lhs = boundary_left_lhs(2, crate::apery_forms::zl_exact).unwrap();
        assert!(lhs.zeta_coeff(4).is_zero());
    }

    #[test]
    fn right_recurrence_small() {
        assert_eq!(boundary_right_coeffs(0)[0], Rational::from(16 * 3 * 5 * 37656));
        assert!(check_boundary_rec_m0_right(0).unwrap());
        assert!(check_boundary_rec_m0_right(1).unwrap());
        assert_eq!(boundary_right_coeff_scan(200), None);
    }
}
