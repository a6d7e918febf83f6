use crate::error::{Error, Result};
use crate::exact_arith::{binomial, harmonic, sign_power, Rational};

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k).expect("nonnegative upper index"))
}

/// Both sides of the closed evaluation of
/// `Σ_{i=1}^{n-3} (-1)^i / i · binom(n,i) binom(2n-m+i,n)`.
pub fn binomial_sum_sides(n: i64, m: i64) -> Result<(Rational, Rational)> {
    if n < 3 {
        return Err(Error::Range(format!("binomial-sum identity needs n ≥ 3, got {n}")));
    }
    if !(0..=n).contains(&m) {
        return Err(Error::Range(format!("binomial-sum identity needs 0 ≤ m ≤ n, got m = {m}")));
    }
    let mut lhs = Rational::zero();
    for i in 1..=n - 3 {
        lhs += sign_power(i) * binom(n, i) * binom(2 * n - m + i, n) / Rational::from(i);
    }

    let (nq, mq) = (Rational::from(n), Rational::from(m));
    let terms: [(i64, i32, i32); 17] = [
        (-4, 0, 1),
        (-4, 0, 2),
        (12, 1, 0),
        (30, 1, 1),
        (6, 1, 2),
        (-54, 2, 0),
        (-43, 2, 1),
        (-7, 2, 2),
        (70, 3, 0),
        (40, 3, 1),
        (4, 3, 2),
        (-54, 4, 0),
        (-19, 4, 1),
        (-1, 4, 2),
        (22, 5, 0),
        (4, 5, 1),
        (-4, 6, 0),
    ];
    let bracket: Rational = terms
        .iter()
        .map(|&(c, i, j)| Rational::from(c) * nq.pow(i).unwrap() * mq.pow(j).unwrap())
        .sum();
    let denom = Rational::from(2 * (n - 2) * (n - 1) * (n - 1) * n * n);
    let first = sign_power(n) * binom(3 * n - m - 2, n - 2) * bracket / denom;
    let (n_u, m_u) = (n as u64, m as u64);
    let harmonics = harmonic(1, 2 * n_u - m_u) + harmonic(1, n_u) - harmonic(1, n_u - m_u);
    let rhs = first - binom(2 * n - m, n) * harmonics;
    Ok((lhs, rhs))
}

pub fn binomial_sum_identity(n: i64, m: i64) -> Result<bool> {
    let (l, r) = binomial_sum_sides(n, m)?;
    Ok(l == r)
}
