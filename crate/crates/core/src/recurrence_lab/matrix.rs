use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apery_forms::FormParameters;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::binomial::binomial_sum_identity;
use super::boundary::{
    boundary_right_coeff_scan, check_boundary_rec_m0_left_with, check_boundary_rec_m0_right_with,
};
use super::closed_forms::closed_form_rows;
use super::coefficients::{a2_zero_scan, main_recurrence_residual};
use super::grid::FormGrid;
use super::linear_time::linear_time_evaluate;

/// Upper bound of the `a2 ≠ 0` scan.
pub const A2_SCAN_BOUND: i64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    MainRecurrenceLeft,
    MainRecurrenceRight,
    A2Nonzero,
    BoundaryM0Left,
    BoundaryM0Right,
    BoundaryM0RightCoefficients,
    ClosedFormM0,
    ClosedFormM1,
    ClosedFormM1Normalized,
    LinearTime,
    BinomialIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: CheckKind,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Pass/fail per check per cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationMatrix {
    pub records: Vec<CheckRecord>,
}

impl VerificationMatrix {
    pub fn push(&mut self, check: CheckKind, n: u32, m: Option<u32>, passed: bool, detail: Option<String>) {
        self.records.push(CheckRecord { check, n, m, passed, detail });
    }

    pub fn extend(&mut self, other: VerificationMatrix) {
        self.records.extend(other.records);
    }

    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn of_kind(&self, kind: CheckKind) -> impl Iterator<Item = &CheckRecord> + '_ {
        self.records.iter().filter(move |r| r.check == kind)
    }

    /// Orders records by check, then `(n, m)`.
    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| (a.check, a.n, a.m).cmp(&(b.check, b.n, b.m)));
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Main,
    BoundaryM0,
    BoundaryZr,
    ClosedForms,
    BinomIdentity,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["main", "boundary-m0", "boundary-zr", "closed-forms", "binom-identity", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Main,
                Suite::BoundaryM0,
                Suite::BoundaryZr,
                Suite::ClosedForms,
                Suite::BinomIdentity,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "main" => Suite::Main,
            "boundary-m0" => Suite::BoundaryM0,
            "boundary-zr" => Suite::BoundaryZr,
            "closed-forms" => Suite::ClosedForms,
            "binom-identity" => Suite::BinomIdentity,
            "all" => Suite::All,
            _ => return Err(Error::Range(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Main, Suite::BoundaryM0, Suite::BoundaryZr, Suite::ClosedForms, Suite::BinomIdentity, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

/// Cells whose exact forms a suite reads, so callers can precompute them.
pub fn suite_cells(suite: Suite, n_max: u32) -> Vec<FormParameters> {
    let mut cells = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::Main | Suite::ClosedForms => cells.extend(FormParameters::grid(n_max)),
            Suite::BoundaryM0 => cells.extend((0..=n_max + 1).map(|n| FormParameters::new(n, 0).unwrap())),
            Suite::BoundaryZr => cells.extend((0..=n_max + 2).map(|n| FormParameters::new(n, 0).unwrap())),
            _ => {}
        }
    }
    cells.sort();
    cells.dedup();
    cells
}

fn describe(form: &crate::ZetaLinearForm) -> Option<String> {
    (!form.is_zero()).then(|| format!("residual {form}"))
}

/// Runs the checks of `suite` for indices up to `n_max`, reading exact forms
/// from `grid`.
pub fn run_suite(suite: Suite, n_max: u32, grid: &mut FormGrid) -> Result<VerificationMatrix> {
    let mut out = VerificationMatrix::default();
    for part in suite.parts() {
        match part {
            Suite::Main => {
                for n in 2..=n_max {
                    for m in 0..=n - 2 {
                        let l = main_recurrence_residual(n, m, |p| grid.left(p))?;
                        out.push(CheckKind::MainRecurrenceLeft, n, Some(m), l.is_zero(), describe(&l));
                        let r = main_recurrence_residual(n, m, |p| grid.right(p))?;
                        out.push(CheckKind::MainRecurrenceRight, n, Some(m), r.is_zero(), describe(&r));
                    }
                }
                let zero = a2_zero_scan(A2_SCAN_BOUND);
                let detail = zero.map(|(n, m)| format!("a2 vanishes at ({n}, {m})"));
                out.push(CheckKind::A2Nonzero, A2_SCAN_BOUND as u32, None, zero.is_none(), detail);
            }
            Suite::BoundaryM0 => {
                for n in 0..=n_max {
                    let ok = check_boundary_rec_m0_left_with(n, |p| grid.left(p))?;
                    out.push(CheckKind::BoundaryM0Left, n, None, ok, None);
                }
            }
            Suite::BoundaryZr => {
                for n in 0..=n_max {
                    let ok = check_boundary_rec_m0_right_with(n, |p| grid.right(p))?;
                    out.push(CheckKind::BoundaryM0Right, n, None, ok, None);
                }
                let bound = (A2_SCAN_BOUND as u32).max(n_max);
                let zero = boundary_right_coeff_scan(bound);
                let detail = zero.map(|n| format!("outer coefficient vanishes at n = {n}"));
                out.push(CheckKind::BoundaryM0RightCoefficients, bound, None, zero.is_none(), detail);
            }
            Suite::ClosedForms => {
                for (n, (m0, m1)) in closed_form_rows(n_max as u64).into_iter().enumerate() {
                    let n = n as u32;
                    let zl0 = grid.left(FormParameters::new(n, 0)?)?;
                    let d = describe(&(&m0 - &zl0));
                    out.push(CheckKind::ClosedFormM0, n, Some(0), d.is_none(), d);
                    if let Some(m1) = m1 {
                        let zl1 = grid.left(FormParameters::new(n, 1)?)?;
                        let d = describe(&(&m1 - &zl1));
                        out.push(CheckKind::ClosedFormM1, n, Some(1), d.is_none(), d);
                        let d = describe(&(m1.scale(&Rational::frac(-1, 3)) - zl1));
                        out.push(CheckKind::ClosedFormM1Normalized, n, Some(1), d.is_none(), d);
                    }
                }
                if n_max >= 2 {
                    for (p, z) in linear_time_evaluate(n_max)? {
                        let d = describe(&(&z - &grid.left(p)?));
                        out.push(CheckKind::LinearTime, p.n(), Some(p.m()), d.is_none(), d);
                    }
                }
            }
            Suite::BinomIdentity => {
                for n in 3..=n_max {
                    for m in 0..=n - 2 {
                        let ok = binomial_sum_identity(n as i64, m as i64)?;
                        out.push(CheckKind::BinomialIdentity, n, Some(m), ok, None);
                    }
                }
            }
            Suite::All => unreachable!("expanded by parts()"),
        }
    }
    Ok(out)
}
