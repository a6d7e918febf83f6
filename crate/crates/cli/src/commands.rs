use std::collections::BTreeMap;
use std::fmt;
use std::io;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use zeta4::apery_forms::{zl_exact, zr_exact, AuditOutcome, Auditor, FormParameters, SummandKind};
use zeta4::recurrence_lab::{main_recurrence_residual, run_suite, suite_cells, CheckRecord, FormGrid, Suite};
use zeta4::zeta_forms::eval_numeric;
use zeta4::ZetaLinearForm;

use crate::report::{emit, to_json, CellReport, ConfigEcho, Summary, VerificationReport, TOOL_VERSION};
use crate::{MMode, SuiteArg};

pub const MAX_DIGITS: u32 = 1000;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(zeta4::Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Math(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<zeta4::Error> for CliError {
    fn from(e: zeta4::Error) -> Self {
        CliError::Math(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<bool, CliError>;

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    if jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j);
    }
    b.build().map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))
}

fn cells_for(n_max: u32, mode: MMode) -> Vec<FormParameters> {
    FormParameters::grid(n_max)
        .filter(|p| match mode {
            MMode::All => true,
            MMode::Zero => p.m() == 0,
            MMode::One => p.m() == 1,
            MMode::Diagonal => p.m() == p.n(),
        })
        .collect()
}

struct Computed {
    p: FormParameters,
    zl: ZetaLinearForm,
    zr: ZetaLinearForm,
    elapsed_ms: u64,
}

fn compute_cells(cells: &[FormParameters], jobs: Option<usize>) -> Result<Vec<Computed>, CliError> {
    let results: Vec<zeta4::Result<Computed>> = pool(jobs)?.install(|| {
        cells
            .par_iter()
            .map(|&p| {
                let t = Instant::now();
                let zl = zl_exact(p)?;
                let zr = zr_exact(p)?;
                Ok(Computed { p, zl, zr, elapsed_ms: t.elapsed().as_millis() as u64 })
            })
            .collect()
    });
    let mut out = results.into_iter().collect::<zeta4::Result<Vec<_>>>()?;
    out.sort_by_key(|c| c.p);
    Ok(out)
}

pub fn verify_identity(
    n_max: u32,
    mode: MMode,
    jobs: Option<usize>,
    json_path: Option<&Path>,
    csv_path: Option<&Path>,
    profile: bool,
) -> CliResult {
    let cells = cells_for(n_max, mode);
    let computed = compute_cells(&cells, jobs)?;

    let mut grid = FormGrid::new();
    for c in &computed {
        grid.insert(c.p, c.zl.clone(), c.zr.clone());
    }
    let full_rows = mode == MMode::All;
    let mut reports = Vec::with_capacity(computed.len());
    for c in &computed {
        let (n, m) = (c.p.n(), c.p.m());
        let recurrence_pass = if full_rows && m + 2 <= n {
            let l = main_recurrence_residual(n, m, |p| grid.left(p))?;
            let r = main_recurrence_residual(n, m, |p| grid.right(p))?;
            Some(l.is_zero() && r.is_zero())
        } else {
            None
        };
        reports.push(CellReport {
            n,
            m,
            zl: c.zl.clone(),
            zr: c.zr.clone(),
            identity_pass: c.zl == c.zr,
            recurrence_pass,
            elapsed_ms: profile.then_some(c.elapsed_ms),
        });
    }

    let mut echo = ConfigEcho::new();
    echo.insert("command", json!("verify-identity"));
    echo.insert("nMax", json!(n_max));
    echo.insert("mMode", json!(format!("{mode:?}").to_lowercase()));
    let report = VerificationReport::new(echo, reports);

    emit(&to_json(&report), json_path)?;
    if let Some(p) = csv_path {
        emit(&report.to_csv(), Some(p))?;
    }
    if json_path.is_some() {
        let s = &report.summary;
        println!("verify-identity: {} cells, {} passed, {} failed", s.total, s.passed, s.failed);
    }
    Ok(report.summary.failed == 0)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RecurrenceReport {
    tool_version: &'static str,
    config_echo: ConfigEcho,
    records: Vec<CheckRecord>,
    summary: Summary,
}

fn suite_of(arg: SuiteArg) -> Suite {
    match arg {
        SuiteArg::Main => Suite::Main,
        SuiteArg::BoundaryM0 => Suite::BoundaryM0,
        SuiteArg::BoundaryZr => Suite::BoundaryZr,
        SuiteArg::ClosedForms => Suite::ClosedForms,
        SuiteArg::BinomIdentity => Suite::BinomIdentity,
        SuiteArg::All => Suite::All,
    }
}

pub fn verify_recurrences(suite: SuiteArg, n_max: u32, jobs: Option<usize>, json_path: Option<&Path>) -> CliResult {
    let suite = suite_of(suite);
    let computed = compute_cells(&suite_cells(suite, n_max), jobs)?;
    let mut grid = FormGrid::new();
    for c in computed {
        grid.insert(c.p, c.zl, c.zr);
    }
    let mut matrix = run_suite(suite, n_max, &mut grid)?;
    matrix.sort();

    let mut echo = ConfigEcho::new();
    echo.insert("command", json!("verify-recurrences"));
    echo.insert("suite", json!(suite.to_string()));
    echo.insert("nMax", json!(n_max));
    let summary = Summary::from_flags(matrix.records.iter().map(|r| r.passed));
    let report = RecurrenceReport { tool_version: TOOL_VERSION, config_echo: echo, records: matrix.records, summary };

    emit(&to_json(&report), json_path)?;
    let s = &report.summary;
    if json_path.is_some() {
        println!("verify-recurrences {suite}: {} checks, {} passed, {} failed", s.total, s.passed, s.failed);
    }
    for r in report.records.iter().filter(|r| !r.passed) {
        let m = r.m.map_or(String::new(), |m| format!(", m = {m}"));
        eprintln!("failed: {:?} at n = {}{m}", r.check, r.n);
    }
    Ok(s.failed == 0)
}

pub fn eval(n: u32, m: u32, digits: u32, as_json: bool) -> CliResult {
    if m > n {
        return Err(CliError::Usage(format!("--m {m} exceeds --n {n}; the forms need 0 <= m <= n")));
    }
    if digits > MAX_DIGITS {
        return Err(CliError::Usage(format!("--digits {digits} exceeds the limit {MAX_DIGITS}")));
    }
    let p = FormParameters::new(n, m)?;
    let zl = zl_exact(p)?;
    let zr = zr_exact(p)?;
    let value = eval_numeric(&zl, digits).to_decimal_string(digits);
    let identity = zl == zr;
    if as_json {
        let out = json!({
            "n": n,
            "m": m,
            "zl": zl,
            "zr": zr,
            "identityPass": identity,
            "digits": digits,
            "value": value,
        });
        print!("{}", to_json(&out));
    } else {
        println!("Z({n},{m}) = {zl}");
        println!("c0 = {}", zl.constant_term());
        println!("c4 = {}", zl.zeta_coeff(4));
        println!("value = {value}");
        println!("identity = {}", if identity { "pass" } else { "FAIL" });
    }
    Ok(identity)
}

/// Draws one in-range `(kind, j, ν)` for cell `p`. `F1` and `G1` sample
/// `ν` from `1..=n+6`.
fn sample_point(rng: &mut ChaCha8Rng, p: FormParameters) -> (SummandKind, u32, i64) {
    let n = p.n();
    let kinds: Vec<SummandKind> = SummandKind::ALL
        .into_iter()
        .filter(|k| n >= 1 || matches!(k, SummandKind::F1 | SummandKind::G1))
        .collect();
    let kind = kinds[rng.random_range(0..kinds.len())];
    let (j, nu) = match kind {
        SummandKind::F1 => (0, rng.random_range(1..=n as i64 + 6)),
        SummandKind::F2 => (0, rng.random_range(1..=n as i64)),
        SummandKind::G1 => (rng.random_range(0..=n), rng.random_range(1..=n as i64 + 6)),
        SummandKind::G2 => {
            let j = rng.random_range(0..n);
            (j, rng.random_range(j as i64 + 1..=n as i64))
        }
        SummandKind::G3 => {
            let j = rng.random_range(1..=n);
            (j, rng.random_range(1..=j as i64))
        }
    };
    (kind, j, nu)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AuditReport {
    tool_version: &'static str,
    config_echo: ConfigEcho,
    points_by_kind: BTreeMap<SummandKind, usize>,
    mismatches: Vec<AuditOutcome>,
    summary: Summary,
}

pub fn summand_audit(n_max: u32, samples: u32, seed: u64, jobs: Option<usize>, json_path: Option<&Path>) -> CliResult {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let cells: Vec<FormParameters> = FormParameters::grid(n_max).collect();
    let per_cell: Vec<zeta4::Result<Vec<AuditOutcome>>> = pool(jobs)?.install(|| {
        cells
            .par_iter()
            .map(|&p| {
                // one stream per cell keeps draws independent of scheduling
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(((p.n() as u64) << 32) | p.m() as u64);
                let mut auditor = Auditor::new();
                (0..samples)
                    .map(|_| {
                        let (kind, j, nu) = sample_point(&mut rng, p);
                        auditor.audit(kind, p, j, nu)
                    })
                    .collect()
            })
            .collect()
    });
    let outcomes: Vec<AuditOutcome> =
        per_cell.into_iter().collect::<zeta4::Result<Vec<_>>>()?.into_iter().flatten().collect();

    let mut points_by_kind = BTreeMap::new();
    for o in &outcomes {
        *points_by_kind.entry(o.kind).or_insert(0) += 1;
    }
    let summary = Summary::from_flags(outcomes.iter().map(|o| o.agree));
    let mismatches: Vec<AuditOutcome> = outcomes.into_iter().filter(|o| !o.agree).collect();

    let mut echo = ConfigEcho::new();
    echo.insert("command", json!("summand-audit"));
    echo.insert("nMax", json!(n_max));
    echo.insert("samples", json!(samples));
    echo.insert("seed", json!(seed));
    let report = AuditReport { tool_version: TOOL_VERSION, config_echo: echo, points_by_kind, mismatches, summary };

    emit(&to_json(&report), json_path)?;
    let s = &report.summary;
    if json_path.is_some() {
        println!("summand-audit: {} points, {} agree, {} mismatch", s.total, s.passed, s.failed);
    }
    Ok(s.failed == 0)
}
