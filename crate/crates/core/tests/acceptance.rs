//! Acceptance gate: runs every criterion and prints one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeta4::apery_forms::{
    truncated_numeric, zl_exact, zr_exact, Auditor, FormParameters, Side, SummandKind,
};
use zeta4::recurrence_lab::{
    a2_zero_scan, binomial_sum_identity, binomial_sum_sides, boundary_right_coeff_scan,
    check_boundary_rec_m0_left_with, check_boundary_rec_m0_right_with, closed_form_rows,
    main_recurrence_residual, FormGrid,
};
use zeta4::zeta_forms::eval_numeric;
use zeta4::{Rational, ZetaLinearForm};

const GRID_N: u32 = 20;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn cell(n: u32, m: u32) -> FormParameters {
    FormParameters::new(n, m).unwrap()
}

struct Grid {
    forms: FormGrid,
    timings: Vec<(FormParameters, Duration)>,
    mismatches: Vec<FormParameters>,
    impure: Vec<FormParameters>,
    total: Duration,
}

fn compute_grid() -> Grid {
    let mut forms = FormGrid::new();
    let mut timings = Vec::new();
    let mut mismatches = Vec::new();
    let mut impure = Vec::new();
    let start = Instant::now();
    for p in FormParameters::grid(GRID_N) {
        let t = Instant::now();
        let zl = zl_exact(p).unwrap();
        let zr = zr_exact(p).unwrap();
        timings.push((p, t.elapsed()));
        if zl != zr {
            mismatches.push(p);
        }
        if !zl.is_pure_weight_four() || !zr.is_pure_weight_four() {
            impure.push(p);
        }
        forms.insert(p, zl, zr);
    }
    Grid { forms, timings, mismatches, impure, total: start.elapsed() }
}

fn print_timings(grid: &Grid) {
    println!("per-cell timings (ms, zl + zr), one row per n:");
    for n in 0..=GRID_N {
        let row: Vec<String> = grid
            .timings
            .iter()
            .filter(|(p, _)| p.n() == n)
            .map(|(_, d)| d.as_millis().to_string())
            .collect();
        println!("  n={n:>2}: {}", row.join(" "));
    }
}

fn criterion_identity(grid: &Grid) -> Outcome {
    let cells = grid.timings.len();
    let slowest = grid.timings.iter().max_by_key(|(_, d)| *d).unwrap();
    let in_budget = grid.total < Duration::from_secs(600);
    outcome(
        cells == 231 && grid.mismatches.is_empty() && in_budget,
        format!(
            "{cells} cells, {} mismatches, total {:.1}s, slowest {} at {}ms",
            grid.mismatches.len(),
            grid.total.as_secs_f64(),
            slowest.0,
            slowest.1.as_millis()
        ),
    )
}

fn criterion_initial_values(grid: &mut Grid) -> Outcome {
    let expected = [
        ((0, 0), ZetaLinearForm::from_zeta4(Rational::zero(), Rational::one())),
        ((1, 0), ZetaLinearForm::from_zeta4(Rational::frac(277, 16), Rational::from(-16))),
        ((1, 1), ZetaLinearForm::from_zeta4(Rational::from(-13), Rational::from(12))),
        ((2, 1), ZetaLinearForm::from_zeta4(Rational::frac(4090247, 1944), Rational::from(-1944))),
    ];
    let mut bad = Vec::new();
    for ((n, m), want) in &expected {
        let p = cell(*n, *m);
        if grid.forms.left(p).unwrap() != *want || grid.forms.right(p).unwrap() != *want {
            bad.push(p.to_string());
        }
    }
    outcome(bad.is_empty(), format!("4 values checked on both sides, mismatches: [{}]", bad.join(", ")))
}

fn criterion_purity(grid: &Grid) -> Outcome {
    outcome(
        grid.impure.is_empty(),
        format!("{} cells, {} with nonzero zeta(2), zeta(3) or zeta(5)", grid.timings.len(), grid.impure.len()),
    )
}

fn criterion_main_recurrence(grid: &mut Grid) -> Outcome {
    let mut checked = 0;
    let mut failed = Vec::new();
    for n in 2..=GRID_N {
        for m in 0..=n - 2 {
            let l = main_recurrence_residual(n, m, |p| grid.forms.left(p)).unwrap();
            let r = main_recurrence_residual(n, m, |p| grid.forms.right(p)).unwrap();
            checked += 2;
            if !l.is_zero() || !r.is_zero() {
                failed.push(cell(n, m).to_string());
            }
        }
    }
    let zero = a2_zero_scan(200);
    outcome(
        failed.is_empty() && zero.is_none(),
        format!(
            "{checked} recurrence checks, {} failing cells; a2 scan to n = 200: {}",
            failed.len(),
            zero.map_or("nonzero throughout".to_string(), |z| format!("vanishes at {z:?}"))
        ),
    )
}

fn criterion_closed_forms(grid: &mut Grid) -> Outcome {
    let rows = closed_form_rows(15);
    let mut m0_bad = Vec::new();
    let mut m1_bad = Vec::new();
    let mut m1_is_minus_three = true;
    for (n, (m0, m1)) in rows.into_iter().enumerate() {
        let n = n as u32;
        if m0 != grid.forms.left(cell(n, 0)).unwrap() {
            m0_bad.push(n);
        }
        if let Some(m1) = m1 {
            let zl = grid.forms.left(cell(n, 1)).unwrap();
            if m1 != zl {
                m1_bad.push(n);
            }
            m1_is_minus_three &= m1 == zl.scale(&Rational::from(-3));
        }
    }
    let mut detail = format!(
        "m = 0: {} of 16 mismatch; m = 1: {} of 15 mismatch",
        m0_bad.len(),
        m1_bad.len()
    );
    if !m1_bad.is_empty() && m1_is_minus_three {
        detail.push_str(" (printed m = 1 expression equals -3 Z_l(n,1) for every n; scaled by -1/3 it matches)");
    }
    outcome(m0_bad.is_empty() && m1_bad.is_empty(), detail)
}

fn criterion_boundary(grid: &mut Grid) -> Outcome {
    let left_bad: Vec<u32> = (0..=12)
        .filter(|&n| !check_boundary_rec_m0_left_with(n, |p| grid.forms.left(p)).unwrap())
        .collect();
    let right_bad: Vec<u32> = (0..=10)
        .filter(|&n| !check_boundary_rec_m0_right_with(n, |p| grid.forms.right(p)).unwrap())
        .collect();
    let coeff_zero = boundary_right_coeff_scan(200);
    outcome(
        left_bad.is_empty() && right_bad.is_empty() && coeff_zero.is_none(),
        format!(
            "left n = 0..=12 failures {left_bad:?}; right n = 0..=10 failures {right_bad:?}; outer coefficients nonzero to n = 200: {}",
            coeff_zero.is_none()
        ),
    )
}

fn criterion_binomial() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 3..=50i64 {
        for m in 0..=n - 2 {
            checked += 1;
            if !binomial_sum_identity(n, m).unwrap() {
                bad.push((n, m));
            }
        }
    }
    let (l, r) = binomial_sum_sides(3, 0).unwrap();
    let base = l.is_zero() && r.is_zero();
    outcome(
        bad.is_empty() && base,
        format!("{checked} cells, failures {bad:?}; (3,0) sides {l} = {r}"),
    )
}

fn criterion_summand_audit() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_604);
    let mut auditor = Auditor::new();
    let mut points = 0;
    let mut per_kind = [0usize; 5];
    let mut bad = Vec::new();
    for p in FormParameters::grid(10) {
        let n = p.n();
        let available: Vec<SummandKind> =
            SummandKind::ALL.into_iter().filter(|k| match k {
                SummandKind::F2 | SummandKind::G2 | SummandKind::G3 => n >= 1,
                _ => true,
            }).collect();
        for _ in 0..8 {
            let kind = available[rng.random_range(0..available.len())];
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
            let out = auditor.audit(kind, p, j, nu).unwrap();
            points += 1;
            per_kind[kind as usize] += 1;
            if !out.agree {
                bad.push(format!("{kind}{p} j={j} nu={nu}"));
            }
        }
    }
    outcome(
        points >= 500 && bad.is_empty(),
        format!(
            "{points} points (F1 {}, F2 {}, G1 {}, G2 {}, G3 {}), mismatches: [{}]",
            per_kind[0],
            per_kind[1],
            per_kind[2],
            per_kind[3],
            per_kind[4],
            bad.join(", ")
        ),
    )
}

fn criterion_numeric(grid: &mut Grid) -> Outcome {
    let cells = [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)];
    let tol = Rational::new(1, BigInt::from(10u32).pow(25)).unwrap();
    let mut worst = Vec::new();
    let mut ok = true;
    for (n, m) in cells {
        let p = cell(n, m);
        let exact = eval_numeric(&grid.forms.left(p).unwrap(), 60).value();
        for side in [Side::Left, Side::Right] {
            let t = truncated_numeric(p, side, 27).unwrap();
            let rel = ((&t.value - &exact) / &exact).abs();
            let good = t.converged && rel < tol;
            ok &= good;
            if !good {
                worst.push(format!("{p} {side:?}"));
            }
        }
    }
    outcome(ok, format!("5 cells x 2 sides to 25 significant digits, failures: [{}]", worst.join(", ")))
}

fn main() -> ExitCode {
    let mut grid = compute_grid();
    print_timings(&grid);

    let results = [
        ("1 identity on 0 <= m <= n <= 20", criterion_identity(&grid)),
        ("2 initial values", criterion_initial_values(&mut grid)),
        ("3 purity", criterion_purity(&grid)),
        ("4 main recurrence and a2 scan", criterion_main_recurrence(&mut grid)),
        ("5 closed forms at m = 0 and m = 1", criterion_closed_forms(&mut grid)),
        ("6 boundary recurrences", criterion_boundary(&mut grid)),
        ("7 binomial-sum identity", criterion_binomial()),
        ("8 summand audit", criterion_summand_audit()),
        ("9 numeric cross-check", criterion_numeric(&mut grid)),
    ];

    let mut failed = 0;
    for (name, o) in &results {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {name}: {tag} ({})", o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
