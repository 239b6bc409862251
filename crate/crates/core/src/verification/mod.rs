//! The claim suite: every bound, constant and identity as a checkable
//! outcome, with stable claim ids such as `T3b.k2.lower`.
//!
//! Ids start with a family index (`T1` bessel-circle,
//! `T2` bessel-sqrt, `T3` struve-circle, `T4` struve-sqrt, `T5`
//! lommel-circle, `T6` lommel-sqrt).

mod interlace;
mod tolerance;

pub use interlace::{
    explore_interlacing, explore_interlacing_with, InterlacingReport, Sequence, EVIDENCE_LABEL,
    MAX_ZEROS,
};
pub use tolerance::{prefix_matches, ToleranceTable};

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;
use serde::Serialize;

use crate::base::struve_h;
use crate::error::{RadiiError, Result};
use crate::family::{Base, Family};
use crate::rayleigh::{
    bracket_chain, closed_form_sum, crude_upper_bound, first_rayleigh_zero_sum, newton_ledger,
    BracketInterval, SumSource,
};
use crate::roots::{base_zeros_with, find_radius_with, RadiusReport};
use crate::series::SeriesPolicy;

/// Highest Newton-recurrence bracket order checked.
pub const NEWTON_BRACKET_ORDER: usize = 6;

/// Highest closed-form bracket order checked.
pub const CLOSED_FORM_BRACKET_ORDER: usize = 3;

/// Zeros entering the partial zero sums and the Mittag-Leffler expansion.
pub const ZERO_COUNT: usize = 20;

pub const ASYMPTOTIC_ORDERS: [f64; 3] = [100.0, 300.0, 1000.0];

/// Ten-digit value of the order at which the k = 2 lower bound for
/// struve-circle equals π/2.
pub const NU_STAR: f64 = -0.4935034122;

/// Eight-digit value of the struve-circle radius at ν = 1/2.
pub const STRUVE_HALF_RADIUS: f64 = 2.33112237;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Expected {
    /// `|measured - value| <= tolerance`.
    Value { value: f64 },
    /// `lower - tolerance < measured < upper + tolerance`.
    Interval { lower: f64, upper: f64 },
    /// `measured > bound - tolerance`.
    Above { bound: f64 },
    /// `measured < bound + tolerance`.
    Below { bound: f64 },
}

impl Expected {
    pub fn admits(&self, measured: f64, tolerance: f64) -> bool {
        match *self {
            Expected::Value { value } => (measured - value).abs() <= tolerance,
            Expected::Interval { lower, upper } => {
                lower - tolerance < measured && measured < upper + tolerance
            }
            Expected::Above { bound } => measured > bound - tolerance,
            Expected::Below { bound } => measured < bound + tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub claim_id: String,
    pub family: Option<Family>,
    pub parameter: Option<f64>,
    /// Secondary coordinate: the sample point z for Mittag-Leffler checks.
    pub argument: Option<f64>,
    pub measured: f64,
    pub expected: Expected,
    pub tolerance: f64,
    pub passed: bool,
    /// Set when the measurement itself failed.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationConfig {
    pub bessel_grid: Vec<f64>,
    pub struve_grid: Vec<f64>,
    pub lommel_grid: Vec<f64>,
    /// Parameters of the zero-sum checks, per base.
    pub zero_sum_grids: [(Base, Vec<f64>); 3],
    pub mittag_leffler_orders: Vec<f64>,
    pub mittag_leffler_points: Vec<f64>,
    pub tolerances: ToleranceTable,
    /// Keep only claims under these id prefixes; empty keeps everything.
    pub only: Vec<String>,
    pub policy: SeriesPolicy,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            bessel_grid: (0..50).map(|i| -0.9 + 0.2 * i as f64).collect(),
            struve_grid: (0..50).map(|i| -0.5 + i as f64 / 49.0).collect(),
            lommel_grid: (0..50).map(|i| -0.98 + 0.04 * i as f64).collect(),
            zero_sum_grids: [
                (
                    Base::Bessel,
                    (0..12).map(|i| -0.9 + 0.2 * i as f64).collect(),
                ),
                (
                    Base::Struve,
                    (0..7).map(|i| -0.5 + 0.1 * i as f64).collect(),
                ),
                (
                    Base::Lommel,
                    vec![-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5],
                ),
            ],
            mittag_leffler_orders: vec![-0.5, -0.25, 0.0, 0.25, 0.4],
            mittag_leffler_points: vec![0.5, 1.0],
            tolerances: ToleranceTable::default(),
            only: Vec::new(),
            policy: *SeriesPolicy::global(),
        }
    }
}

impl VerificationConfig {
    pub fn grid(&self, base: Base) -> &[f64] {
        match base {
            Base::Bessel => &self.bessel_grid,
            Base::Struve => &self.struve_grid,
            Base::Lommel => &self.lommel_grid,
        }
    }

    fn wants(&self, claim_id: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|p| prefix_matches(p, claim_id))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub outcomes: Vec<VerificationOutcome>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Index of a family in claim ids.
pub fn family_index(family: Family) -> u8 {
    match family {
        Family::BesselCircle => 1,
        Family::BesselSqrt => 2,
        Family::StruveCircle => 3,
        Family::StruveSqrt => 4,
        Family::LommelCircle => 5,
        Family::LommelSqrt => 6,
    }
}

struct Outcomes<'a> {
    config: &'a VerificationConfig,
    list: Vec<VerificationOutcome>,
}

impl<'a> Outcomes<'a> {
    fn new(config: &'a VerificationConfig) -> Self {
        Outcomes {
            config,
            list: Vec::new(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        claim_id: String,
        family: Option<Family>,
        parameter: Option<f64>,
        argument: Option<f64>,
        measured: Result<f64>,
        expected: Expected,
        tolerance: f64,
    ) {
        if !self.config.wants(&claim_id) {
            return;
        }
        let (measured, error) = match measured {
            Ok(m) => (m, None),
            Err(e) => (f64::NAN, Some(e.to_string())),
        };
        let passed = error.is_none() && expected.admits(measured, tolerance);
        self.list.push(VerificationOutcome {
            claim_id,
            family,
            parameter,
            argument,
            measured,
            expected,
            tolerance,
            passed,
            error,
        });
    }

    fn check(
        &mut self,
        claim_id: String,
        family: Family,
        parameter: f64,
        measured: Result<f64>,
        expected: Expected,
    ) {
        let tol = self.config.tolerances.get(&claim_id);
        self.record(
            claim_id,
            Some(family),
            Some(parameter),
            None,
            measured,
            expected,
            tol,
        );
    }

    fn finish(self) -> Vec<VerificationOutcome> {
        self.list
    }
}

/// Everything computed once per (family, parameter) cell.
struct Cell {
    family: Family,
    parameter: f64,
    radius: Result<RadiusReport>,
    closed: Result<Vec<BracketInterval>>,
    newton: Result<Vec<BracketInterval>>,
}

fn compute_cells(config: &VerificationConfig) -> Vec<Cell> {
    let jobs: Vec<(Family, f64)> = Family::ALL
        .iter()
        .flat_map(|&f| config.grid(f.base()).iter().map(move |&p| (f, p)))
        .collect();
    jobs.into_par_iter()
        .map(|(family, parameter)| Cell {
            family,
            parameter,
            radius: find_radius_with(&config.policy, family, parameter),
            closed: bracket_chain(
                family,
                parameter,
                CLOSED_FORM_BRACKET_ORDER,
                SumSource::ClosedForm,
            ),
            newton: bracket_chain(
                family,
                parameter,
                NEWTON_BRACKET_ORDER,
                SumSource::NewtonRecurrence,
            ),
        })
        .collect()
}

fn radius_of(cell: &Cell) -> Result<f64> {
    cell.radius.as_ref().map(|r| r.radius).map_err(Clone::clone)
}

/// Runs every section of the suite in a fixed order.
pub fn run_suite(config: &VerificationConfig) -> VerificationReport {
    let cells = compute_cells(config);
    let mut outcomes = Vec::new();
    outcomes.extend(verify_sums(config));
    outcomes.extend(verify_brackets_on(config, &cells));
    outcomes.extend(verify_chain_on(config, &cells));
    outcomes.extend(verify_crude_and_residuals_on(config, &cells));
    outcomes.extend(verify_monotonicity_and_cross_family_on(config, &cells));
    outcomes.extend(verify_special_constants(config));
    outcomes.extend(verify_asymptotics(config));
    outcomes.extend(verify_zero_sums(config));
    outcomes.extend(verify_mittag_leffler(config));
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let failed = outcomes.len() - passed;
    VerificationReport {
        outcomes,
        passed,
        failed,
    }
}

/// Newton-recurrence sums against the closed forms, k = 1..4, as relative
/// differences.
pub fn verify_sums(config: &VerificationConfig) -> Vec<VerificationOutcome> {
    let jobs: Vec<(Family, f64)> = Family::ALL
        .iter()
        .flat_map(|&f| config.grid(f.base()).iter().map(move |&p| (f, p)))
        .collect();
    let rows: Vec<(Family, f64, Vec<Result<f64>>)> = jobs
        .into_par_iter()
        .map(|(f, p)| {
            let ledger = newton_ledger(f, p, 4);
            let diffs = (1..=4)
                .map(|k| {
                    let newton = ledger.as_ref().map_err(Clone::clone)?.sums[k - 1];
                    let closed = closed_form_sum(f, p, k)?;
                    Ok((newton - closed).abs() / closed.abs())
                })
                .collect();
            (f, p, diffs)
        })
        .collect();
    let mut out = Outcomes::new(config);
    for (f, p, diffs) in rows {
        for (i, d) in diffs.into_iter().enumerate() {
            let id = format!("T{}.sums.k{}", family_index(f), i + 1);
            out.check(id, f, p, d, Expected::Value { value: 0.0 });
        }
    }
    out.finish()
}

/// `lower < radius < upper` for the closed-form brackets k = 1..3 and the
/// Newton brackets k = 1..6 on the whole grid.
pub fn verify_brackets(config: &VerificationConfig) -> Vec<VerificationOutcome> {
    verify_brackets_on(config, &compute_cells(config))
}

fn verify_brackets_on(config: &VerificationConfig, cells: &[Cell]) -> Vec<VerificationOutcome> {
    let mut out = Outcomes::new(config);
    for cell in cells {
        let t = family_index(cell.family);
        for (tag, chain, order) in [
            ("", &cell.closed, CLOSED_FORM_BRACKET_ORDER),
            ("nr.", &cell.newton, NEWTON_BRACKET_ORDER),
        ] {
            for k in 1..=order {
                let bracket = chain.as_ref().map(|c| c[k - 1]).map_err(Clone::clone);
                let (lower, upper) = match &bracket {
                    Ok(b) => (b.lower, b.upper),
                    Err(_) => (f64::NAN, f64::NAN),
                };
                let measured = || bracket.clone().and_then(|_| radius_of(cell));
                out.check(
                    format!("T{t}b.{tag}k{k}.lower"),
                    cell.family,
                    cell.parameter,
                    measured(),
                    Expected::Above { bound: lower },
                );
                out.check(
                    format!("T{t}b.{tag}k{k}.upper"),
                    cell.family,
                    cell.parameter,
                    measured(),
                    Expected::Below { bound: upper },
                );
            }
        }
    }
    out.finish()
}

/// Lower bounds nondecreasing and upper bounds nonincreasing in k, measured
/// as relative steps so that the tolerance is a relative slack.
fn verify_chain_on(config: &VerificationConfig, cells: &[Cell]) -> Vec<VerificationOutcome> {
    let mut out = Outcomes::new(config);
    for cell in cells {
        let t = family_index(cell.family);
        for (tag, chain) in [("", &cell.closed), ("nr.", &cell.newton)] {
            let Ok(chain) = chain else { continue };
            for w in chain.windows(2) {
                let k = w[0].k;
                let lower_step = (w[1].lower - w[0].lower) / w[0].lower.abs().max(1.0);
                let upper_step = (w[0].upper - w[1].upper) / w[0].upper.abs().max(1.0);
                out.check(
                    format!("T{t}b.chain.{tag}lower.k{k}"),
                    cell.family,
                    cell.parameter,
                    Ok(lower_step),
                    Expected::Above { bound: 0.0 },
                );
                out.check(
                    format!("T{t}b.chain.{tag}upper.k{k}"),
                    cell.family,
                    cell.parameter,
                    Ok(upper_step),
                    Expected::Above { bound: 0.0 },
                );
            }
        }
    }
    out.finish()
}

fn verify_crude_and_residuals_on(
    config: &VerificationConfig,
    cells: &[Cell],
) -> Vec<VerificationOutcome> {
    let first_zeros: Vec<Result<f64>> = cells
        .par_iter()
        .map(|cell| {
            let z = base_zeros_with(&config.policy, cell.family.base(), cell.parameter, 1)?[0];
            Ok(match cell.family.transform() {
                crate::family::TransformKind::Circle => z,
                crate::family::TransformKind::Sqrt => z * z,
            })
        })
        .collect();
    let mut out = Outcomes::new(config);
    for (cell, zero) in cells.iter().zip(first_zeros) {
        let t = family_index(cell.family);
        let (f, p) = (cell.family, cell.parameter);
        let crude = crude_upper_bound(f, p).unwrap_or(f64::NAN);
        out.check(
            format!("T{t}b.crude"),
            f,
            p,
            radius_of(cell),
            Expected::Below { bound: crude },
        );
        let zero_bound = zero.as_ref().copied().unwrap_or(f64::NAN);
        let measured = zero.and_then(|_| radius_of(cell));
        out.check(
            format!("T{t}a.first_zero"),
            f,
            p,
            measured,
            Expected::Below { bound: zero_bound },
        );
        let scaled = cell
            .radius
            .as_ref()
            .map(|r| r.scaled_residual)
            .map_err(Clone::clone);
        out.check(
            format!("T{t}a.residual"),
            f,
            p,
            scaled,
            Expected::Value { value: 0.0 },
        );
    }
    out.finish()
}

/// Increase of the bessel-sqrt radius along the grid, and the cross-family
/// inequalities on the Struve range.
pub fn verify_monotonicity_and_cross_family(
    config: &VerificationConfig,
) -> Vec<VerificationOutcome> {
    verify_monotonicity_and_cross_family_on(config, &compute_cells(config))
}

fn lookup(cells: &[Cell], family: Family, parameter: f64) -> Result<f64> {
    match cells
        .iter()
        .find(|c| c.family == family && c.parameter == parameter)
    {
        Some(c) => radius_of(c),
        None => Ok(find_radius_with(SeriesPolicy::global(), family, parameter)?.radius),
    }
}

fn verify_monotonicity_and_cross_family_on(
    config: &VerificationConfig,
    cells: &[Cell],
) -> Vec<VerificationOutcome> {
    let mut out = Outcomes::new(config);
    let mut grid = config.bessel_grid.clone();
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    for w in grid.windows(2) {
        let prev = lookup(cells, Family::BesselSqrt, w[0]);
        let next = lookup(cells, Family::BesselSqrt, w[1]);
        let bound = prev.as_ref().copied().unwrap_or(f64::NAN);
        out.check(
            "T2d".into(),
            Family::BesselSqrt,
            w[1],
            prev.and(next),
            Expected::Above { bound },
        );
    }
    for &p in &config.struve_grid {
        for (id, struve, bessel) in [
            ("T3.cross", Family::StruveCircle, Family::BesselCircle),
            ("T4.cross", Family::StruveSqrt, Family::BesselSqrt),
        ] {
            let other = lookup(cells, bessel, p);
            let bound = other.as_ref().copied().unwrap_or(f64::NAN);
            let measured = other.and_then(|_| lookup(cells, struve, p));
            out.check(id.into(), struve, p, measured, Expected::Above { bound });
        }
    }
    out.finish()
}

/// The order at which the k = 2 struve-circle lower bound equals π/2.
pub fn solve_nu_star() -> f64 {
    let g = |nu: f64| {
        (3.0 * (2.0 * nu + 3.0).powi(2) * (2.0 * nu + 5.0) / (2.0 * nu + 9.0)).powf(0.25)
            - FRAC_PI_2
    };
    let (mut lo, mut hi) = (-0.5_f64, -0.49_f64);
    let g_lo = g(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid).signum() == g_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn verify_special_constants(config: &VerificationConfig) -> Vec<VerificationOutcome> {
    let mut out = Outcomes::new(config);
    let radius = |f, p| find_radius_with(&config.policy, f, p).map(|r| r.radius);
    let sc = Family::StruveCircle;
    out.check(
        "T3.const.nu_star".into(),
        sc,
        NU_STAR,
        Ok(solve_nu_star()),
        Expected::Value { value: NU_STAR },
    );
    out.check(
        "T3.const.r_half".into(),
        sc,
        0.5,
        radius(sc, 0.5),
        Expected::Value {
            value: STRUVE_HALF_RADIUS,
        },
    );
    out.check(
        "T3.const.r_minus_half".into(),
        sc,
        -0.5,
        radius(sc, -0.5),
        Expected::Value { value: FRAC_PI_2 },
    );
    let bc = Family::BesselCircle;
    out.check(
        "T1.const.r_half".into(),
        bc,
        0.5,
        radius(bc, 0.5),
        Expected::Value { value: FRAC_PI_2 },
    );
    out.finish()
}

pub fn verify_asymptotics(config: &VerificationConfig) -> Vec<VerificationOutcome> {
    let rows: Vec<(f64, Result<f64>, Result<f64>)> = ASYMPTOTIC_ORDERS
        .par_iter()
        .map(|&nu| {
            let sqrt = find_radius_with(&config.policy, Family::BesselSqrt, nu).map(|r| r.radius);
            let circle =
                find_radius_with(&config.policy, Family::BesselCircle, nu).map(|r| r.radius);
            (nu, sqrt, circle)
        })
        .collect();
    let mut out = Outcomes::new(config);
    let c_sqrt = config.tolerances.get("T2c.asym");
    let c_circle = config.tolerances.get("T1.limit");
    for (nu, sqrt, circle) in rows {
        let ratio = sqrt.clone().map(|r| r / (4.0 * (nu + 1.0)));
        out.record(
            "T2c.asym".into(),
            Some(Family::BesselSqrt),
            Some(nu),
            None,
            ratio,
            Expected::Value {
                value: 1.0 - 1.0 / nu,
            },
            c_sqrt / (nu * nu),
        );
        out.check(
            "T2c.crude".into(),
            Family::BesselSqrt,
            nu,
            sqrt,
            Expected::Below {
                bound: 4.0 * (nu + 1.0),
            },
        );
        out.record(
            "T1.limit".into(),
            Some(Family::BesselCircle),
            Some(nu),
            None,
            circle.map(|r| r * r / nu),
            Expected::Value { value: 2.0 },
            c_circle / nu,
        );
    }
    out.finish()
}

/// Partial sums of `1/u_n^2` over the first [`ZERO_COUNT`] zeros stay below
/// the closed-form sum and come within the `gap` tolerance of it.
pub fn verify_zero_sums(config: &VerificationConfig) -> Vec<VerificationOutcome> {
    let jobs: Vec<(Base, f64)> = config
        .zero_sum_grids
        .iter()
        .flat_map(|(b, g)| g.iter().map(move |&p| (*b, p)))
        .collect();
    type Row = (Base, f64, Result<(f64, f64)>);
    let rows: Vec<Row> = jobs
        .into_par_iter()
        .map(|(base, p)| {
            let partial = || -> Result<(f64, f64)> {
                let zeros = base_zeros_with(&config.policy, base, p, ZERO_COUNT)?;
                let s20 = zeros.iter().map(|z| 1.0 / (z * z)).sum();
                Ok((s20, first_rayleigh_zero_sum(base.circle(), p)?))
            };
            (base, p, partial())
        })
        .collect();
    let mut out = Outcomes::new(config);
    for (base, p, r) in rows {
        let f = base.sqrt();
        let t = family_index(f);
        let total = r.as_ref().map(|x| x.1).unwrap_or(f64::NAN);
        out.check(
            format!("T{t}.zerosum.below"),
            f,
            p,
            r.clone().map(|x| x.0),
            Expected::Below { bound: total },
        );
        out.check(
            format!("T{t}.zerosum.gap"),
            f,
            p,
            r.map(|(s20, s)| (s - s20) / s),
            Expected::Value { value: 0.0 },
        );
    }
    out.finish()
}

/// Left side `H_{ν-1}(z) / (z H_ν(z)) - (2ν+1)/z^2` of the partial-fraction
/// expansion.
pub fn mittag_leffler_lhs(policy: &SeriesPolicy, nu: f64, z: f64) -> Result<f64> {
    let fail = || RadiiError::TruncationFailure {
        family: Family::StruveCircle,
        x: z,
        max_terms: policy.max_terms,
    };
    let (h_down, _) = struve_h(policy, nu - 1.0, z).ok_or_else(fail)?;
    let (h, _) = struve_h(policy, nu, z).ok_or_else(fail)?;
    Ok(h_down / (z * h) - (2.0 * nu + 1.0) / (z * z))
}

/// Right side `sum_n 2/(z^2 - h_n^2)` from the first [`ZERO_COUNT`] zeros
/// plus an estimate of the rest: the missing part of the zero sum times the
/// largest factor `1 + z^2/(h^2 - z^2)` beyond the last computed zero.
pub fn mittag_leffler_rhs(policy: &SeriesPolicy, nu: f64, z: f64) -> Result<f64> {
    let zeros = base_zeros_with(policy, Base::Struve, nu, ZERO_COUNT)?;
    let head: f64 = zeros.iter().map(|h| 2.0 / (z * z - h * h)).sum();
    let partial: f64 = zeros.iter().map(|h| 1.0 / (h * h)).sum();
    let rest = first_rayleigh_zero_sum(Family::StruveCircle, nu)? - partial;
    let last = zeros[ZERO_COUNT - 1];
    Ok(head - 2.0 * rest * (1.0 + z * z / (last * last - z * z)))
}

/// Mittag-Leffler expansion at every configured (ν, z) pair, plus its
/// z → 0 limit at ν = 1/2, as relative differences.
pub fn verify_mittag_leffler(config: &VerificationConfig) -> Vec<VerificationOutcome> {
    let jobs: Vec<(f64, f64)> = config
        .mittag_leffler_orders
        .iter()
        .flat_map(|&nu| config.mittag_leffler_points.iter().map(move |&z| (nu, z)))
        .collect();
    let policy = &config.policy;
    let rows: Vec<(f64, f64, Result<f64>)> = jobs
        .into_par_iter()
        .map(|(nu, z)| {
            let diff = mittag_leffler_lhs(policy, nu, z).and_then(|l| {
                let r = mittag_leffler_rhs(policy, nu, z)?;
                Ok((l - r) / r.abs())
            });
            (nu, z, diff)
        })
        .collect();
    let mut out = Outcomes::new(config);
    let tol = config.tolerances.get("T3b.mle");
    for (nu, z, diff) in rows {
        out.record(
            "T3b.mle".into(),
            Some(Family::StruveCircle),
            Some(nu),
            Some(z),
            diff,
            Expected::Value { value: 0.0 },
            tol,
        );
    }
    let (nu, z) = (0.5, 0.01);
    let limit = -2.0 / (3.0 * (2.0 * nu + 3.0));
    let diff = mittag_leffler_lhs(policy, nu, z).map(|l| (l - limit) / limit.abs());
    let id = "T3b.mle.limit".to_string();
    let tol = config.tolerances.get(&id);
    out.record(
        id,
        Some(Family::StruveCircle),
        Some(nu),
        Some(z),
        diff,
        Expected::Value { value: 0.0 },
        tol,
    );
    out.finish()
}
