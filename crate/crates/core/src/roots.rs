//! Radii as the first positive zero of the normalized derivative, and zeros of
//! the base functions.

use std::f64::consts::PI;

use serde::Serialize;

use crate::base::{bessel_j, lommel_s, struve_h};
use crate::continuation::{scan_zeros, Target};
use crate::error::{RadiiError, Result};
use crate::family::{Base, Family};
use crate::rayleigh::{crude_upper_bound, radius_bracket, BracketInterval, SumSource};
use crate::series::{eval_normalized_derivative_with, SeriesPolicy};

/// Bisection stops once the bracket is narrower than this times the radius.
pub const RADIUS_REL_WIDTH: f64 = 1e-13;

pub const MAX_BISECTIONS: usize = 60;

/// Brackets narrower than this are flagged as degenerate.
pub const DEGENERATE_WIDTH: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusReport {
    pub family: Family,
    pub parameter: f64,
    pub radius: f64,
    /// Transcendental equation evaluated at `radius`.
    pub residual: f64,
    /// `|R(r)| / (|R'(r)| r)`, the relative distance to the root implied by
    /// the residual.
    pub scaled_residual: f64,
    pub bracket_used: BracketInterval,
    pub iterations: usize,
    pub converged: bool,
    /// The k = 3 bracket showed no sign change and a forward scan was used.
    pub fallback_scan: bool,
    pub degenerate: bool,
    pub extended_domain: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct Bisection {
    pub root: f64,
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Bisection on `[lo, hi]` where `f(lo)` and `f(hi)` differ in sign.
pub fn bisect(
    mut f: impl FnMut(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    f_lo: f64,
    rel_width: f64,
    max_iter: usize,
) -> Result<Bisection> {
    let (mut lo, mut hi, mut f_lo) = (lo, hi, f_lo);
    let mut iterations = 0;
    while iterations < max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= rel_width * mid.abs() {
            break;
        }
        iterations += 1;
        let fm = f(mid)?;
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    Ok(Bisection {
        root,
        lower: lo,
        upper: hi,
        iterations,
        converged: hi - lo <= rel_width * root.abs(),
    })
}

/// Radius of univalence and starlikeness of `family` at `parameter`.
pub fn find_radius(family: Family, parameter: f64) -> Result<RadiusReport> {
    find_radius_with(SeriesPolicy::global(), family, parameter)
}

pub fn find_radius_with(
    policy: &SeriesPolicy,
    family: Family,
    parameter: f64,
) -> Result<RadiusReport> {
    let bracket = radius_bracket(family, parameter, 3, SumSource::ClosedForm)?;
    let deriv = |x: f64| eval_normalized_derivative_with(policy, family, parameter, x);
    let d_lo = deriv(bracket.lower)?;
    let d_hi = deriv(bracket.upper)?;

    let (cell, d_cell, fallback) = if d_lo > 0.0 && d_hi < 0.0 {
        (bracket, d_lo, false)
    } else {
        let ceiling = crude_upper_bound(family, parameter)?;
        let step = bracket.lower / 64.0;
        let mut x = 0.0;
        let mut dx = 1.0_f64;
        let mut found = None;
        while x < ceiling {
            let next = (x + step).min(ceiling);
            let d_next = deriv(next)?;
            if d_next.signum() != dx.signum() {
                found = Some((x, next, dx));
                break;
            }
            x = next;
            dx = d_next;
        }
        let (lo, hi, d) = found.ok_or(RadiiError::RootNotFound {
            family,
            parameter,
            ceiling,
        })?;
        let cell = BracketInterval {
            k: 0,
            lower: lo,
            upper: hi,
            ..bracket
        };
        (cell, d, true)
    };

    let b = bisect(
        deriv,
        cell.lower,
        cell.upper,
        d_cell,
        RADIUS_REL_WIDTH,
        MAX_BISECTIONS,
    )?;
    let residual = equation_residual_with(policy, family, parameter, b.root)?;
    let scaled_residual = scaled_residual_with(policy, family, parameter, b.root)?;
    Ok(RadiusReport {
        family,
        parameter,
        radius: b.root,
        residual,
        scaled_residual,
        bracket_used: cell,
        iterations: b.iterations,
        converged: b.converged,
        fallback_scan: fallback,
        degenerate: cell.width() < DEGENERATE_WIDTH,
        extended_domain: family.is_extended_domain(parameter),
    })
}

/// First `count` positive zeros of the base function, with multiplicity.
///
/// The scan starts at the radius of the circle family, below which the
/// circle function is increasing and so has no zero.
pub fn base_zeros(base: Base, parameter: f64, count: usize) -> Result<Vec<f64>> {
    base_zeros_with(SeriesPolicy::global(), base, parameter, count)
}

pub fn base_zeros_with(
    policy: &SeriesPolicy,
    base: Base,
    parameter: f64,
    count: usize,
) -> Result<Vec<f64>> {
    let start = find_radius_with(policy, base.circle(), parameter)?.radius;
    let ceiling = start + 4.0 * PI * (count as f64 + 2.0);
    let zeros = scan_zeros(
        policy,
        base,
        parameter,
        Target::Value,
        start,
        count,
        ceiling,
    );
    if zeros.len() < count {
        return Err(RadiiError::RootNotFound {
            family: base.circle(),
            parameter,
            ceiling,
        });
    }
    Ok(zeros)
}

/// Smallest positive zero of the base function (j_{ν,1}, h_{ν,1} or ξ_{μ,1}).
pub fn find_first_function_zero(base: Base, parameter: f64) -> Result<f64> {
    Ok(base_zeros(base, parameter, 1)?[0])
}

/// The radius equation written with the base function and its derivative:
///
/// | family          | R(z)                                   |
/// |-----------------|----------------------------------------|
/// | `BesselCircle`  | z J_ν'(z) + (1-ν) J_ν(z)               |
/// | `BesselSqrt`    | √z J_ν'(√z) + (2-ν) J_ν(√z)            |
/// | `StruveCircle`  | z H_ν'(z) - ν H_ν(z)                   |
/// | `StruveSqrt`    | √z H_ν'(√z) - (ν-1) H_ν(√z)            |
/// | `LommelCircle`  | z s'(z) - (μ-1/2) s(z)                 |
/// | `LommelSqrt`    | 2√z s'(√z) - (2μ-3) s(√z)              |
pub fn equation_residual(family: Family, parameter: f64, z: f64) -> Result<f64> {
    equation_residual_with(SeriesPolicy::global(), family, parameter, z)
}

pub fn equation_residual_with(
    policy: &SeriesPolicy,
    family: Family,
    parameter: f64,
    z: f64,
) -> Result<f64> {
    family.check(parameter)?;
    let p = parameter;
    let fail = || RadiiError::TruncationFailure {
        family,
        x: z,
        max_terms: policy.max_terms,
    };
    let r = z.sqrt();
    let value = match family {
        Family::BesselCircle => {
            let (j, dj) = bessel_j(policy, p, z).ok_or_else(fail)?;
            z * dj + (1.0 - p) * j
        }
        Family::BesselSqrt => {
            let (j, dj) = bessel_j(policy, p, r).ok_or_else(fail)?;
            r * dj + (2.0 - p) * j
        }
        Family::StruveCircle => {
            let (h, dh) = struve_h(policy, p, z).ok_or_else(fail)?;
            z * dh - p * h
        }
        Family::StruveSqrt => {
            let (h, dh) = struve_h(policy, p, r).ok_or_else(fail)?;
            r * dh - (p - 1.0) * h
        }
        Family::LommelCircle => {
            let (s, ds) = lommel_s(policy, p, z).ok_or_else(fail)?;
            z * ds - (p - 0.5) * s
        }
        Family::LommelSqrt => {
            let (s, ds) = lommel_s(policy, p, r).ok_or_else(fail)?;
            2.0 * r * ds - (2.0 * p - 3.0) * s
        }
    };
    Ok(value)
}

/// `|R(z)| / (|R'(z)| z)` with `R'` from a central difference.
pub fn scaled_residual_with(
    policy: &SeriesPolicy,
    family: Family,
    parameter: f64,
    z: f64,
) -> Result<f64> {
    let value = equation_residual_with(policy, family, parameter, z)?;
    if value == 0.0 {
        return Ok(0.0);
    }
    let h = 1e-6 * z;
    let slope = (equation_residual_with(policy, family, parameter, z + h)?
        - equation_residual_with(policy, family, parameter, z - h)?)
        / (2.0 * h);
    Ok((value / (slope * z)).abs())
}
