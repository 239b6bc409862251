//! Numerical evidence on whether the positive zeros of `z H_ν' - ν H_ν` and
//! `z J_ν' - ν J_ν` interlace. Nothing here is counted as a verified claim.

use serde::Serialize;

use crate::continuation::{scan_zeros, Target};
use crate::error::Result;
use crate::family::Base;
use crate::series::SeriesPolicy;

pub const EVIDENCE_LABEL: &str = "conjecture evidence";

/// Largest number of zeros per sequence.
pub const MAX_ZEROS: usize = 20;

const SCAN_FROM: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sequence {
    Struve,
    Bessel,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingReport {
    pub label: &'static str,
    pub parameter: f64,
    pub n_max: usize,
    /// Zeros of `z H_ν' - ν H_ν`.
    pub struve_zeros: Vec<f64>,
    /// Zeros of `z J_ν' - ν J_ν`.
    pub bessel_zeros: Vec<f64>,
    /// Both sequences merged in increasing order.
    pub merged: Vec<(f64, Sequence)>,
    pub interlacing: bool,
    /// 1-based indices that could not be located, per sequence.
    pub struve_missing: Vec<usize>,
    pub bessel_missing: Vec<usize>,
}

/// Locates the first `n_max` zeros of both combinations.
///
/// `z H_ν' - ν H_ν` is a positive multiple of `(x U)'` for the Struve base
/// and `z J_ν' - ν J_ν` of `U'` for the Bessel base, so the scans run on the
/// normalized series.
pub fn explore_interlacing(parameter: f64, n_max: usize) -> Result<InterlacingReport> {
    explore_interlacing_with(SeriesPolicy::global(), parameter, n_max)
}

pub fn explore_interlacing_with(
    policy: &SeriesPolicy,
    parameter: f64,
    n_max: usize,
) -> Result<InterlacingReport> {
    Base::Struve.check(parameter)?;
    let n_max = n_max.min(MAX_ZEROS);
    let ceiling = 8.0 + 4.0 * std::f64::consts::PI * (n_max as f64 + 2.0);
    let struve = scan_zeros(
        policy,
        Base::Struve,
        parameter,
        Target::CircleDerivative,
        SCAN_FROM,
        n_max,
        ceiling,
    );
    let bessel = scan_zeros(
        policy,
        Base::Bessel,
        parameter,
        Target::Slope,
        SCAN_FROM,
        n_max,
        ceiling,
    );

    let mut merged: Vec<(f64, Sequence)> = struve
        .iter()
        .map(|&z| (z, Sequence::Struve))
        .chain(bessel.iter().map(|&z| (z, Sequence::Bessel)))
        .collect();
    merged.sort_by(|a, b| a.0.total_cmp(&b.0));
    let alternates = merged
        .windows(2)
        .all(|w| w[0].1 != w[1].1 && w[0].0 < w[1].0);
    let missing = |found: usize| ((found + 1)..=n_max).collect::<Vec<_>>();

    Ok(InterlacingReport {
        label: EVIDENCE_LABEL,
        parameter,
        n_max,
        interlacing: alternates && struve.len() == n_max && bessel.len() == n_max,
        struve_missing: missing(struve.len()),
        bessel_missing: missing(bessel.len()),
        struve_zeros: struve,
        bessel_zeros: bessel,
        merged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn half_orders_have_trigonometric_zeros() {
        // ν = -1/2: z H' + H/2 ∝ cos z and z J' + J/2 ∝ sin z
        let r = explore_interlacing(-0.5, 3).unwrap();
        for (i, z) in r.struve_zeros.iter().enumerate() {
            assert_abs_diff_eq!(*z, (i as f64 + 0.5) * PI, epsilon = 1e-10);
        }
        for (i, z) in r.bessel_zeros.iter().enumerate() {
            assert_abs_diff_eq!(*z, (i as f64 + 1.0) * PI, epsilon = 1e-10);
        }
        assert!(r.interlacing);
        assert_eq!(r.label, EVIDENCE_LABEL);
    }

    #[test]
    fn order_zero() {
        let r = explore_interlacing(0.0, 5).unwrap();
        assert_eq!(r.struve_zeros.len(), 5);
        // z J_0' = -z J_1
        assert_abs_diff_eq!(r.bessel_zeros[0], 3.8317059702075123, epsilon = 1e-10);
        assert_abs_diff_eq!(r.struve_zeros[0], 1.9783405860596813, epsilon = 1e-10);
        assert_eq!(r.merged.len(), 10);
        assert!(r.struve_missing.is_empty() && r.bessel_missing.is_empty());
    }

    #[test]
    fn rejects_outside_struve_range() {
        assert!(explore_interlacing(0.7, 3).is_err());
    }
}
