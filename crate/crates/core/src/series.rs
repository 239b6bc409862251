//! Power series of the normalized functions and of their transformed
//! derivatives.
//!
//! All coefficients come from ratio recurrences, so nothing here evaluates a
//! factorial or a Gamma function directly.

use std::sync::OnceLock;

use crate::error::{RadiiError, Result};
use crate::family::{Base, Family, TransformKind};

/// Environment variable overriding [`SeriesPolicy::max_terms`].
pub const MAX_TERMS_ENV: &str = "RADII_MAX_TERMS";

/// Truncation rule shared by every series in the crate.
///
/// Summation stops once the next term is at most `rel_tol` times the largest
/// partial sum seen so far, provided `min_terms` terms have been added.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub min_terms: usize,
    pub max_terms: usize,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy {
            rel_tol: 1e-16,
            min_terms: 8,
            max_terms: 400,
        }
    }
}

impl SeriesPolicy {
    /// Default policy with `max_terms` taken from `RADII_MAX_TERMS` when set.
    pub fn from_env() -> Self {
        let mut policy = SeriesPolicy::default();
        if let Some(n) = std::env::var(MAX_TERMS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            policy.max_terms = n;
        }
        policy
    }

    /// Process-wide policy, read once from the environment.
    pub fn global() -> &'static SeriesPolicy {
        static POLICY: OnceLock<SeriesPolicy> = OnceLock::new();
        POLICY.get_or_init(SeriesPolicy::from_env)
    }

    /// Sums `first, first*r(0), first*r(0)*r(1), ...` under this policy.
    ///
    /// Returns `None` when the terms stop being finite or `max_terms` is hit.
    pub fn sum(&self, first: f64, mut ratio: impl FnMut(usize) -> f64) -> Option<f64> {
        let mut term = first;
        let mut sum = 0.0;
        let mut peak = 0.0_f64;
        for n in 0..self.max_terms {
            if !term.is_finite() {
                return None;
            }
            sum += term;
            peak = peak.max(sum.abs());
            let next = term * ratio(n);
            if n + 1 >= self.min_terms && next.abs() <= self.rel_tol * peak {
                return Some(sum);
            }
            term = next;
        }
        None
    }

    /// Like [`SeriesPolicy::sum`], with each term supplied by index.
    pub fn sum_indexed(&self, mut term: impl FnMut(usize) -> f64) -> Option<f64> {
        let mut sum = 0.0;
        let mut peak = 0.0_f64;
        for n in 0..self.max_terms {
            let t = term(n);
            if !t.is_finite() {
                return None;
            }
            sum += t;
            peak = peak.max(sum.abs());
            if n + 1 >= self.min_terms && term(n + 1).abs() <= self.rel_tol * peak {
                return Some(sum);
            }
        }
        None
    }
}

/// Ratio `c_{n+1} / c_n` of the transformed derivative coefficients.
fn coefficient_ratio(family: Family, p: f64, n: usize) -> f64 {
    let (a, b) = family.base().pochhammer_params(p);
    let n = n as f64;
    let poch = (a + n) * (b + n);
    match family.transform() {
        TransformKind::Circle => (2.0 * n + 3.0) / ((2.0 * n + 1.0) * poch),
        TransformKind::Sqrt => (n + 2.0) / ((n + 1.0) * poch),
    }
}

/// Coefficients `c_0..=c_N` of the transformed derivative
/// (Ψ_ν, Φ_ν, V_ν, W_ν, G_μ or H_μ), normalized so that `c_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    pub family: Family,
    pub parameter: f64,
    pub values: Vec<f64>,
}

impl CoefficientSequence {
    /// Builds `c_0..=c_last`.
    pub fn new(family: Family, parameter: f64, last: usize) -> Result<Self> {
        family.check(parameter)?;
        let mut values = Vec::with_capacity(last + 1);
        let mut c = 1.0;
        values.push(c);
        for n in 0..last {
            c *= coefficient_ratio(family, parameter, n);
            values.push(c);
        }
        Ok(CoefficientSequence {
            family,
            parameter,
            values,
        })
    }

    /// Wraps raw coefficients, e.g. of a polynomial with known zeros.
    /// The family tag is only carried along for reporting.
    pub fn from_values(family: Family, parameter: f64, values: Vec<f64>) -> Self {
        CoefficientSequence {
            family,
            parameter,
            values,
        }
    }

    /// Index of the last stored coefficient.
    pub fn degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

/// `c_n` of the transformed derivative of `family`.
pub fn coeff_transformed(family: Family, parameter: f64, n: usize) -> Result<f64> {
    family.check(parameter)?;
    Ok((0..n).fold(1.0, |c, k| c * coefficient_ratio(family, parameter, k)))
}

/// Value of the normalized function at real `x`.
pub fn eval_normalized(family: Family, parameter: f64, x: f64) -> Result<f64> {
    eval_normalized_with(SeriesPolicy::global(), family, parameter, x)
}

pub fn eval_normalized_with(
    policy: &SeriesPolicy,
    family: Family,
    parameter: f64,
    x: f64,
) -> Result<f64> {
    family.check(parameter)?;
    let (a, b) = family.base().pochhammer_params(parameter);
    let sum = match family.transform() {
        TransformKind::Circle => {
            let t = -x * x / 4.0;
            policy.sum(x, |n| t / ((a + n as f64) * (b + n as f64)))
        }
        TransformKind::Sqrt => {
            let t = -x / 4.0;
            policy.sum(x, |n| t / ((a + n as f64) * (b + n as f64)))
        }
    };
    sum.ok_or(RadiiError::TruncationFailure {
        family,
        x,
        max_terms: policy.max_terms,
    })
}

/// Derivative of the normalized function at real `x`, summed termwise.
pub fn eval_normalized_derivative(family: Family, parameter: f64, x: f64) -> Result<f64> {
    eval_normalized_derivative_with(SeriesPolicy::global(), family, parameter, x)
}

pub fn eval_normalized_derivative_with(
    policy: &SeriesPolicy,
    family: Family,
    parameter: f64,
    x: f64,
) -> Result<f64> {
    family.check(parameter)?;
    let (a, b) = family.base().pochhammer_params(parameter);
    let sum = match family.transform() {
        TransformKind::Circle => {
            let t = -x * x / 4.0;
            policy.sum(1.0, |n| {
                let n = n as f64;
                t * (2.0 * n + 3.0) / ((2.0 * n + 1.0) * (a + n) * (b + n))
            })
        }
        TransformKind::Sqrt => {
            let t = -x / 4.0;
            policy.sum(1.0, |n| {
                let n = n as f64;
                t * (n + 2.0) / ((n + 1.0) * (a + n) * (b + n))
            })
        }
    };
    sum.ok_or(RadiiError::TruncationFailure {
        family,
        x,
        max_terms: policy.max_terms,
    })
}

/// The base series `U(x)` and its derivative `U'(x)`.
///
/// Parameters are not validated: the Mittag-Leffler check and the zero
/// scanner evaluate raw series outside the radius domains.
pub fn base_series(
    policy: &SeriesPolicy,
    base: Base,
    parameter: f64,
    x: f64,
) -> Option<(f64, f64)> {
    let (a, b) = base.pochhammer_params(parameter);
    let t = -x * x / 4.0;
    let u = policy.sum(1.0, |n| t / ((a + n as f64) * (b + n as f64)))?;
    // U'(x) = sum_{n>=1} (-1)^n 2n x^(2n-1) / (4^n (a)_n (b)_n)
    let first = -x / (2.0 * a * b);
    let du = policy.sum(first, |k| {
        let n = (k + 1) as f64;
        t * (n + 1.0) / (n * (a + n) * (b + n))
    })?;
    Some((u, du))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn first_coefficients() {
        for f in Family::ALL {
            assert_eq!(coeff_transformed(f, 0.3, 0).unwrap(), 1.0);
        }
        assert_abs_diff_eq!(
            coeff_transformed(Family::BesselSqrt, 0.0, 1).unwrap(),
            2.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            coeff_transformed(Family::StruveCircle, 0.5, 1).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            coeff_transformed(Family::BesselCircle, 0.0, 1).unwrap(),
            3.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn coefficient_domain_errors() {
        let err = coeff_transformed(Family::StruveSqrt, 0.7, 2).unwrap_err();
        assert!(
            matches!(err, RadiiError::ParameterOutOfRange { domain, .. } if domain.contains("1/2"))
        );
        assert!(CoefficientSequence::new(Family::LommelCircle, 0.0, 4).is_err());
    }

    #[test]
    fn sequence_matches_single_coefficients() {
        let seq = CoefficientSequence::new(Family::LommelSqrt, -0.3, 12).unwrap();
        assert_eq!(seq.degree(), 12);
        for (n, &c) in seq.values.iter().enumerate() {
            assert_eq!(c, coeff_transformed(Family::LommelSqrt, -0.3, n).unwrap());
        }
    }

    #[test]
    fn bessel_half_is_sine() {
        let v = eval_normalized(Family::BesselCircle, 0.5, FRAC_PI_2).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        let d = eval_normalized_derivative(Family::BesselCircle, 0.5, FRAC_PI_2).unwrap();
        assert_abs_diff_eq!(d, 0.0, epsilon = 1e-12);
        for x in [0.1, 1.0, 2.5, 4.0] {
            assert_abs_diff_eq!(
                eval_normalized(Family::BesselCircle, 0.5, x).unwrap(),
                x.sin(),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn struve_half_reductions() {
        // v_{-1/2}(x) = sin x and v_{1/2}(x) = 2(1 - cos x)/x
        for x in [0.3, 1.2, 2.9, 5.0] {
            assert_abs_diff_eq!(
                eval_normalized(Family::StruveCircle, -0.5, x).unwrap(),
                x.sin(),
                epsilon = 1e-14
            );
            let v = eval_normalized(Family::StruveCircle, 0.5, x).unwrap();
            assert_abs_diff_eq!(v, 2.0 * (1.0 - x.cos()) / x, epsilon = 1e-14);
        }
        let d = eval_normalized_derivative(Family::StruveCircle, -0.5, FRAC_PI_2).unwrap();
        assert_abs_diff_eq!(d, 0.0, epsilon = 1e-10);
        // w_{1/2}(z) = 2(1 - cos sqrt z)
        let z = 3.7_f64;
        let w = eval_normalized(Family::StruveSqrt, 0.5, z).unwrap();
        assert_abs_diff_eq!(w, 2.0 * (1.0 - z.sqrt().cos()), epsilon = 1e-14);
        let dw = eval_normalized_derivative(Family::StruveSqrt, 0.5, PI * PI).unwrap();
        assert_abs_diff_eq!(dw, 0.0, epsilon = 1e-13);
    }

    #[test]
    fn bessel_sqrt_at_one_is_j0() {
        // partial sums of sum (-1)^n / (4^n (n!)^2) at 50 terms
        let mut term = 1.0_f64;
        let mut oracle = 0.0;
        for n in 0..50 {
            oracle += term;
            let k = (n + 1) as f64;
            term *= -1.0 / (4.0 * k * k);
        }
        let v = eval_normalized(Family::BesselSqrt, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(v, oracle, epsilon = 1e-15);
        assert_abs_diff_eq!(v, 0.7651976866, epsilon = 1e-10);
    }

    #[test]
    fn origin_values() {
        for f in Family::ALL {
            let p = if f.base() == Base::Lommel { 0.4 } else { 0.1 };
            assert_eq!(eval_normalized(f, p, 0.0).unwrap(), 0.0);
            assert_eq!(eval_normalized_derivative(f, p, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn truncation_failure_is_reported() {
        let policy = SeriesPolicy {
            max_terms: 10,
            ..SeriesPolicy::default()
        };
        let err = eval_normalized_with(&policy, Family::BesselCircle, 0.0, 30.0).unwrap_err();
        assert!(matches!(
            err,
            RadiiError::TruncationFailure { max_terms: 10, .. }
        ));
    }

    #[test]
    fn min_terms_respected() {
        let mut calls = 0;
        let policy = SeriesPolicy::default();
        let s = policy.sum(1.0, |_| {
            calls += 1;
            0.0
        });
        assert_eq!(s, Some(1.0));
        assert_eq!(calls, 8);
    }

    #[test]
    fn base_series_derivative_matches_normalized() {
        // (x U(x))' = U + x U'
        let policy = SeriesPolicy::default();
        for (base, p) in [
            (Base::Bessel, 1.3),
            (Base::Struve, -0.2),
            (Base::Lommel, 0.6),
        ] {
            let x = 2.2;
            let (u, du) = base_series(&policy, base, p, x).unwrap();
            let d = eval_normalized_derivative(base.circle(), p, x).unwrap();
            assert_abs_diff_eq!(u + x * du, d, epsilon = 1e-14);
        }
    }
}
