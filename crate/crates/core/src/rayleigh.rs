//! Euler–Rayleigh power sums `p_k = sum_n a_n^(-k)` over the zeros `-a_n` of
//! the transformed derivatives, and the radius brackets they imply.
//!
//! Two independent routes produce the sums: rational closed forms in the
//! parameter (orders 1..=4), and Newton's identities applied to the series
//! coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{RadiiError, Result};
use crate::family::{Base, Family, TransformKind};
use crate::series::CoefficientSequence;

/// Highest order the Newton recurrence will produce.
pub const MAX_NEWTON_ORDER: usize = 8;

/// Highest order with a closed-form sum.
pub const MAX_CLOSED_FORM_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SumSource {
    ClosedForm,
    NewtonRecurrence,
}

impl SumSource {
    pub fn name(self) -> &'static str {
        match self {
            SumSource::ClosedForm => "closed-form",
            SumSource::NewtonRecurrence => "newton",
        }
    }
}

impl std::fmt::Display for SumSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Power sums `p_1..=p_K` for one family and parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumLedger {
    pub family: Family,
    pub parameter: f64,
    pub sums: Vec<f64>,
    pub source: SumSource,
}

impl SumLedger {
    pub fn order(&self) -> usize {
        self.sums.len()
    }

    /// `p_k`, 1-based.
    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.sums.get(i).copied())
    }
}

/// Lower and upper Euler–Rayleigh bounds on the radius at order `k`,
/// already mapped to radius units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BracketInterval {
    pub family: Family,
    pub parameter: f64,
    pub k: usize,
    pub lower: f64,
    pub upper: f64,
    pub source: SumSource,
}

impl BracketInterval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Strict containment.
    pub fn contains(&self, r: f64) -> bool {
        self.lower < r && r < self.upper
    }
}

/// Power sums of the reciprocal zeros from `F(z) = prod (1 + z/a_n)`.
///
/// The coefficients of `F` are the elementary symmetric functions of the
/// `1/a_n`, so Newton's identities give
/// `p_k = sum_{i<k} (-1)^(i-1) c_i p_(k-i) + (-1)^(k-1) k c_k`.
pub fn newton_sums(coeffs: &CoefficientSequence, order: usize) -> Result<SumLedger> {
    if order == 0 {
        return Err(RadiiError::ZeroOrder);
    }
    if order > MAX_NEWTON_ORDER {
        return Err(RadiiError::OrderTooHigh {
            k: order,
            max: MAX_NEWTON_ORDER,
        });
    }
    if coeffs.values.len() <= order {
        return Err(RadiiError::InsufficientCoefficients {
            needed: order + 1,
            available: coeffs.values.len(),
        });
    }
    let c = &coeffs.values;
    let mut p: Vec<f64> = Vec::with_capacity(order);
    for k in 1..=order {
        let sign = |i: usize| if i % 2 == 1 { 1.0 } else { -1.0 };
        let mut s = sign(k) * k as f64 * c[k];
        for i in 1..k {
            s += sign(i) * c[i] * p[k - i - 1];
        }
        p.push(s);
    }
    Ok(SumLedger {
        family: coeffs.family,
        parameter: coeffs.parameter,
        sums: p,
        source: SumSource::NewtonRecurrence,
    })
}

/// Power sums through Newton's identities on freshly generated coefficients.
pub fn newton_ledger(family: Family, parameter: f64, order: usize) -> Result<SumLedger> {
    let coeffs = CoefficientSequence::new(family, parameter, order)?;
    newton_sums(&coeffs, order)
}

/// Horner evaluation, coefficients from the highest degree down.
fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// `prod (x + shift)^power` over the given factors.
fn linear_factors(x: f64, factors: &[(f64, f64, i32)]) -> f64 {
    factors
        .iter()
        .map(|&(scale, shift, power)| (scale * x + shift).powi(power))
        .product()
}

fn bessel_circle_sum(v: f64, k: usize) -> f64 {
    match k {
        1 => 3.0 / (v + 1.0),
        2 => (4.0 * v + 13.0) / linear_factors(v, &[(1.0, 1.0, 2), (1.0, 2.0, 1)]),
        3 => {
            2.0 * horner(&[4.0, 26.0, 49.0], v)
                / linear_factors(v, &[(1.0, 1.0, 3), (1.0, 2.0, 1), (1.0, 3.0, 1)])
        }
        _ => {
            horner(&[16.0, 208.0, 1032.0, 2341.0, 1987.0], v)
                / linear_factors(
                    v,
                    &[(1.0, 1.0, 4), (1.0, 2.0, 2), (1.0, 3.0, 1), (1.0, 4.0, 1)],
                )
        }
    }
}

fn bessel_sqrt_sum(v: f64, k: usize) -> f64 {
    match k {
        1 => 2.0 / (v + 1.0),
        2 => (v + 5.0) / linear_factors(v, &[(1.0, 1.0, 2), (1.0, 2.0, 1)]),
        3 => {
            horner(&[1.0, 8.0, 23.0], v)
                / linear_factors(v, &[(1.0, 1.0, 3), (1.0, 2.0, 1), (1.0, 3.0, 1)])
        }
        _ => {
            horner(&[1.0, 15.0, 90.0, 267.0, 287.0], v)
                / linear_factors(
                    v,
                    &[(1.0, 1.0, 4), (1.0, 2.0, 2), (1.0, 3.0, 1), (1.0, 4.0, 1)],
                )
        }
    }
}

fn struve_circle_sum(v: f64, k: usize) -> f64 {
    match k {
        1 => 4.0 / (2.0 * v + 3.0),
        2 => 16.0 * (2.0 * v + 9.0) / (3.0 * linear_factors(v, &[(2.0, 3.0, 2), (2.0, 5.0, 1)])),
        3 => {
            64.0 * horner(&[4.0, 32.0, 79.0], v)
                / (5.0 * linear_factors(v, &[(2.0, 3.0, 3), (2.0, 5.0, 1), (2.0, 7.0, 1)]))
        }
        _ => {
            256.0 * horner(&[592.0, 9296.0, 56352.0, 159660.0, 171315.0], v)
                / (315.0
                    * linear_factors(
                        v,
                        &[(2.0, 3.0, 4), (2.0, 5.0, 2), (2.0, 7.0, 1), (2.0, 9.0, 1)],
                    ))
        }
    }
}

fn struve_sqrt_sum(v: f64, k: usize) -> f64 {
    match k {
        1 => 8.0 / (3.0 * (2.0 * v + 3.0)),
        2 => 32.0 * (2.0 * v + 23.0) / (45.0 * linear_factors(v, &[(2.0, 3.0, 2), (2.0, 5.0, 1)])),
        3 => {
            128.0 * horner(&[20.0, 228.0, 1417.0], v)
                / (945.0 * linear_factors(v, &[(2.0, 3.0, 3), (2.0, 5.0, 1), (2.0, 7.0, 1)]))
        }
        _ => {
            512.0 * horner(&[272.0, 5552.0, 47584.0, 247828.0, 416439.0], v)
                / (14175.0
                    * linear_factors(
                        v,
                        &[(2.0, 3.0, 4), (2.0, 5.0, 2), (2.0, 7.0, 1), (2.0, 9.0, 1)],
                    ))
        }
    }
}

const LOMMEL_DENOM_2: [(f64, f64, i32); 4] =
    [(1.0, 2.0, 2), (1.0, 3.0, 2), (1.0, 4.0, 1), (1.0, 5.0, 1)];
const LOMMEL_DENOM_3: [(f64, f64, i32); 6] = [
    (1.0, 2.0, 3),
    (1.0, 3.0, 3),
    (1.0, 4.0, 1),
    (1.0, 5.0, 1),
    (1.0, 6.0, 1),
    (1.0, 7.0, 1),
];
const LOMMEL_DENOM_4: [(f64, f64, i32); 8] = [
    (1.0, 2.0, 4),
    (1.0, 3.0, 4),
    (1.0, 4.0, 2),
    (1.0, 5.0, 2),
    (1.0, 6.0, 1),
    (1.0, 7.0, 1),
    (1.0, 8.0, 1),
    (1.0, 9.0, 1),
];

fn lommel_circle_sum(m: f64, k: usize) -> f64 {
    match k {
        1 => 12.0 / ((m + 2.0) * (m + 3.0)),
        2 => 16.0 * horner(&[-1.0, 31.0, 120.0], m) / linear_factors(m, &LOMMEL_DENOM_2),
        3 => {
            192.0 * horner(&[1.0, -2.0, 175.0, 1842.0, 4032.0], m)
                / linear_factors(m, &LOMMEL_DENOM_3)
        }
        _ => {
            256.0
                * horner(
                    &[
                        -1.0, 128.0, 2196.0, 24178.0, 352645.0, 3476958.0, 17744328.0, 44003088.0,
                        42301440.0,
                    ],
                    m,
                )
                / linear_factors(m, &LOMMEL_DENOM_4)
        }
    }
}

fn lommel_sqrt_sum(m: f64, k: usize) -> f64 {
    match k {
        1 => 8.0 / ((m + 2.0) * (m + 3.0)),
        2 => 32.0 * horner(&[-1.0, 3.0, 22.0], m) / linear_factors(m, &LOMMEL_DENOM_2),
        3 => {
            128.0 * horner(&[1.0, -14.0, -79.0, 320.0, 1308.0], m)
                / linear_factors(m, &LOMMEL_DENOM_3)
        }
        _ => {
            // Octic obtained from Newton's identities on the coefficients of H_μ.
            512.0
                * horner(
                    &[
                        -1.0, 24.0, 384.0, -1146.0, -32043.0, -97686.0, 321388.0, 2052024.0,
                        2733696.0,
                    ],
                    m,
                )
                / linear_factors(m, &LOMMEL_DENOM_4)
        }
    }
}

/// Rational closed form of `p_k`, `k ∈ 1..=4`.
pub fn closed_form_sum(family: Family, parameter: f64, k: usize) -> Result<f64> {
    if !(1..=MAX_CLOSED_FORM_ORDER).contains(&k) {
        return Err(RadiiError::UnsupportedOrder { k });
    }
    family.check(parameter)?;
    let f = match family {
        Family::BesselCircle => bessel_circle_sum,
        Family::BesselSqrt => bessel_sqrt_sum,
        Family::StruveCircle => struve_circle_sum,
        Family::StruveSqrt => struve_sqrt_sum,
        Family::LommelCircle => lommel_circle_sum,
        Family::LommelSqrt => lommel_sqrt_sum,
    };
    Ok(f(parameter, k))
}

/// Closed-form sums `p_1..=p_order`.
pub fn closed_form_ledger(family: Family, parameter: f64, order: usize) -> Result<SumLedger> {
    if order == 0 {
        return Err(RadiiError::ZeroOrder);
    }
    let sums = (1..=order)
        .map(|k| closed_form_sum(family, parameter, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(SumLedger {
        family,
        parameter,
        sums,
        source: SumSource::ClosedForm,
    })
}

/// Maps `p_k^(-1/k) < a_1 < p_k / p_(k+1)` to radius units.
pub fn bracket_from_sums(
    family: Family,
    parameter: f64,
    k: usize,
    p_k: f64,
    p_next: f64,
    source: SumSource,
) -> BracketInterval {
    let zero_lower = p_k.powf(-1.0 / k as f64);
    let zero_upper = p_k / p_next;
    let (lower, upper) = match family.transform() {
        TransformKind::Circle => (2.0 * zero_lower.sqrt(), 2.0 * zero_upper.sqrt()),
        TransformKind::Sqrt => (4.0 * zero_lower, 4.0 * zero_upper),
    };
    BracketInterval {
        family,
        parameter,
        k,
        lower,
        upper,
        source,
    }
}

/// Euler–Rayleigh bracket of order `k` on the radius.
pub fn radius_bracket(
    family: Family,
    parameter: f64,
    k: usize,
    source: SumSource,
) -> Result<BracketInterval> {
    if k == 0 {
        return Err(RadiiError::ZeroOrder);
    }
    let ledger = match source {
        SumSource::ClosedForm => closed_form_ledger(family, parameter, k + 1)?,
        SumSource::NewtonRecurrence => newton_ledger(family, parameter, k + 1)?,
    };
    Ok(bracket_from_sums(
        family,
        parameter,
        k,
        ledger.sums[k - 1],
        ledger.sums[k],
        source,
    ))
}

/// Brackets of orders `1..=k_max` sharing one ledger.
pub fn bracket_chain(
    family: Family,
    parameter: f64,
    k_max: usize,
    source: SumSource,
) -> Result<Vec<BracketInterval>> {
    if k_max == 0 {
        return Err(RadiiError::ZeroOrder);
    }
    let ledger = match source {
        SumSource::ClosedForm => closed_form_ledger(family, parameter, k_max + 1)?,
        SumSource::NewtonRecurrence => newton_ledger(family, parameter, k_max + 1)?,
    };
    Ok((1..=k_max)
        .map(|k| {
            bracket_from_sums(
                family,
                parameter,
                k,
                ledger.sums[k - 1],
                ledger.sums[k],
                source,
            )
        })
        .collect())
}

/// Upper bound on the radius from the first Rayleigh sum alone.
pub fn crude_upper_bound(family: Family, parameter: f64) -> Result<f64> {
    family.check(parameter)?;
    let p = parameter;
    Ok(match family {
        Family::BesselCircle => (2.0 * (p + 1.0)).sqrt(),
        Family::BesselSqrt => 4.0 * (p + 1.0),
        Family::StruveCircle => (3.0 * (p + 1.5)).sqrt(),
        Family::StruveSqrt => 3.0 * (2.0 * p + 3.0),
        Family::LommelCircle => ((p + 2.0) * (p + 3.0) / 2.0).sqrt(),
        Family::LommelSqrt => (p + 2.0) * (p + 3.0),
    })
}

/// `sum_n 1/u_n^2` over the positive zeros of the base function.
pub fn first_rayleigh_zero_sum(family: Family, parameter: f64) -> Result<f64> {
    base_zero_sum(family.base(), parameter)
}

pub fn base_zero_sum(base: Base, parameter: f64) -> Result<f64> {
    base.check(parameter)?;
    let p = parameter;
    Ok(match base {
        Base::Bessel => 1.0 / (4.0 * (p + 1.0)),
        Base::Struve => 1.0 / (3.0 * (2.0 * p + 3.0)),
        Base::Lommel => 1.0 / ((p + 2.0) * (p + 3.0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn newton_on_factored_quadratic() {
        // (1 + z)(1 + z/2)
        let c = CoefficientSequence::from_values(Family::BesselCircle, 0.0, vec![1.0, 1.5, 0.5]);
        let l = newton_sums(&c, 2).unwrap();
        assert_eq!(l.sums, vec![1.5, 1.25]);
        let c = CoefficientSequence::from_values(Family::BesselCircle, 0.0, vec![1.0, 0.7]);
        assert_eq!(newton_sums(&c, 1).unwrap().sums, vec![0.7]);
    }

    #[test]
    fn newton_errors() {
        let c = CoefficientSequence::from_values(Family::BesselCircle, 0.0, vec![1.0, 1.5]);
        assert_eq!(
            newton_sums(&c, 2).unwrap_err(),
            RadiiError::InsufficientCoefficients {
                needed: 3,
                available: 2
            }
        );
        let c = CoefficientSequence::new(Family::BesselCircle, 0.0, 12).unwrap();
        assert!(matches!(
            newton_sums(&c, 9),
            Err(RadiiError::OrderTooHigh { .. })
        ));
        assert_eq!(newton_sums(&c, 0).unwrap_err(), RadiiError::ZeroOrder);
    }

    #[test]
    fn bessel_circle_first_sum() {
        assert_abs_diff_eq!(
            newton_ledger(Family::BesselCircle, 0.0, 1).unwrap().sums[0],
            3.0
        );
        assert_abs_diff_eq!(closed_form_sum(Family::BesselCircle, 0.0, 2).unwrap(), 6.5);
    }

    #[test]
    fn closed_form_examples() {
        assert_relative_eq!(
            closed_form_sum(Family::LommelCircle, 0.5, 1).unwrap(),
            1.3714285714285714,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            closed_form_sum(Family::StruveSqrt, 0.5, 1).unwrap(),
            2.0 / 3.0,
            max_relative = 1e-15
        );
        assert_eq!(
            closed_form_sum(Family::BesselSqrt, 0.0, 5).unwrap_err(),
            RadiiError::UnsupportedOrder { k: 5 }
        );
        assert_eq!(
            closed_form_sum(Family::BesselSqrt, 0.0, 0).unwrap_err(),
            RadiiError::UnsupportedOrder { k: 0 }
        );
        assert!(closed_form_sum(Family::LommelSqrt, 0.0, 1).is_err());
    }

    #[test]
    fn first_brackets() {
        let b = radius_bracket(Family::BesselCircle, 0.0, 1, SumSource::ClosedForm).unwrap();
        assert_relative_eq!(b.lower, 2.0 * (1.0_f64 / 3.0).sqrt(), max_relative = 1e-15);
        assert_relative_eq!(b.upper, 2.0 * (6.0_f64 / 13.0).sqrt(), max_relative = 1e-15);
        let b = radius_bracket(Family::BesselSqrt, 0.0, 1, SumSource::ClosedForm).unwrap();
        assert_relative_eq!(b.lower, 2.0, max_relative = 1e-15);
        assert_relative_eq!(b.upper, 3.2, max_relative = 1e-15);
        let b = radius_bracket(Family::StruveCircle, -0.5, 1, SumSource::ClosedForm).unwrap();
        assert_relative_eq!(b.lower, 2.0_f64.sqrt(), max_relative = 1e-15);
        // sqrt(3(2ν+3)(2ν+5)/(2ν+9)) at ν = -1/2
        assert_relative_eq!(b.upper, 3.0_f64.sqrt(), max_relative = 1e-15);
        assert!(b.contains(std::f64::consts::FRAC_PI_2));
    }

    #[test]
    fn closed_form_order_limit_for_brackets() {
        assert!(radius_bracket(Family::BesselCircle, 0.0, 3, SumSource::ClosedForm).is_ok());
        assert!(radius_bracket(Family::BesselCircle, 0.0, 4, SumSource::ClosedForm).is_err());
        assert!(radius_bracket(Family::BesselCircle, 0.0, 7, SumSource::NewtonRecurrence).is_ok());
        assert!(radius_bracket(Family::BesselCircle, 0.0, 8, SumSource::NewtonRecurrence).is_err());
    }

    #[test]
    fn crude_and_zero_sums() {
        assert_relative_eq!(
            crude_upper_bound(Family::BesselCircle, 0.0).unwrap(),
            2.0_f64.sqrt()
        );
        assert_eq!(crude_upper_bound(Family::BesselSqrt, 0.0).unwrap(), 4.0);
        assert_relative_eq!(crude_upper_bound(Family::LommelSqrt, 0.5).unwrap(), 8.75);
        assert_eq!(
            first_rayleigh_zero_sum(Family::BesselSqrt, 0.0).unwrap(),
            0.25
        );
        assert_relative_eq!(
            first_rayleigh_zero_sum(Family::StruveCircle, 0.5).unwrap(),
            1.0 / 12.0
        );
        assert_relative_eq!(
            first_rayleigh_zero_sum(Family::LommelCircle, 0.5).unwrap(),
            1.0 / 8.75
        );
    }

    #[test]
    fn first_newton_identity_is_exact() {
        for f in Family::ALL {
            let c = CoefficientSequence::new(f, 0.25, 3).unwrap();
            assert_eq!(newton_sums(&c, 3).unwrap().sums[0], c.values[1]);
        }
    }
}
