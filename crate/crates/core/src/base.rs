//! The unnormalized base functions J_ν, H_ν and s_{μ-1/2,1/2} for real
//! positive arguments, summed from their defining series with explicit Gamma
//! factors.
//!
//! These evaluate the transcendental radius equations as written, which keeps
//! them independent of the ratio recurrences in [`crate::series`].

use crate::series::SeriesPolicy;

/// `1/Γ(x)` as `(ln|1/Γ(x)|, sign)`; poles of Γ give a zero reciprocal.
fn ln_rgamma(x: f64) -> Option<(f64, f64)> {
    if x <= 0.0 && x == x.floor() {
        return None;
    }
    let (lg, sign) = libm::lgamma_r(x);
    Some((-lg, f64::from(sign)))
}

/// Value and derivative of `sum_k (-1)^k (x/2)^(2k+s) / (Γ(k+a) Γ(k+b))`.
fn gamma_series(policy: &SeriesPolicy, s: f64, a: f64, b: f64, x: f64) -> Option<(f64, f64)> {
    let ln_half = (x / 2.0).ln();
    let term = |k: usize| -> f64 {
        let kf = k as f64;
        match (ln_rgamma(kf + a), ln_rgamma(kf + b)) {
            (Some((la, sa)), Some((lb, sb))) => {
                let alt = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
                alt * sa * sb * ((2.0 * kf + s) * ln_half + la + lb).exp()
            }
            _ => 0.0,
        }
    };
    let value = policy.sum_indexed(term)?;
    let deriv = policy.sum_indexed(|k| term(k) * (2.0 * k as f64 + s) / x)?;
    Some((value, deriv))
}

/// Bessel function of the first kind and its derivative, `x > 0`.
pub fn bessel_j(policy: &SeriesPolicy, nu: f64, x: f64) -> Option<(f64, f64)> {
    gamma_series(policy, nu, 1.0, nu + 1.0, x)
}

/// Struve function H_ν and its derivative, `x > 0`.
pub fn struve_h(policy: &SeriesPolicy, nu: f64, x: f64) -> Option<(f64, f64)> {
    gamma_series(policy, nu + 1.0, 1.5, nu + 1.5, x)
}

/// Lommel function s_{μ-1/2,1/2} and its derivative, `x > 0`, `μ ≠ 0`.
///
/// `s(x) = sum_k (-1)^k x^(μ+1/2+2k) / prod_{m=1}^{k+1} (μ+2m-2)(μ+2m-1)`.
pub fn lommel_s(policy: &SeriesPolicy, mu: f64, x: f64) -> Option<(f64, f64)> {
    let lead = mu + 0.5;
    let mut terms: Vec<f64> = Vec::new();
    let mut denom = 1.0;
    let mut gen = |k: usize| -> f64 {
        while terms.len() <= k {
            let m = (terms.len() + 1) as f64;
            denom *= (mu + 2.0 * m - 2.0) * (mu + 2.0 * m - 1.0);
            let j = terms.len();
            let alt = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
            terms.push(alt * x.powf(lead + 2.0 * j as f64) / denom);
        }
        terms[k]
    };
    let value = policy.sum_indexed(&mut gen)?;
    let deriv = policy.sum_indexed(|k| gen(k) * (lead + 2.0 * k as f64) / x)?;
    Some((value, deriv))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Reference values from 40-digit hypergeometric evaluations.
    #[test]
    fn bessel_reference() {
        let p = SeriesPolicy::default();
        let (j, dj) = bessel_j(&p, 0.3, 2.5).unwrap();
        assert_relative_eq!(j, 0.17564108274377366, max_relative = 1e-13);
        assert_relative_eq!(dj, -0.50974219373854083, max_relative = 1e-13);
        let (j, _) = bessel_j(&p, 0.5, 1.0).unwrap();
        let closed = (2.0 / std::f64::consts::PI).sqrt() * 1.0_f64.sin();
        assert_relative_eq!(j, closed, max_relative = 1e-14);
    }

    #[test]
    fn struve_reference() {
        let p = SeriesPolicy::default();
        let (h, dh) = struve_h(&p, 0.2, 1.7).unwrap();
        assert_relative_eq!(h, 0.76160822827867718, max_relative = 1e-13);
        assert_relative_eq!(dh, 0.26408718152491239, max_relative = 1e-12);
        let (h, _) = struve_h(&p, -1.3, 0.9).unwrap();
        assert_relative_eq!(h, 0.11536479880521723, max_relative = 1e-12);
    }

    #[test]
    fn struve_at_gamma_pole() {
        // The leading term of H_{-3/2} sits on a pole of Γ. Check the
        // recurrence H_{ν-1} + H_{ν+1} = (2ν/x) H_ν + (x/2)^ν / (√π Γ(ν+3/2)).
        let p = SeriesPolicy::default();
        let (nu, x) = (-0.5_f64, 1.3_f64);
        let (hm, _) = struve_h(&p, nu - 1.0, x).unwrap();
        let (h0, _) = struve_h(&p, nu, x).unwrap();
        let (hp, _) = struve_h(&p, nu + 1.0, x).unwrap();
        let rhs = 2.0 * nu / x * h0
            + (x / 2.0).powf(nu) / (std::f64::consts::PI.sqrt() * libm::tgamma(nu + 1.5));
        assert_relative_eq!(hm + hp, rhs, max_relative = 1e-13);
    }

    #[test]
    fn lommel_reference() {
        let p = SeriesPolicy::default();
        let (s, ds) = lommel_s(&p, 0.7, 1.9).unwrap();
        assert_relative_eq!(s, 1.2418124317866997, max_relative = 1e-13);
        assert_relative_eq!(ds, 0.2614228550014303, max_relative = 1e-12);
        let (s, _) = lommel_s(&p, -0.4, 1.3).unwrap();
        assert_relative_eq!(s, -2.7091609588438762, max_relative = 1e-13);
    }
}
