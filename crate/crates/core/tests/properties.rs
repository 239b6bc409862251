use proptest::prelude::*;

use radii::rayleigh::{bracket_chain, closed_form_sum, crude_upper_bound, newton_ledger};
use radii::roots::{equation_residual, find_radius};
use radii::series::{coeff_transformed, eval_normalized, eval_normalized_derivative};
use radii::{Base, Family, SumSource, TransformKind};

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

/// A family with a parameter drawn from its domain.
fn cell() -> impl Strategy<Value = (Family, f64)> {
    (family(), 0.0..1.0f64).prop_map(|(f, u)| {
        let p = match f.base() {
            Base::Bessel => -0.99 + 10.99 * u,
            Base::Struve => -0.5 + u,
            Base::Lommel => {
                let m = -0.99 + 1.98 * u;
                if m.abs() < 1e-3 {
                    0.5
                } else {
                    m
                }
            }
        };
        (f, p)
    })
}

fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `(a)_n` from Gamma functions; for `a = 3/2` from the chain
/// `Γ(n + 3/2) = (n + 1/2) Γ(n + 1/2)`, `Γ(3/2) = √π / 2`.
fn pochhammer(a: f64, n: usize) -> f64 {
    if a == 1.5 {
        let g0 = std::f64::consts::PI.sqrt() / 2.0;
        let gn = (0..n).fold(g0, |g, k| g * (k as f64 + 1.5));
        return gn / g0;
    }
    (ln_gamma(a + n as f64) - ln_gamma(a)).exp()
}

fn direct_coefficient(f: Family, p: f64, n: usize) -> f64 {
    let (a, b) = f.base().pochhammer_params(p);
    let m = n as f64;
    let weight = match f.transform() {
        TransformKind::Circle => 2.0 * m + 1.0,
        TransformKind::Sqrt => m + 1.0,
    };
    weight / (pochhammer(a, n) * pochhammer(b, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coefficients_are_positive_and_normalized((f, p) in cell()) {
        prop_assert_eq!(coeff_transformed(f, p, 0).unwrap(), 1.0);
        for n in 1..=40 {
            prop_assert!(coeff_transformed(f, p, n).unwrap() > 0.0);
        }
    }

    #[test]
    fn ratio_recurrence_matches_gamma((f, p) in cell(), n in 0usize..=30) {
        let c = coeff_transformed(f, p, n).unwrap();
        let d = direct_coefficient(f, p, n);
        prop_assert!(((c - d) / d).abs() <= 1e-13, "{} {} {}: {} {}", f, p, n, c, d);
    }

    #[test]
    fn circle_families_are_odd((f, p) in cell(), x in 0.0..3.0f64) {
        prop_assume!(f.transform() == TransformKind::Circle);
        let plus = eval_normalized(f, p, x).unwrap();
        let minus = eval_normalized(f, p, -x).unwrap();
        prop_assert!((plus + minus).abs() <= 1e-14);
    }

    #[test]
    fn newton_sums_match_closed_forms((f, p) in cell()) {
        let ledger = newton_ledger(f, p, 4).unwrap();
        prop_assert_eq!(ledger.sums[0], coeff_transformed(f, p, 1).unwrap());
        for k in 1..=4 {
            let closed = closed_form_sum(f, p, k).unwrap();
            let rel = ((ledger.sums[k - 1] - closed) / closed).abs();
            prop_assert!(rel <= 1e-12, "{} {} k={}: {:e}", f, p, k, rel);
        }
    }

    #[test]
    fn radius_sits_inside_every_bracket((f, p) in cell()) {
        let r = find_radius(f, p).unwrap();
        prop_assert!(r.radius < crude_upper_bound(f, p).unwrap());
        for (source, k_max) in [(SumSource::ClosedForm, 3), (SumSource::NewtonRecurrence, 6)] {
            let chain = bracket_chain(f, p, k_max, source).unwrap();
            for b in &chain {
                prop_assert!(b.lower < r.radius && r.radius < b.upper, "{} {} {:?} {}", f, p, b, r.radius);
            }
            for w in chain.windows(2) {
                prop_assert!(w[1].lower >= w[0].lower * (1.0 - 1e-14));
                prop_assert!(w[1].upper <= w[0].upper * (1.0 + 1e-14));
            }
        }
    }

    #[test]
    fn residual_changes_sign_across_radius((f, p) in cell()) {
        let r = find_radius(f, p).unwrap().radius;
        let below = equation_residual(f, p, r * (1.0 - 1e-6)).unwrap();
        let above = equation_residual(f, p, r * (1.0 + 1e-6)).unwrap();
        prop_assert!(below.signum() != above.signum());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn derivative_matches_central_difference((f, p) in cell(), u in 0.0..1.0f64) {
        let x = u * match f.transform() {
            TransformKind::Circle => 3.0,
            TransformKind::Sqrt => 8.0,
        };
        let h = 1e-6;
        let fd = (eval_normalized(f, p, x + h).unwrap() - eval_normalized(f, p, x - h).unwrap()) / (2.0 * h);
        let d = eval_normalized_derivative(f, p, x).unwrap();
        prop_assert!((fd - d).abs() <= 1e-7, "{} {} {}: {} {}", f, p, x, fd, d);
    }
}
