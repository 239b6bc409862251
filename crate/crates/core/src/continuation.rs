//! Continuation of the base series `U(x)` to large arguments.
//!
//! Beyond a few units the alternating power series loses every digit to
//! cancellation, yet the zero sums and the interlacing explorer need twenty
//! zeros. `U(x) = 1F2(1; a, b; -x^2/4)` satisfies
//!
//! ```text
//! U'' + (2(a+b) - 3)/x U' + U = 4(a-1)(b-1)(1 - U)/x^2
//! ```
//!
//! which is integrated with classical RK4 from a point where the series is
//! still accurate.

use crate::family::Base;
use crate::series::{base_series, SeriesPolicy};

/// Largest argument at which the scanner trusts the power series.
pub const SERIES_SWITCH: f64 = 6.0;

/// RK4 step.
pub const STEP: f64 = 1.0 / 256.0;

/// Quantity whose sign changes are located.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// `U`, whose zeros are those of the base function.
    Value,
    /// `U'`; for Bessel these are the zeros of `x J_ν' - ν J_ν`.
    Slope,
    /// `(x U)' = U + x U'`, the derivative of the circle family.
    CircleDerivative,
}

impl Target {
    fn eval(self, x: f64, u: f64, du: f64) -> f64 {
        match self {
            Target::Value => u,
            Target::Slope => du,
            Target::CircleDerivative => u + x * du,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Knot {
    x: f64,
    u: f64,
    du: f64,
}

/// Lazily extended RK4 trajectory of `(U, U')`.
#[derive(Debug, Clone)]
pub struct Continuation {
    k1: f64,
    k0: f64,
    knots: Vec<Knot>,
}

impl Continuation {
    /// Starts the trajectory at `start` from the power series.
    pub fn new(policy: &SeriesPolicy, base: Base, parameter: f64, start: f64) -> Option<Self> {
        let (a, b) = base.pochhammer_params(parameter);
        let (u, du) = base_series(policy, base, parameter, start)?;
        Some(Continuation {
            k1: 2.0 * (a + b) - 3.0,
            k0: 4.0 * (a - 1.0) * (b - 1.0),
            knots: vec![Knot { x: start, u, du }],
        })
    }

    pub fn start(&self) -> f64 {
        self.knots[0].x
    }

    fn rhs(&self, x: f64, u: f64, du: f64) -> (f64, f64) {
        (du, -self.k1 / x * du - u + self.k0 * (1.0 - u) / (x * x))
    }

    fn rk4(&self, from: Knot, h: f64) -> Knot {
        let Knot { x, u, du } = from;
        let (a1, b1) = self.rhs(x, u, du);
        let (a2, b2) = self.rhs(x + h / 2.0, u + h / 2.0 * a1, du + h / 2.0 * b1);
        let (a3, b3) = self.rhs(x + h / 2.0, u + h / 2.0 * a2, du + h / 2.0 * b2);
        let (a4, b4) = self.rhs(x + h, u + h * a3, du + h * b3);
        Knot {
            x: x + h,
            u: u + h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4),
            du: du + h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4),
        }
    }

    fn extend_to(&mut self, x: f64) {
        while self.knots.last().is_some_and(|k| k.x < x) {
            let last = *self.knots.last().unwrap();
            let n = self.knots.len() as f64;
            let mut next = self.rk4(last, STEP);
            // pin knot abscissae to the grid to avoid drift
            next.x = self.knots[0].x + n * STEP;
            self.knots.push(next);
        }
    }

    /// `(U(x), U'(x))` for `x >= start`.
    pub fn state_at(&mut self, x: f64) -> (f64, f64) {
        let start = self.start();
        let x = x.max(start);
        self.extend_to(x);
        let i = (((x - start) / STEP).floor() as usize).min(self.knots.len() - 1);
        let knot = self.knots[i];
        if x == knot.x {
            return (knot.u, knot.du);
        }
        let k = self.rk4(knot, x - knot.x);
        (k.u, k.du)
    }
}

/// Evaluates `(U, U')` by series below [`SERIES_SWITCH`] and by continuation
/// above it.
pub struct BaseEvaluator<'a> {
    policy: &'a SeriesPolicy,
    base: Base,
    parameter: f64,
    switch: f64,
    trajectory: Option<Continuation>,
}

impl<'a> BaseEvaluator<'a> {
    pub fn new(policy: &'a SeriesPolicy, base: Base, parameter: f64, switch: f64) -> Self {
        BaseEvaluator {
            policy,
            base,
            parameter,
            switch,
            trajectory: None,
        }
    }

    pub fn state(&mut self, x: f64) -> Option<(f64, f64)> {
        if x <= self.switch {
            return base_series(self.policy, self.base, self.parameter, x);
        }
        if self.trajectory.is_none() {
            self.trajectory = Some(Continuation::new(
                self.policy,
                self.base,
                self.parameter,
                self.switch,
            )?);
        }
        self.trajectory.as_mut().map(|t| t.state_at(x))
    }
}

fn bisect_sign(mut g: impl FnMut(f64) -> Option<f64>, lo: f64, hi: f64, g_lo: f64) -> f64 {
    let (mut lo, mut hi, mut g_lo) = (lo, hi, g_lo);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-15 * mid {
            break;
        }
        let Some(gm) = g(mid) else { break };
        if gm == 0.0 {
            return mid;
        }
        if gm.signum() == g_lo.signum() {
            lo = mid;
            g_lo = gm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Relative size below which a local extremum of `U` counts as a touching
/// zero.
pub const TOUCH_TOL: f64 = 1e-9;

/// First `count` zeros of `target` on `(from, x_max]`, refined by bisection.
///
/// Sign changes are simple zeros. For [`Target::Value`] an extremum of `U`
/// whose value is below [`TOUCH_TOL`] times the largest `|U|` since the
/// previous zero is a zero of even multiplicity and is reported twice.
pub fn scan_zeros(
    policy: &SeriesPolicy,
    base: Base,
    parameter: f64,
    target: Target,
    from: f64,
    count: usize,
    x_max: f64,
) -> Vec<f64> {
    let switch = SERIES_SWITCH.max(from);
    let mut eval = BaseEvaluator::new(policy, base, parameter, switch);
    let mut state = |x: f64| eval.state(x);

    let fine = STEP.min(from / 8.0).max(f64::MIN_POSITIVE);
    let mut zeros = Vec::with_capacity(count);
    let mut x = from;
    let Some((u, du)) = state(x) else {
        return zeros;
    };
    let mut gx = target.eval(x, u, du);
    let mut slope = du;
    let mut arch_peak = u.abs();
    while zeros.len() < count && x < x_max {
        let h = if x < switch {
            fine.min(switch - x).max(fine * 1e-3)
        } else {
            STEP
        };
        let x_next = x + h;
        let Some((u_next, du_next)) = state(x_next) else {
            break;
        };
        let g_next = target.eval(x_next, u_next, du_next);
        if gx == 0.0 {
            zeros.push(x);
            arch_peak = 0.0;
        } else if gx.signum() != g_next.signum() {
            let root = bisect_sign(
                |t| state(t).map(|(u, du)| target.eval(t, u, du)),
                x,
                x_next,
                gx,
            );
            zeros.push(root);
            arch_peak = 0.0;
        } else if target == Target::Value && slope.signum() != du_next.signum() && slope != 0.0 {
            let xe = bisect_sign(|t| state(t).map(|(_, du)| du), x, x_next, slope);
            if let Some((ue, _)) = state(xe) {
                if ue.abs() <= TOUCH_TOL * arch_peak {
                    zeros.push(xe);
                    zeros.push(xe);
                    arch_peak = 0.0;
                }
            }
        }
        arch_peak = arch_peak.max(u_next.abs());
        x = x_next;
        gx = g_next;
        slope = du_next;
    }
    zeros.truncate(count);
    zeros
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn trajectory_matches_series_where_both_work() {
        let policy = SeriesPolicy::default();
        for (base, p) in [
            (Base::Bessel, -0.3),
            (Base::Struve, 0.2),
            (Base::Lommel, 0.7),
            (Base::Lommel, -0.6),
        ] {
            let mut t = Continuation::new(&policy, base, p, 3.0).unwrap();
            let (u, du) = t.state_at(7.3);
            let (us, dus) = base_series(&policy, base, p, 7.3).unwrap();
            assert_abs_diff_eq!(u, us, epsilon = 1e-11);
            assert_abs_diff_eq!(du, dus, epsilon = 1e-11);
        }
    }

    // Reference values from 40-digit hypergeometric evaluations.
    #[test]
    fn trajectory_reaches_large_arguments() {
        let policy = SeriesPolicy::default();
        let mut t = Continuation::new(&policy, Base::Bessel, 0.0, SERIES_SWITCH).unwrap();
        assert_abs_diff_eq!(t.state_at(50.0).0, 0.055812327669251815, epsilon = 1e-10);
        let mut t = Continuation::new(&policy, Base::Struve, 0.3, SERIES_SWITCH).unwrap();
        let (u, du) = t.state_at(40.0);
        assert_abs_diff_eq!(u, 0.0028300299285298535, epsilon = 1e-11);
        assert_abs_diff_eq!(du, 0.00093653421897941178, epsilon = 1e-11);
        let mut t = Continuation::new(&policy, Base::Lommel, -0.6, SERIES_SWITCH).unwrap();
        assert_abs_diff_eq!(t.state_at(60.0).0, -0.16388784081257919, epsilon = 1e-10);
    }

    #[test]
    fn bessel_zeros() {
        let policy = SeriesPolicy::default();
        let z = scan_zeros(&policy, Base::Bessel, 0.0, Target::Value, 1.0, 20, 100.0);
        assert_eq!(z.len(), 20);
        assert_abs_diff_eq!(z[0], 2.4048255576957728, epsilon = 1e-12);
        assert_abs_diff_eq!(z[1], 5.5200781102863106, epsilon = 1e-12);
        assert_abs_diff_eq!(z[9], 30.634606468431975, epsilon = 1e-9);
        assert_abs_diff_eq!(z[19], 62.04846919022717, epsilon = 1e-9);
    }

    #[test]
    fn struve_and_lommel_zeros() {
        let policy = SeriesPolicy::default();
        let z = scan_zeros(&policy, Base::Struve, 0.0, Target::Value, 1.0, 20, 100.0);
        assert_abs_diff_eq!(z[0], 4.3332378204064217, epsilon = 1e-12);
        assert_abs_diff_eq!(z[9], 32.063972696689305, epsilon = 1e-9);
        assert_abs_diff_eq!(z[19], 63.518961720750885, epsilon = 1e-9);
        let z = scan_zeros(&policy, Base::Lommel, 0.5, Target::Value, 1.0, 20, 100.0);
        assert_abs_diff_eq!(z[1], 6.8544412429769983, epsilon = 1e-10);
        assert_abs_diff_eq!(z[19], 63.546430229014853, epsilon = 1e-9);
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        use std::f64::consts::PI;
        let policy = SeriesPolicy::default();
        // U for Bessel ν = 1/2 is sin x / x; U + xU' for Struve ν = -1/2 is cos x
        let z = scan_zeros(&policy, Base::Bessel, 0.5, Target::Value, 0.5, 12, 100.0);
        for (n, x) in z.iter().enumerate() {
            assert_abs_diff_eq!(*x, (n + 1) as f64 * PI, epsilon = 1e-10);
        }
        let z = scan_zeros(
            &policy,
            Base::Struve,
            -0.5,
            Target::CircleDerivative,
            0.5,
            12,
            100.0,
        );
        for (n, x) in z.iter().enumerate() {
            assert_abs_diff_eq!(*x, (n as f64 + 0.5) * PI, epsilon = 1e-10);
        }
    }

    #[test]
    fn double_zeros_are_counted_twice() {
        use std::f64::consts::PI;
        // Struve ν = 1/2: U = 2(1 - cos x)/x^2 touches zero at 2πk.
        let policy = SeriesPolicy::default();
        let z = scan_zeros(&policy, Base::Struve, 0.5, Target::Value, 1.0, 6, 100.0);
        assert_eq!(z.len(), 6);
        for (i, x) in z.iter().enumerate() {
            assert_abs_diff_eq!(*x, 2.0 * PI * (i / 2 + 1) as f64, epsilon = 1e-7);
        }
        // nearby parameters split each double zero into a close pair
        let z = scan_zeros(&policy, Base::Struve, 0.49, Target::Value, 1.0, 4, 100.0);
        assert_abs_diff_eq!(z[0], 6.082322556315432, epsilon = 1e-10);
        assert_abs_diff_eq!(z[1], 6.457125094941793, epsilon = 1e-10);
    }
}
