//! Embedded Dormand-Prince 5(4) integrator for the planar phase system.
//!
//! The right-hand sides in this crate are two-dimensional and cheap, so the
//! integrator is specialised to `[f64; 2]` states.  Steps are controlled by
//! the usual mixed absolute/relative error norm; the first-same-as-last
//! property of the pair is used to save one evaluation per step.

/// Butcher tableau of the Dormand-Prince 5(4) pair.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
/// Difference between the 5th- and 4th-order weights (error estimator).
const E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];

#[derive(Debug, Clone, Copy)]
pub struct Dp45 {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_step: f64,
}

impl Default for Dp45 {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-10,
            max_step: 0.01,
        }
    }
}

/// Decision returned by the per-step callback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    Continue,
    Stop,
}

impl Dp45 {
    /// Integrates y' = f(t, y) from (t0, y0) to t_end, invoking `on_step`
    /// after every accepted step.  Returns the final state.
    pub fn integrate<F, S>(
        &self,
        f: F,
        t0: f64,
        y0: [f64; 2],
        t_end: f64,
        mut on_step: S,
    ) -> (f64, [f64; 2])
    where
        F: Fn(f64, [f64; 2]) -> [f64; 2],
        S: FnMut(f64, [f64; 2]) -> StepOutcome,
    {
        let mut t = t0;
        let mut y = y0;
        let mut k1 = f(t, y);
        let mut h = self.max_step.min(t_end - t0).max(1e-12);

        while t < t_end {
            if t + h > t_end {
                h = t_end - t;
            }
            let mut k = [[0.0f64; 2]; 7];
            k[0] = k1;
            for stage in 0..6 {
                let mut ys = y;
                for (j, kj) in k.iter().enumerate().take(stage + 1) {
                    ys[0] += h * A[stage][j] * kj[0];
                    ys[1] += h * A[stage][j] * kj[1];
                }
                k[stage + 1] = f(t + C[stage] * h, ys);
            }
            // 5th-order advance is the 6th stage state (FSAL pair).
            let mut y_new = y;
            for (j, kj) in k.iter().enumerate().take(6) {
                y_new[0] += h * A[5][j] * kj[0];
                y_new[1] += h * A[5][j] * kj[1];
            }
            let mut err = [0.0f64; 2];
            for (j, kj) in k.iter().enumerate() {
                err[0] += E[j] * kj[0];
                err[1] += E[j] * kj[1];
            }
            let mut norm = 0.0;
            for i in 0..2 {
                let sc = self.abs_tol + self.rel_tol * y[i].abs().max(y_new[i].abs());
                let e = h * err[i] / sc;
                norm += e * e;
            }
            norm = (norm / 2.0).sqrt();

            if norm <= 1.0 {
                t += h;
                y = y_new;
                k1 = k[6];
                if on_step(t, y) == StepOutcome::Stop {
                    break;
                }
            } else {
                k1 = k[0];
            }
            let factor = if norm > 0.0 {
                (0.9 * norm.powf(-0.2)).clamp(0.2, 5.0)
            } else {
                5.0
            };
            h = (h * factor).min(self.max_step);
            if !(h > 0.0) || t + h == t {
                break; // step size underflow
            }
        }
        (t, y)
    }

    /// Fixed-step variant of the same pair (no error control), used for
    /// convergence-order studies.
    pub fn integrate_fixed<F>(&self, f: F, t0: f64, y0: [f64; 2], t_end: f64, h: f64) -> [f64; 2]
    where
        F: Fn(f64, [f64; 2]) -> [f64; 2],
    {
        let steps = ((t_end - t0) / h).round().max(1.0) as usize;
        let h = (t_end - t0) / steps as f64;
        let mut t = t0;
        let mut y = y0;
        for _ in 0..steps {
            let mut k = [[0.0f64; 2]; 7];
            k[0] = f(t, y);
            for stage in 0..6 {
                let mut ys = y;
                for (j, kj) in k.iter().enumerate().take(stage + 1) {
                    ys[0] += h * A[stage][j] * kj[0];
                    ys[1] += h * A[stage][j] * kj[1];
                }
                k[stage + 1] = f(t + C[stage] * h, ys);
            }
            for (j, kj) in k.iter().enumerate().take(6) {
                y[0] += h * A[5][j] * kj[0];
                y[1] += h * A[5][j] * kj[1];
            }
            t += h;
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator_accuracy() {
        let cfg = Dp45 {
            max_step: 0.05,
            ..Dp45::default()
        };
        let f = |_t: f64, y: [f64; 2]| [y[1], -y[0]];
        let (_, y) = cfg.integrate(f, 0.0, [1.0, 0.0], 2.0 * std::f64::consts::PI, |_, _| {
            StepOutcome::Continue
        });
        assert!((y[0] - 1.0).abs() < 1e-9);
        assert!(y[1].abs() < 1e-9);
    }

    #[test]
    fn fixed_step_order_is_five() {
        let cfg = Dp45::default();
        let f = |_t: f64, y: [f64; 2]| [y[1], -y[0]];
        let exact = [(2.0f64).cos(), -(2.0f64).sin()];
        let err = |h: f64| {
            let y = cfg.integrate_fixed(f, 0.0, [1.0, 0.0], 2.0, h);
            ((y[0] - exact[0]).powi(2) + (y[1] - exact[1]).powi(2)).sqrt()
        };
        let e1 = err(0.1);
        let e2 = err(0.05);
        let order = (e1 / e2).log2();
        assert!(order > 4.5, "observed order {order}");
    }

    #[test]
    fn callback_stops_integration() {
        let cfg = Dp45::default();
        let f = |_t: f64, y: [f64; 2]| [y[1], -y[0]];
        let (t, _) = cfg.integrate(f, 0.0, [1.0, 0.0], 100.0, |t, _| {
            if t > 1.0 {
                StepOutcome::Stop
            } else {
                StepOutcome::Continue
            }
        });
        assert!(t > 1.0 && t < 1.2);
    }
}
