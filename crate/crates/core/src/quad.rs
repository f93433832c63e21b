//! Composite Gauss-Legendre quadrature shared by the stability and
//! estimates modules.
//!
//! All weighted radial integrals in this crate are one-dimensional and, once
//! written in t = ln r, smooth on a finite interval; a 16-node rule per
//! panel with panel doubling until the value settles is both fast and gives
//! an error estimate for free (the last refinement difference).

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

static GL16: Lazy<(Vec<f64>, Vec<f64>)> = Lazy::new(|| gauss_legendre(16));

/// Fixed-panel composite 16-node rule.
fn composite(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let (nodes, weights) = &*GL16;
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for k in 0..panels {
        let lo = a + k as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(weights.iter()) {
            acc += w * f(mid + half * x);
        }
        total += acc * half;
    }
    total
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    /// Difference between the last two panel refinements.
    pub error_estimate: f64,
    pub panels: usize,
}

/// Integrates `f` over [a, b], doubling the panel count until the result
/// changes by less than `rel_tol` relative (floor 1e-300 absolute).
///
/// Integrands built on grid interpolation are only piecewise smooth, so the
/// refinement may plateau near the interpolation error; a plateau below a
/// loose ceiling is accepted, anything worse is reported as failure.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<QuadResult> {
    const MAX_PANELS: usize = 1 << 14;
    const LOOSE_REL: f64 = 1e-6;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            panels: 0,
        });
    }
    let mut panels = 2;
    let mut prev = composite(f, a, b, panels);
    let mut best_err = f64::INFINITY;
    loop {
        panels *= 2;
        let cur = composite(f, a, b, panels);
        let err = (cur - prev).abs();
        let scale = cur.abs().max(1e-300);
        if err <= rel_tol * scale.max(1.0) || err <= rel_tol.max(1e-15) * scale {
            return Ok(QuadResult {
                value: cur,
                error_estimate: err,
                panels,
            });
        }
        best_err = best_err.min(err);
        if panels >= MAX_PANELS {
            if err <= LOOSE_REL * scale.max(1.0) {
                return Ok(QuadResult {
                    value: cur,
                    error_estimate: err,
                    panels,
                });
            }
            return Err(Error::QuadratureDidNotConverge {
                a,
                b,
                estimate: err,
            });
        }
        prev = cur;
    }
}

/// Surface area of the unit sphere S^{N-1}: 2 π^{N/2} / Γ(N/2).
pub fn unit_sphere_area(n: u32) -> f64 {
    let nf = n as f64;
    // Γ(N/2) for integer N: exact factorial / double-factorial forms.
    let gamma_half = if n % 2 == 0 {
        let mut g = 1.0;
        for k in 1..(n / 2) {
            g *= k as f64;
        }
        g
    } else {
        let mut g = std::f64::consts::PI.sqrt();
        let mut x = 0.5;
        while x < nf / 2.0 - 0.25 {
            g *= x;
            x += 1.0;
        }
        g
    };
    2.0 * std::f64::consts::PI.powf(nf / 2.0) / gamma_half
}
