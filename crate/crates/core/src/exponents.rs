//! Closed-form constants and root-solved critical exponents.
//!
//! The dividing exponent p_c(l,μ) of the (μ,p)-plane is characterized as the
//! unique root in p > 1 of
//!
//! ```text
//!     f(p,μ) = (2p + l + (l+2)·γ_M(p,μ)) / (p-1) = N,
//! ```
//!
//! where γ_M(p,μ) is the largest admissible exponent of the weighted
//! integral estimate (see [`crate::estimates`]).  For μ ≤ 0 the root has a
//! closed form, infinite when N ≤ 10+4l; for μ > 0 it is obtained by
//! bracketed bisection (`f` is strictly decreasing in p, so bisection is
//! unconditionally convergent).
//!
//! The same plane carries the cubic
//!
//! ```text
//!     h_μ(m) = 4m³ + 4(l+4-N)m² + (N-2)(N-10-4l)m + 4μ(l+2),   m = (l+2)/(p-1),
//! ```
//!
//! whose roots in (0, √μ̄) trace the curves p_±(μ) bounding the stable
//! existence region for μ ≤ 0, with the corner values μ★ and p★ in closed
//! form.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::{mu_bar, validate_nlmu, Parameters, MIN_P_GAP};

/// A critical exponent, possibly the +∞ sentinel.
///
/// The sentinel is deliberately not a float infinity: it serializes as the
/// string `"inf"` and formats as `inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalExponent {
    Finite(f64),
    Infinite,
}

impl CriticalExponent {
    #[inline]
    pub fn finite(&self) -> Option<f64> {
        match self {
            CriticalExponent::Finite(v) => Some(*v),
            CriticalExponent::Infinite => None,
        }
    }

    #[inline]
    pub fn is_infinite(&self) -> bool {
        matches!(self, CriticalExponent::Infinite)
    }

    /// Value for comparisons; the sentinel maps to `f64::INFINITY`.
    #[inline]
    pub fn as_f64(&self) -> f64 {
        match self {
            CriticalExponent::Finite(v) => *v,
            CriticalExponent::Infinite => f64::INFINITY,
        }
    }
}

impl Serialize for CriticalExponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CriticalExponent::Finite(v) => s.serialize_f64(*v),
            CriticalExponent::Infinite => s.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for CriticalExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CriticalExponent::Finite(v) => write!(f, "{v}"),
            CriticalExponent::Infinite => write!(f, "inf"),
        }
    }
}

fn gamma_max_raw(mb: f64, mu_plus: f64, p: f64) -> f64 {
    if mu_plus == 0.0 {
        2.0 * p + 2.0 * (p * (p - 1.0)).sqrt() - 1.0
    } else {
        ((2.0 * mb - mu_plus) * p + mu_plus - mb
            + 2.0 * (mb * (mb - mu_plus) * p * (p - 1.0)).sqrt())
            / ((p - 1.0) * mu_plus + mb)
    }
}

/// Largest admissible estimate exponent γ_M(p,μ).
///
/// Constant in μ for μ ≤ 0, where it reduces to `2p + 2√(p(p-1)) - 1`, the
/// larger root of (γ+1)² = 4pγ.  Strictly greater than 1 for p > 1.
pub fn gamma_max(params: &Parameters) -> f64 {
    gamma_max_raw(params.mu_bar(), params.mu().max(0.0), params.p())
}

fn f_raw(l: f64, mb: f64, mu_plus: f64, p: f64) -> f64 {
    (2.0 * p + l + (l + 2.0) * gamma_max_raw(mb, mu_plus, p)) / (p - 1.0)
}

/// The dimension-balance function f(p,μ) whose root in p locates p_c(l,μ).
///
/// Strictly decreasing in p; tends to +∞ as p → 1⁺ and to 2 as p → ∞.
pub fn f_of_p(params: &Parameters) -> f64 {
    f_raw(
        params.l(),
        params.mu_bar(),
        params.mu().max(0.0),
        params.p(),
    )
}

/// Algebraically expanded form of [`f_of_p`]; must agree with the quotient
/// form to rounding.  Kept as an independent evaluation route.
pub fn f_of_p_expanded(params: &Parameters) -> f64 {
    let p = params.p();
    let l = params.l();
    let mb = params.mu_bar();
    let mu_plus = params.mu().max(0.0);
    let inv = 1.0 / (p - 1.0);
    2.0 + 2.0 * (l + 2.0) / ((p - 1.0) * mu_plus + mb)
        * (mb + mb * inv + (mb * (mb - mu_plus) * (1.0 + inv)).sqrt())
}

/// Bracketed bisection on a sign change of `f`; relative tolerance on the
/// abscissa.  Unconditionally convergent on a monotone bracket.
pub(crate) fn bisect(f: impl Fn(f64) -> f64, lo: f64, hi: f64, rel_tol: f64) -> Result<f64> {
    let mut lo = lo;
    let mut hi = hi;
    let mut flo = f(lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() * fhi.signum() > 0.0 {
        return Err(Error::NoSignChange { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel_tol * mid.abs().max(f64::MIN_POSITIVE) {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Closed form of p_c(l,μ) for μ ≤ 0 (constant in μ there).
pub fn p_critical_closed_form(n: u32, l: f64) -> CriticalExponent {
    let nf = n as f64;
    if nf <= 10.0 + 4.0 * l {
        return CriticalExponent::Infinite;
    }
    let a = nf - 2.0;
    let num = a * a - 2.0 * (l + 2.0) * (nf + l)
        + 2.0 * (l + 2.0) * ((nf + l) * (nf + l) - a * a).sqrt();
    CriticalExponent::Finite(num / (a * (nf - 10.0 - 4.0 * l)))
}

/// p_c(l,μ) solved as the root of f(p,μ) = N.
///
/// This is the evaluation route that does not use the μ ≤ 0 closed form;
/// for μ ≤ 0 it requires N > 10+4l (otherwise f stays above N for every p
/// and the bracket search fails with [`Error::NoSignChange`]).
pub fn p_critical_by_root(n: u32, l: f64, mu: f64) -> Result<f64> {
    validate_nlmu(n, l, mu)?;
    let nf = n as f64;
    let mb = mu_bar(n);
    let mu_plus = mu.max(0.0);
    let g = |p: f64| f_raw(l, mb, mu_plus, p) - nf;

    let lo = 1.0 + MIN_P_GAP;
    let mut hi = 2.0;
    let mut doublings = 0;
    while g(hi) >= 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 60 {
            return Err(Error::NoSignChange { lo, hi });
        }
    }
    bisect(g, lo, hi, 1e-12)
}

/// The critical exponent p_c(l,μ): closed form for μ ≤ 0 (with the +∞
/// sentinel when N ≤ 10+4l), bracketed bisection on f(p,μ) = N for μ > 0.
pub fn p_critical(n: u32, l: f64, mu: f64) -> Result<CriticalExponent> {
    validate_nlmu(n, l, mu)?;
    if mu <= 0.0 {
        Ok(p_critical_closed_form(n, l))
    } else {
        p_critical_by_root(n, l, mu).map(CriticalExponent::Finite)
    }
}

/// The cubic h_μ(m) controlling the p_± curves; m = (l+2)/(p-1).
pub fn h_cubic(m: f64, mu: f64, n: u32, l: f64) -> f64 {
    let nf = n as f64;
    4.0 * m * m * m + 4.0 * (l + 4.0 - nf) * m * m
        + (nf - 2.0) * (nf - 10.0 - 4.0 * l) * m
        + 4.0 * mu * (l + 2.0)
}

fn require_supercritical_dimension(n: u32, l: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    if !(l > -2.0) {
        return Err(Error::WeightTooSmall(l));
    }
    let nf = n as f64;
    let k = nf - 10.0 - 4.0 * l;
    if k <= 0.0 {
        return Err(Error::CurvesUndefined { n, l });
    }
    Ok(k)
}

/// μ★, the most negative Hardy coefficient for which the stable region
/// reaches below μ = 0.  Defined for N > 10+4l; the local maximum of h_μ★
/// at m = (N-10-4l)/6 touches zero there.
pub fn mu_star(n: u32, l: f64) -> Result<f64> {
    let k = require_supercritical_dimension(n, l)?;
    let nf = n as f64;
    Ok(-(2.0 * nf + l - 2.0) * k * k / (108.0 * (l + 2.0)))
}

/// p★ = (N+2+2l)/(N-10-4l), the common limit of p_± as μ → μ★⁺.
pub fn p_star(n: u32, l: f64) -> Result<f64> {
    let k = require_supercritical_dimension(n, l)?;
    let nf = n as f64;
    Ok((nf + 2.0 + 2.0 * l) / k)
}

/// The curves p_-(μ) ≤ p_+(μ) bounding the stable region for μ ∈ [μ★, 0]
/// and N > 10+4l, located through the roots m_∓ of h_μ on (0, √μ̄).
///
/// p_+ is the +∞ sentinel at μ = 0 (where m_+ = 0).
pub fn p_plus_minus(mu: f64, n: u32, l: f64) -> Result<(f64, CriticalExponent)> {
    let k = require_supercritical_dimension(n, l)?;
    let ms = mu_star(n, l)?;
    let slack = 1e-12 * ms.abs().max(1.0);
    if mu < ms - slack || mu > slack {
        return Err(Error::MuOutsideStarRange { mu, mu_star: ms });
    }
    let mu = mu.clamp(ms, 0.0);
    let nf = n as f64;
    let m_peak = k / 6.0;
    let m_hi = (nf - 2.0) / 2.0; // sqrt(mu_bar); h < 0 there for mu < mu_bar
    let h = |m: f64| h_cubic(m, mu, n, l);

    let h_peak = h(m_peak);
    let (m_minus, m_plus) = if h_peak <= 0.0 {
        // mu = mu_star up to rounding: double root at the peak.
        (m_peak, m_peak)
    } else {
        let m_minus = bisect(h, m_peak, m_hi, 1e-12)?;
        let m_plus = if h(0.0) >= 0.0 {
            0.0 // mu = 0: the root sits exactly at the origin
        } else {
            bisect(h, 0.0, m_peak, 1e-12)?
        };
        (m_minus, m_plus)
    };

    let p_minus = (l + 2.0) / m_minus + 1.0;
    let p_plus = if m_plus <= f64::MIN_POSITIVE {
        CriticalExponent::Infinite
    } else {
        CriticalExponent::Finite((l + 2.0) / m_plus + 1.0)
    };
    Ok((p_minus, p_plus))
}

/// H(p,γ,l) = N(p-1) - (γ+1)l - 2(p+γ), the sign of the integral-estimate
/// scaling exponent times (p-1).
pub fn h_balance(p: f64, gamma: f64, n: u32, l: f64) -> f64 {
    let nf = n as f64;
    nf * (p - 1.0) - (gamma + 1.0) * l - 2.0 * (p + gamma)
}

/// The γ solving H(p,γ,l) = 0 (H is linear in γ).
pub fn gamma_star(p: f64, n: u32, l: f64) -> f64 {
    let nf = n as f64;
    (nf * (p - 1.0) - 2.0 * p - l) / (l + 2.0)
}
