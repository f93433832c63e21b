//! The parameter tuple (N, l, μ, p) and the constants derived from it.
//!
//! Every computation in the crate starts from a validated [`Parameters`]
//! value; the constructor is the single place where the admissibility
//! constraints are enforced:
//!
//! * `N ≥ 3`
//! * `l > -2`
//! * `μ < μ̄ = (N-2)²/4` (the best Hardy constant)
//! * `p > 1` (rejected below `1 + 1e-9`, where the exponent machinery degenerates)

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest admissible gap between p and 1.
pub const MIN_P_GAP: f64 = 1e-9;

/// Validated parameter tuple of the equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    n: u32,
    l: f64,
    mu: f64,
    p: f64,
}

impl Parameters {
    pub fn new(n: u32, l: f64, mu: f64, p: f64) -> Result<Self> {
        validate_nlmu(n, l, mu)?;
        if !(p >= 1.0 + MIN_P_GAP) {
            return Err(Error::ExponentTooSmall(p));
        }
        Ok(Self { n, l, mu, p })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn l(&self) -> f64 {
        self.l
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Best Hardy constant μ̄ = (N-2)²/4.
    #[inline]
    pub fn mu_bar(&self) -> f64 {
        mu_bar(self.n)
    }

    /// (l+2)/(p-1), the decay exponent of the singular solution.
    #[inline]
    pub fn m0(&self) -> f64 {
        (self.l + 2.0) / (self.p - 1.0)
    }

    pub fn derive(&self) -> DerivedConstants {
        derive(self)
    }
}

#[inline]
pub fn mu_bar(n: u32) -> f64 {
    let h = (n as f64 - 2.0) / 2.0;
    h * h
}

/// Checks the (N, l, μ) part of the admissibility constraints.
pub fn validate_nlmu(n: u32, l: f64, mu: f64) -> Result<()> {
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    if !(l > -2.0) {
        return Err(Error::WeightTooSmall(l));
    }
    let mb = mu_bar(n);
    if !(mu < mb) {
        return Err(Error::HardyTooLarge { mu, mu_bar: mb });
    }
    Ok(())
}

/// Closed-form quantities derived from a parameter tuple.
///
/// `nu_minus`/`nu_plus` are the roots of ν(N-2-ν) = μ, `a_coeff` is the
/// damping A = N-2-2(l+2)/(p-1) of the Emden-Fowler system, `l_pow` is
/// L^{p-1} = (l+2)/(p-1)·(N-2-(l+2)/(p-1)), and `w0 = (L^{p-1}-μ)^{1/(p-1)}`
/// is the positive equilibrium amplitude, present only when `L^{p-1} > μ`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DerivedConstants {
    pub params: Parameters,
    pub mu_bar: f64,
    pub mu_plus: f64,
    pub l_minus: f64,
    pub a_coeff: f64,
    pub l_pow: f64,
    pub nu_minus: f64,
    pub nu_plus: f64,
    pub w0: Option<f64>,
    pub sobolev_p: f64,
}

impl DerivedConstants {
    /// L^{p-1} - μ, the linear coefficient of the phase system.
    #[inline]
    pub fn spring(&self) -> f64 {
        self.l_pow - self.params.mu()
    }
}

pub fn derive(params: &Parameters) -> DerivedConstants {
    let n = params.n() as f64;
    let l = params.l();
    let mu = params.mu();
    let p = params.p();

    let mb = params.mu_bar();
    let m0 = params.m0();
    let a_coeff = n - 2.0 - 2.0 * m0;
    let l_pow = m0 * (n - 2.0 - m0);
    let root = (mb - mu).sqrt();
    let nu_minus = mb.sqrt() - root;
    let nu_plus = mb.sqrt() + root;
    let w0 = if l_pow > mu {
        Some((l_pow - mu).powf(1.0 / (p - 1.0)))
    } else {
        None
    };

    DerivedConstants {
        params: *params,
        mu_bar: mb,
        mu_plus: mu.max(0.0),
        l_minus: l.min(0.0),
        a_coeff,
        l_pow,
        nu_minus,
        nu_plus,
        w0,
        sobolev_p: (n + 2.0 + 2.0 * l) / (n - 2.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert!(matches!(
            Parameters::new(2, 0.0, 0.0, 2.0),
            Err(Error::DimensionTooSmall(2))
        ));
        assert!(matches!(
            Parameters::new(5, -2.0, 0.0, 2.0),
            Err(Error::WeightTooSmall(_))
        ));
        assert!(matches!(
            Parameters::new(5, 0.0, 2.25, 2.0),
            Err(Error::HardyTooLarge { .. })
        ));
        assert!(matches!(
            Parameters::new(5, 0.0, 0.0, 1.0),
            Err(Error::ExponentTooSmall(_))
        ));
        // Just above the degenerate corner is fine.
        assert!(Parameters::new(5, 0.0, 0.0, 1.0 + 2e-9).is_ok());
    }

    #[test]
    fn derive_matches_hand_computed_values() {
        // N=12, l=0, mu=0, p=5: A = 9, L^{p-1} = 0.5 * 9.5 = 4.75.
        let d = Parameters::new(12, 0.0, 0.0, 5.0).unwrap().derive();
        assert_relative_eq!(d.a_coeff, 9.0, epsilon = 1e-14);
        assert_relative_eq!(d.l_pow, 4.75, epsilon = 1e-14);
        assert_relative_eq!(d.w0.unwrap(), 4.75f64.powf(0.25), epsilon = 1e-14);
        assert!((d.w0.unwrap() - 1.4762959).abs() < 1e-7);
        assert_eq!(d.nu_minus, 0.0);
        assert_relative_eq!(d.mu_bar, 25.0, epsilon = 1e-14);

        // mu = 0 forces the roots 0 and N-2.
        let d = Parameters::new(3, 0.0, 0.0, 2.0).unwrap().derive();
        assert_eq!(d.nu_minus, 0.0);
        assert_relative_eq!(d.nu_plus, 1.0, epsilon = 1e-14);
        assert_relative_eq!(d.mu_bar, 0.25, epsilon = 1e-14);
    }

    #[test]
    fn nu_minus_matches_bisection_oracle() {
        // Independent oracle: bisect nu(1-nu) = 0.2 on [0, 0.5] for N=3.
        let mut lo = 0.0f64;
        let mut hi = 0.5f64;
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if mid * (1.0 - mid) < 0.2 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        assert!((oracle - 0.2763932).abs() < 1e-6);

        let d = Parameters::new(3, 0.0, 0.2, 3.0).unwrap().derive();
        assert_relative_eq!(d.nu_minus, oracle, epsilon = 1e-12);
    }

    #[test]
    fn root_identities_hold() {
        for &(n, l, mu, p) in &[
            (11u32, 0.0, 10.0, 2.0),
            (12, 1.0, -3.0, 5.0),
            (3, -0.5, 0.2, 3.0),
            (20, 2.0, 60.0, 1.5),
        ] {
            let params = Parameters::new(n, l, mu, p).unwrap();
            let d = params.derive();
            // nu_- (N-2-nu_-) = mu to 1e-12 relative.
            let lhs = d.nu_minus * (n as f64 - 2.0 - d.nu_minus);
            assert_relative_eq!(lhs, mu, epsilon = 1e-12, max_relative = 1e-12);
            assert!(d.nu_minus <= d.nu_plus);
            // w0^{p-1} = L^{p-1} - mu when defined.
            if let Some(w0) = d.w0 {
                assert_relative_eq!(
                    w0.powf(p - 1.0),
                    d.l_pow - mu,
                    max_relative = 1e-12
                );
            }
        }
    }
}
