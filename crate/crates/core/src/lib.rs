//! Numerical toolkit for the Hardy-Lane-Emden equation
//!
//! ```text
//!     Δu + μ|x|⁻² u + |x|ˡ |u|^{p-1} u = 0   in ℝᴺ or ℝᴺ\{0},
//! ```
//!
//! with `N ≥ 3`, `l > -2`, `p > 1` and Hardy coefficient `μ < (N-2)²/4`.
//!
//! The crate computes the closed-form constants and root-solved critical
//! exponents attached to this equation, classifies the (μ,p)-plane into
//! existence / non-existence regions for stable solutions, constructs
//! positive radial solutions by unstable-manifold shooting in the
//! Emden-Fowler phase plane, and numerically verifies the stability
//! quadratic form, the weighted integral estimates and the Pohozaev
//! identity that underpin those regions.
//!
//! Module map:
//!
//! * [`params`]     - validated parameter tuple and derived constants
//! * [`exponents`]  - γ_M, f(p,μ), p_c(l,μ), the cubic h_μ(m), μ★/p★/p±
//! * [`regions`]    - S / Σ membership, point classification, plane sweeps
//! * [`phase`]      - the autonomous system w'=v, v'=-Av+(L^{p-1}-μ)w-|w|^{p-1}w
//! * [`radial`]     - radial solutions, the singular solution U_s, Kelvin transform
//! * [`stability`]  - the quadratic form Q_u, Hardy margins, adversarial bumps
//! * [`estimates`]  - weighted integral estimates, annulus growth, Pohozaev checks
//!
//! All operations are pure functions of value inputs and are safe to call
//! concurrently from any number of threads.

pub mod error;
pub mod estimates;
pub mod exponents;
pub mod fmt;
pub mod ode;
pub mod params;
pub mod phase;
pub mod quad;
pub mod radial;
pub mod regions;
pub mod sampling;
pub mod stability;

pub use error::{Error, Result};
pub use exponents::CriticalExponent;
pub use params::{DerivedConstants, Parameters};
