//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension N must be at least 3, got {0}")]
    DimensionTooSmall(u32),

    #[error("weight exponent l must exceed -2, got {0}")]
    WeightTooSmall(f64),

    #[error("hardy coefficient mu = {mu} must lie below (N-2)^2/4 = {mu_bar}")]
    HardyTooLarge { mu: f64, mu_bar: f64 },

    #[error("nonlinearity exponent p must exceed 1 (by at least 1e-9), got {0}")]
    ExponentTooSmall(f64),

    #[error("p_- / p_+ curves are undefined for N <= 10+4l (N = {n}, l = {l})")]
    CurvesUndefined { n: u32, l: f64 },

    #[error("mu = {mu} lies outside [mu_star, 0] = [{mu_star}, 0]")]
    MuOutsideStarRange { mu: f64, mu_star: f64 },

    #[error("gamma = {gamma} lies outside [1, gamma_max) = [1, {gamma_max})")]
    GammaOutOfRange { gamma: f64, gamma_max: f64 },

    #[error("the origin is not a saddle: L^(p-1) - mu = {0} <= 0")]
    NotASaddle(f64),

    #[error("no positive equilibrium: mu = {mu} >= L^(p-1) = {l_pow}")]
    NoPositiveEquilibrium { mu: f64, l_pow: f64 },

    #[error("trajectory left the positive half-plane w > 0 at t = {0}")]
    PositivityLost(f64),

    #[error("trajectory is empty")]
    EmptyTrajectory,

    #[error("kelvin transform needs p > (N+l)/(N-2); transformed weight {m} <= -2")]
    KelvinUndefined { m: f64 },

    #[error("support [{lo}, {hi}] not contained in the solution domain [{dom_lo}, {dom_hi}]")]
    SupportOutsideDomain {
        lo: f64,
        hi: f64,
        dom_lo: f64,
        dom_hi: f64,
    },

    #[error("annulus bounds must satisfy 0 < sigma < R, got sigma = {sigma}, r = {r}")]
    BadAnnulus { sigma: f64, r: f64 },

    #[error("quadrature did not converge on [{a}, {b}]: residual estimate {estimate}")]
    QuadratureDidNotConverge { a: f64, b: f64, estimate: f64 },

    #[error("sample grid too coarse: {0}")]
    GridTooCoarse(&'static str),

    #[error("invalid sweep grid: {0}")]
    BadGrid(&'static str),

    #[error("bisection bracket does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
}
