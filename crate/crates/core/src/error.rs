use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("time t = {t} outside the profile domain [{lo}, {hi}]")]
    Domain { t: f64, lo: f64, hi: f64 },

    #[error("no instantaneous vacuum at t = {t}: omega^2 = {omega_sq} is not positive")]
    NoInstantaneousVacuum { t: f64, omega_sq: f64 },

    #[error("integration failure at t = {t}: Wronskian drift {drift:.3e} exceeds {limit:.3e}")]
    IntegrationFailure { t: f64, drift: f64, limit: f64 },

    #[error("integration stalled at t = {t}: {detail}")]
    IntegrationStalled { t: f64, detail: String },

    #[error("initial sample violates the Wronskian condition: residual {residual:.3e} > {limit:.3e}")]
    InvalidInit { residual: f64, limit: f64 },

    #[error("polar decomposition undefined: |u| = 0 at t = {t}")]
    Decomposition { t: f64 },

    #[error("phase step |dtheta| = {dtheta:.3} >= pi/2 between samples at t = {t}; grid too coarse")]
    PhaseAliasing { t: f64, dtheta: f64 },

    #[error("operation unsupported for {kind} oscillator profiles")]
    UnsupportedKind { kind: &'static str },

    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("grid spacing is not uniform (max deviation {dev:.3e})")]
    NonUniformGrid { dev: f64 },

    #[error("invalid Bogoliubov pair: | |mu|^2 - |nu|^2 - 1 | = {defect:.3e}")]
    InvalidParams { defect: f64 },

    #[error("epsilon = {epsilon} below the ground-state energy omega/2 = {floor}")]
    BelowGroundState { epsilon: f64, floor: f64 },

    #[error("field mass m = {mass} exceeds 1.5*H0 = {limit}: Hankel order is imaginary; use the ODE path")]
    ImaginaryOrder { mass: f64, limit: f64 },

    #[error("z_start = {z} below the asymptotic regime (need z >= {min})")]
    AsymptoticRegime { z: f64, min: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
