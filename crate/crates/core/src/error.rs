use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alpha must lie in (0, 1), got {0}")]
    AlphaRange(f64),

    #[error("sampled step magnitude exceeds 2^96; refusing to clamp")]
    StepOverflow,

    #[error("quadrature did not converge within the panel budget ({panels} panels, residual {residual:e})")]
    QuadratureBudget { panels: usize, residual: f64 },

    #[error("point set is empty")]
    EmptySet,

    #[error("duplicate point {0} in set")]
    DuplicatePoint(i128),

    #[error("point {0} already present in set")]
    PointPresent(i128),

    #[error("point {0} not a member of the set")]
    NotAMember(i128),

    #[error("set size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("kernel factorization failed at pivot {pivot} (value {value:e}); set may contain near-duplicate points")]
    KernelNotPd { pivot: usize, value: f64 },

    #[error("escape probability {value:e} breaches [0,1] beyond tolerance")]
    EscapeRange { value: f64 },

    #[error("equilibrium residual {residual:e} exceeds tolerance after refactorization")]
    ResidualBreach { residual: f64 },

    #[error("log-log fit requires at least 3 points with positive values and increasing n")]
    FitDomain,

    #[error("experiment aborted: {failed} of {total} runs failed")]
    TooManyFailures { failed: usize, total: usize },

    #[error("coupling experiments require alpha < 1/3 (got {0}); pass --force to explore anyway")]
    CouplingAlphaRange(f64),

    #[error("malformed event log: {0}")]
    LogFormat(String),

    #[error("bad configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
