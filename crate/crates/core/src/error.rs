use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(f64),
    #[error("integer matrix determinant is {0}, expected 1")]
    NotSymplectic(i64),
    #[error("matrix with trace {0} is not hyperbolic (need trace > 2)")]
    NotHyperbolic(i64),
    #[error("horocycle index must be 1 or 2, got {0}")]
    InvalidDirection(u8),
    #[error("point is not in the upper half-plane (y = {0})")]
    NotInHalfPlane(f64),
    #[error("denominator |cz+d| = {0:e} is too small")]
    DegenerateDenominator(f64),
    #[error("horizon T = {requested} is too long for eps = {eps:e}; the largest valid horizon is {max_valid}")]
    HorizonTooLong { requested: u32, eps: f64, max_valid: i64 },
    #[error("gamma mismatch: {0} vs {1}")]
    GammaMismatch(f64, f64),
    #[error("state is not normalised: t_0 = {0}")]
    NotNormalised(String),
    #[error("state is not hermitian at index ({0}, {1})")]
    NotHermitianState(i64, i64),
    #[error("cannot build a state from the zero element")]
    ZeroElement,
    #[error("states do not separate along horocycle {0}: generator norm of the difference is zero")]
    DegenerateDifference(u8),
    #[error("index ({nu1}, {nu2}) is outside the trace window |nu_i| < {half} for N = {dim}")]
    TraceWindow { nu1: i64, nu2: i64, dim: usize, half: f64 },
    #[error("dimension must be at least {min}, got {got}")]
    Dimension { min: usize, got: usize },
    #[error("invalid quantum system: {0}")]
    InvalidSystem(String),
    #[error("all stationary weights vanish; the GNS space is empty")]
    EmptySupport,
    #[error("level index {0} out of range for {1} levels")]
    LevelIndex(usize, usize),
    #[error("matrix is not hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("resolution must be a power of two >= 256, got {0}")]
    Resolution(usize),
    #[error("unknown experiment '{0}'")]
    UnknownExperiment(String),
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("refusing to emit an empty record set")]
    EmptyRecords,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
