use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list (line {line}): {reason}")]
    MalformedEdgeList { line: usize, reason: String },

    #[error("bad generator parameters: {0}")]
    BadParams(String),

    #[error("graph is disconnected ({} components: {components:?})", components.len())]
    Disconnected { components: Vec<Vec<usize>> },

    #[error("operation requires at least one edge")]
    EmptyEdgeSet,

    #[error("{what} needs at least {min} vertices")]
    TooSmall { what: &'static str, min: usize },

    #[error("input of size {size} exceeds the supported limit {limit} for {what}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("invalid partition: {0}")]
    BadPartition(String),

    #[error("partition is not equitable")]
    NotEquitable,

    #[error("{theorem}: hypothesis failed: {}", reasons.join("; "))]
    HypothesisFailed { theorem: &'static str, reasons: Vec<String> },

    #[error("{theorem}: not applicable: {reason}")]
    Inapplicable { theorem: &'static str, reason: String },
}

impl Error {
    pub(crate) fn hypothesis(theorem: &'static str, reasons: Vec<String>) -> Self {
        Error::HypothesisFailed { theorem, reasons }
    }
}
