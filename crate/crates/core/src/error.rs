use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("malformed group spec: {0}")]
    MalformedSpec(String),

    #[error("table is not a group: {0}")]
    NotClosed(String),

    #[error("construction invalid: {0}")]
    ConstructionInvalid(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("x^2 is not a rational multiple of x")]
    NotScalarMultiple,

    #[error("idempotency check failed: {0}")]
    IdempotencyFailure(String),

    #[error("dimension audit failed: predicted {predicted}, rank {rank}")]
    AuditFailure { predicted: u64, rank: u64 },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("invalid selector: {0}")]
    Selector(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
