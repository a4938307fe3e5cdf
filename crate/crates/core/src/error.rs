use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {symbol} is not in the alphabet {alphabet}")]
    UnknownSymbol { symbol: i32, alphabet: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("malformed filling: {0}")]
    MalformedFilling(String),

    #[error("shape or alphabet mismatch: {0}")]
    Mismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("straightening exceeded {cap} rewrite steps; last terms: {}", trace.join(" | "))]
    IterationCap { cap: u64, trace: Vec<String> },

    #[error("rewrite site does not match the expected pattern: {0}")]
    RewritePattern(String),

    #[error("configuration needs {needed} coordinates, above the bound {bound}; use a smaller shape or rank")]
    DimensionBound { needed: u64, bound: u64 },

    #[error("vector is not in the span of the basis modulo relations: {0}")]
    Inconsistent(String),

    #[error("group element rejected: {0}")]
    GroupElement(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
