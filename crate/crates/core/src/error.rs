use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the kernels, the bound evaluators and the
/// table cache.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed partition {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("degree {n} exceeds the configured limit {limit}")]
    DegreeLimit { n: usize, limit: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what}: {value} is not divisible by {divisor}")]
    NotDivisible {
        what: &'static str,
        value: i128,
        divisor: i128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("bound context (n1={n1}, n2={n2}) is not admissible: {reason}")]
    Inadmissible {
        n1: usize,
        n2: usize,
        reason: String,
    },

    #[error("cost guard: shifted weight {weight} exceeds the degree limit {limit}")]
    CostGuard { weight: usize, limit: usize },

    #[error("unsupported cache header {found:?} (expected {expected:?})")]
    CacheVersion {
        found: String,
        expected: &'static str,
    },

    #[error("cache parse error at line {line}: {reason}")]
    CacheParse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
