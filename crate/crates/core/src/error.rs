use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: k = {k}, i = {i} (need k >= 2 and 1 <= i <= k)")]
    InvalidConfig { k: i64, i: i64 },

    #[error("charge index j = {j} outside 1..={max}")]
    ChargeOutOfRange { j: usize, max: usize },

    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("partition violates the restriction for k = {k}, i = {i}")]
    Restriction { k: usize, i: usize },

    #[error("invalid multiple partition: {0}")]
    InvalidMultiPartition(String),

    #[error("index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("interchange at position {pos} produces non-positive weight {weight}")]
    NonPositiveWeight { pos: usize, weight: i64 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("infeasible peaks between #{left} and #{right}: {reason}")]
    InfeasiblePeaks { left: usize, right: usize, reason: String },

    #[error("no path realizes the given peak charges")]
    NoPathForClusters,

    #[error("settling did not terminate within {cap} steps")]
    SettleCap { cap: usize },

    #[error("no insertion position for cluster {weight}^({charge})")]
    NoInsertion { weight: i64, charge: usize },

    #[error("ambiguous insertion for cluster {weight}^({charge}) gives distinct partitions")]
    AmbiguousInsertion { weight: i64, charge: usize },

    #[error("coefficient overflow")]
    Overflow,

    #[error("missing count for (n = {n}, m = {m})")]
    IncompleteCounts { n: usize, m: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
