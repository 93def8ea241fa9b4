use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("weight mismatch: {left} has weight {left_weight}, {right} has weight {right_weight}")]
    WeightMismatch {
        left: Partition,
        left_weight: usize,
        right: Partition,
        right_weight: usize,
    },

    #[error("{what} is out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("multiplicity of {label} is {value}, which is not a non-negative integer")]
    NonIntegral { label: String, value: String },

    #[error("construction failed for {lambda}: {reason}")]
    Construction { lambda: Partition, reason: String },

    #[error("class functions live on different groups (n = {0} and n = {1})")]
    GroupMismatch(usize, usize),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn weights(left: &Partition, right: &Partition) -> Self {
        Error::WeightMismatch {
            left: left.clone(),
            left_weight: left.weight(),
            right: right.clone(),
            right_weight: right.weight(),
        }
    }
}
