use thiserror::Error;

/// Errors produced by the classification library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {0} has a boundary of codimension 2 (some part between 1 and the largest part is missing)")]
    BoundaryCodimension(String),

    #[error("{index} is not a codimension-4 index of {tau}")]
    NotCodim4Index { tau: String, index: usize },

    #[error("{part} is not a codimension-2 part of {tau}")]
    NotCodim2Part { tau: String, part: usize },

    #[error("part {0} is even; only odd parts carry a distinguished element")]
    EvenPart(usize),

    #[error("k = {k} is out of range, expected 0 < k < {n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("ambient size {n} is too small for E_{i} (needs {needed})")]
    AmbientTooSmall { i: usize, n: usize, needed: usize },

    #[error("group closure exceeded the size cap of {0} elements")]
    SizeCapExceeded(usize),

    #[error("subset is not a normal subgroup")]
    NotNormal,

    #[error("element {0} is not central")]
    NotCentral(usize),

    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("scalar {0} is not a fourth root of unity")]
    InvalidScalar(String),

    #[error("invalid orbit datum: {0}")]
    InvalidDatum(String),

    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("character table construction failed: {0}")]
    CharacterTable(String),

    #[error("embedded catalog is malformed: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
