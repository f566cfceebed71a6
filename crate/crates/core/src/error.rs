//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeTooSmall,
    #[error("field order {0} exceeds the supported maximum 2^16")]
    FieldTooLarge(u64),
    #[error("modulus is invalid: {0}")]
    BadModulus(String),
    #[error("element encoding {enc} is out of range for a field of order {order}")]
    ElementOutOfRange { enc: u32, order: u32 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operands belong to different field specs")]
    FieldMismatch,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix data has length {got}, expected {expected}")]
    EntryCount { expected: usize, got: usize },
    #[error("row {index} has length {got}, expected {expected}")]
    RowLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix shapes are incompatible: {0}")]
    ShapeMismatch(String),
    #[error("code is empty")]
    EmptyCode,
    #[error("subspace has dimension {got}, expected {expected}")]
    WrongDimension { expected: usize, got: usize },
    #[error("sunflower center is undetermined for a code with fewer than two elements")]
    CenterUndetermined,
    #[error("supplied subspace is not the sunflower center of the code")]
    NotTheCenter,
    #[error("invalid type vector: {0}")]
    BadTypeVector(String),
    #[error("invalid flag: {0}")]
    BadFlag(String),
    #[error("flag has type {got:?}, expected {expected:?}")]
    FlagTypeMismatch {
        expected: Vec<usize>,
        got: Vec<usize>,
    },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("projection indices must be strictly increasing and in range")]
    BadProjectionIndices,
    #[error("enumeration would produce {needed} items, exceeding the cap {cap}")]
    CapExceeded { needed: String, cap: usize },
    #[error(
        "predicate undefined for a singleton code: the distance convention d_f = 0 {}",
        if *.max_distance == 2 { "would make it hold vacuously (D = 2)" } else { "can never equal the target" }
    )]
    SingletonUndefined { max_distance: usize },
    #[error("code is not disjoint; the disjoint checker does not apply")]
    NotDisjoint,
    #[error("code is disjoint; the non-disjoint checker does not apply")]
    IsDisjoint,
    #[error("invalid construction parameter: {0}")]
    BadConstruction(String),
    #[error("construction self-check failed: {0}")]
    ConstructionCheck(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
