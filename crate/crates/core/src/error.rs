use thiserror::Error;

/// Everything that can go wrong in the crate.
///
/// Variants are grouped loosely by the module that raises them; the CLI maps
/// `DegenerateObstruction` to its own exit status and everything else to a
/// validation failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid partition {0:?}: parts must be positive integers")]
    InvalidPartition(String),

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series division by the zero series")]
    ZeroDivisor,
    #[error("numerator is not divisible by t^{valuation}")]
    NotDivisible { valuation: usize },

    #[error("ramification degree d must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("partition {partition} has weight {actual}, expected {expected}")]
    WeightMismatch {
        partition: String,
        expected: u32,
        actual: u32,
    },
    #[error("polynomial weights differ: {left} vs {right}")]
    InhomogeneousTerms { left: u32, right: u32 },
    #[error("complex dimension must be even here, got {0}")]
    OddDimension(u32),
    #[error("complex dimension must be positive")]
    ZeroDimension,
    #[error("Pontrjagin class p_{k} needs 2k <= n, but n = {n}")]
    PontrjaginOutOfRange { k: u32, n: u32 },
    #[error("Chern data for n = {n} is missing or has extra partitions")]
    IncompleteChernData { n: u32 },

    #[error("invalid cover input: {0}")]
    InvalidCover(String),
    #[error("normal Chern number index {k} out of range 1..={max}")]
    TowerIndex { k: usize, max: usize },
    #[error("{0}")]
    InvalidInput(String),
    #[error("obstruction is identically zero in d")]
    DegenerateObstruction,
}

pub type Result<T> = std::result::Result<T, Error>;
