use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid period {0}: expected 2 <= n <= 64")]
    InvalidPeriod(usize),
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("reflection index {index} out of range for period {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("parabolic subgroup generated by every simple reflection is infinite")]
    InfiniteParabolic,
    #[error("length {length} exceeds the configured cap {cap}")]
    CapExceeded { length: usize, cap: usize },
    #[error("element is not a minimal coset representative for the given parabolic subset")]
    NotInQuotient,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("spiral repetition count must be at least 2, got {0}")]
    InvalidSpiral(usize),
    #[error("element is not smooth")]
    NotSmooth,
    #[error("malformed order relation: {0}")]
    MalformedRelation(String),
    #[error("diagram is not increasing")]
    NotIncreasing,
    #[error("diagram is not fully supported")]
    NotFullySupported,
    #[error("diagram is not spherical")]
    NotSpherical,
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),
    #[error("series division requires a unit constant term")]
    NonUnitDivisor,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
