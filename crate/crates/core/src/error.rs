use num_bigint::BigUint;
use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} occurs twice in the domain")]
    DuplicateDomainPoint { point: usize },

    #[error("point {point} occurs twice in the image")]
    DuplicateImagePoint { point: usize },

    #[error("point {point} is outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("point {point} is missing from the chart")]
    MissingPoint { point: usize },

    #[error("point {point} appears more than once in the chart")]
    RepeatedPoint { point: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("enumeration needs {required} items but the budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("element is not nilpotent")]
    NotNilpotent,

    #[error("invalid mark: {0}")]
    InvalidMark(String),

    #[error("multiplicity {value} for rank {rank} exceeds the {available} elements of that rank")]
    MultiplicityOutOfRange {
        rank: usize,
        value: BigUint,
        available: BigUint,
    },

    #[error("product counts differ inside rank class {rank}")]
    RankConstancyViolated { rank: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
