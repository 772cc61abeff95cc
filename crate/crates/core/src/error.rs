use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("commutation precondition violated: {0} do not commute")]
    CommutationViolated(String),
    #[error("vanishing Pochhammer denominator: {0}")]
    SingularParameters(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
