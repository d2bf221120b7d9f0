use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("unknown group element `{0}`")]
    UnknownLabel(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },
    #[error("unsupported level {0} (supported: 0..=4)")]
    UnsupportedLevel(usize),
    #[error("not a cyclic shift algebra: {0}")]
    NotCyclic(String),
    #[error("energy-momentum off shell: E^2 = {e2}, |p|^2 + m^2 = {rhs}")]
    OffShell { e2: String, rhs: String },
    #[error("{0} has no exact rational square root")]
    NoRationalSqrt(String),
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
