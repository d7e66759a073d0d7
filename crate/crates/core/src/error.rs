use thiserror::Error;

/// Errors raised by diagram, semigroup, word and Rees-matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("degree mismatch: left operand has degree {left}, right operand has degree {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} index {index} out of range (valid: {min}..={max})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("circle count overflowed 64 bits")]
    CircleOverflow,

    #[error("{what} of degree {degree} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        degree: usize,
        bound: usize,
    },

    #[error("closure exceeded {0} elements; the generated monoid may be infinite")]
    LimitExceeded(usize),

    #[error("matching is not an idempotent of the Brauer monoid")]
    NotIdempotent,

    #[error("chip is not planar")]
    NotPlanar,

    #[error("chip degree {0} is odd")]
    OddDegree(usize),

    #[error("the given set is not an ideal")]
    NotAnIdeal,

    #[error("the ideal is not closed under the involution")]
    InvolutionNotClosed,

    #[error("structure has no involution")]
    NoInvolution,

    #[error("structure has no identity element")]
    NoIdentity,

    #[error("words must be non-empty")]
    EmptyWord,

    #[error("letter x{0} has no assigned value")]
    MissingAssignment(u32),

    #[error("sandwich matrix is not square and symmetric")]
    NotSymmetric,

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("invalid Rees matrix data: {0}")]
    InvalidRees(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }
}
