use thiserror::Error;

use crate::expr::ParseError;
use crate::rational::NetIndex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    InvalidRatio(String),

    #[error("{field}: {source}")]
    Parse {
        field: String,
        #[source]
        source: ParseError,
    },

    /// A polynomial has higher degree than the polar form it is being
    /// expanded against.
    #[error("{what} has degree {actual}, exceeding the requested degree {bound}")]
    DegreeOverflow { what: String, actual: String, bound: String },

    #[error("degenerate frame: {0}")]
    DegenerateFrame(String),

    #[error("control point {index} has zero weight")]
    ZeroWeight { index: NetIndex },

    #[error("weight vanishes at parameter {0}")]
    VanishingWeight(String),

    #[error("rational map is invalid: {0}")]
    InvalidMap(String),

    #[error("map kind does not match the requested net: {0}")]
    KindMismatch(String),

    #[error("coordinate index {index} out of range for dimension {dim}")]
    CoordinateOutOfRange { index: usize, dim: usize },

    #[error("{0}")]
    Dimension(String),

    #[error("oracle size limit exceeded: {what} = {size}, limit {limit}")]
    OracleLimit { what: &'static str, size: usize, limit: usize },

    #[error("verification failed at control point {index}: {detail}")]
    VerifyMismatch { index: NetIndex, detail: String },

    #[error("invalid argument {field}: {detail}")]
    InvalidArgument { field: String, detail: String },

    #[error("malformed net document: {0}")]
    Document(String),
}

impl Error {
    /// Process exit status used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidRatio(_) | Error::InvalidArgument { .. } | Error::Document(_) => 2,
            Error::ZeroWeight { .. } | Error::VanishingWeight(_) => 4,
            Error::VerifyMismatch { .. } => 5,
            Error::DivisionByZero
            | Error::DegreeOverflow { .. }
            | Error::DegenerateFrame(_)
            | Error::InvalidMap(_)
            | Error::KindMismatch(_)
            | Error::CoordinateOutOfRange { .. }
            | Error::Dimension(_)
            | Error::OracleLimit { .. } => 3,
        }
    }
}
