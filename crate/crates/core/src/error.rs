use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be positive")]
    ZeroDimension,

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("dilation factor must be at least 1")]
    ZeroDilation,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("resource guard exceeded: {what} exceeds cap {cap}")]
    ResourceLimit { what: &'static str, cap: usize },

    #[error("ideal has no generators (zero ideal)")]
    ZeroIdeal,

    #[error("generator {0:?} is the unit monomial (unit ideal)")]
    UnitIdeal(Vec<u64>),

    #[error("generators are not an antichain: {divisor:?} divides {multiple:?}")]
    NotAntichain {
        divisor: Vec<u64>,
        multiple: Vec<u64>,
    },

    #[error("invalid quasi-equigeneration witness: {0}")]
    InvalidWitness(String),

    #[error("ideal is not quasi-equigenerated")]
    NotQuasiEquigenerated,

    #[error("malformed series: {0}")]
    MalformedSeries(String),

    #[error("graph has no edges")]
    NoEdges,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status for the command-line tool: 1 for malformed input,
    /// 2 for unmet preconditions, 3 when a resource guard trips, 4 for
    /// internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::NotAntichain { .. }
            | Error::InvalidGraph(_)
            | Error::DimensionMismatch { .. }
            | Error::EmptyPointSet
            | Error::ZeroIdeal
            | Error::UnitIdeal(_) => 1,
            Error::ZeroDimension
            | Error::ZeroDilation
            | Error::InvalidWitness(_)
            | Error::NotQuasiEquigenerated
            | Error::MalformedSeries(_)
            | Error::NoEdges => 2,
            Error::ResourceLimit { .. } | Error::Overflow(_) => 3,
            Error::Inconsistent(_) => 4,
        }
    }
}
