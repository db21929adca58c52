use thiserror::Error;

/// Errors raised by braid construction, the ordering engine and the invariant code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} is out of range for B{strands}")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand counts differ: B{left} vs B{right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("band generator a({i},{j}) requires 1 <= i < j <= {strands}")]
    BandIndices { i: usize, j: usize, strands: usize },

    #[error("word contains both sigma_{0} and its inverse at its minimal index")]
    UnreducedWord(usize),

    #[error("handle reduction exceeded the step limit of {0}")]
    StepLimitExceeded(u64),

    #[error("floor scan exceeded its cap of {0}")]
    FloorCapExceeded(usize),

    #[error("closure has {0} components, a knot is required")]
    NotAKnot(usize),

    #[error("exact polynomial division failed")]
    InexactDivision,

    #[error("parity violation: {0}")]
    Parity(&'static str),

    #[error("catalogue entry `{name}` failed certification: {reason}")]
    Certification { name: String, reason: String },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
