//! Shared error type for the crate.

/// Errors produced by any module in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite input: {context}")]
    NonFinite { context: &'static str },

    /// The (cos, sin) vector is too close to the origin to carry an angle.
    #[error("degenerate heading encoding: |(c, s)| = {norm:e} is below 1e-12")]
    DegenerateEncoding { norm: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty input: {context}")]
    Empty { context: &'static str },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("sequence too short: {len} frames, need at least {min}")]
    SequenceTooShort { len: usize, min: usize },

    /// A triplet violates the ordering requirement |n_a - n_near| < |n_a - n_far|.
    #[error("invalid triplet: near gap {near_gap} is not smaller than far gap {far_gap}")]
    InvalidTriplet { near_gap: i64, far_gap: i64 },

    #[error("index {index} out of bounds for sequence of length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("ray does not intersect the ground plane")]
    NoIntersection,

    #[error("invalid camera: {0}")]
    InvalidCamera(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Training aborts rather than recording or applying non-finite values.
    #[error("non-finite {what} encountered")]
    NonFiniteValue { what: &'static str },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
