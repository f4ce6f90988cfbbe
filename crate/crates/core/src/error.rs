use thiserror::Error;

/// Errors produced while building or transforming mass functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame must contain at least one label")]
    EmptyFrame,

    #[error("frame label at position {0} is blank")]
    BlankLabel(usize),

    #[error("duplicate frame label `{0}`")]
    DuplicateLabel(String),

    #[error("frame has {size} elements; at most {max} are supported")]
    FrameTooLarge { size: usize, max: usize },

    #[error("mass assigned to the empty set")]
    EmptySetAssignment,

    #[error("subset {bits:#b} is not contained in a frame of size {frame_size}")]
    ForeignSubset { bits: u64, frame_size: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("negative mass {0}")]
    NegativeMass(f64),

    #[error("mass {0} is outside [0, 1]")]
    MassOutOfRange(f64),

    #[error("subset {0:#b} assigned more than once")]
    DuplicateSubset(u32),

    #[error("masses sum to {0}, expected 1")]
    MassSum(f64),

    #[error("probability entry {index} = {value} is outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },

    #[error("probabilities sum to {0}, expected 1")]
    ProbabilitySum(f64),

    #[error("expected {expected} entries for the frame, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("values belong to different frames")]
    FrameMismatch,

    #[error("interval bounds are infeasible: {0}")]
    InfeasibleBounds(String),

    #[error("logarithm base must be a finite number greater than 1, got {0}")]
    InvalidBase(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("transform undefined: {0}")]
    UndefinedTransform(&'static str),

    #[error("bisection did not reach tolerance {tol:e} within {iterations} iterations")]
    NonConvergence { tol: f64, iterations: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("grid step must lie in (0, 0.1], got {0}")]
    InvalidStep(f64),

    #[error("focal count {count} out of range 1..={max}")]
    FocalCountOutOfRange { count: usize, max: u64 },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("label `{0}` cannot be written in the text format")]
    UnrepresentableLabel(String),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    /// True for errors caused by size limits rather than invalid input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::FrameTooLarge { .. } | Error::Capacity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
