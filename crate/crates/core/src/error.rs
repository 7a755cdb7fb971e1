use thiserror::Error;

/// Everything that can go wrong when a caller hands us bad input.
///
/// Refutations (a polynomial that is not Lorentzian, a sequence that is not
/// log-concave) are not errors; they are reported through the ordinary return
/// values of the checking functions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    MismatchedVars { left: Vec<String>, right: Vec<String> },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("power truncation bounds are not ordered: alpha {alpha:?} is not <= beta {beta:?}")]
    InvalidBounds { alpha: Vec<u32>, beta: Vec<u32> },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("expected a quadratic form, got a polynomial of degree {0}")]
    NotQuadratic(i64),

    #[error("expected a polynomial in exactly 2 variables, got {0}")]
    NotBivariate(usize),

    #[error("matrix is not symmetric (entry ({0}, {1}) differs from its transpose)")]
    NotSymmetric(usize, usize),

    #[error("matrix is not square")]
    NotSquare,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),

    #[error("unknown colour `{0}`")]
    UnknownColour(String),

    #[error("colour `{0}` is not free")]
    NotFree(String),

    #[error("vertex `{0}` has no colour")]
    MissingColour(String),

    #[error("partitioned graph needs a bound colour")]
    MissingBoundColour,

    #[error("colour `{0}` is carried by several vertices but is not the bound colour")]
    NotPartitioned(String),

    #[error("{what} limit exceeded: {got} > {limit}")]
    GuardExceeded { what: &'static str, got: u128, limit: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
