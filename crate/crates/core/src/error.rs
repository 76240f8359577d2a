use thiserror::Error;

/// Errors raised by the graph, ideal and homology routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {count} vertices, at most {max} are supported")]
    TooManyVertices { count: usize, max: usize },

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("operation requires a nonempty V3 (induced 5-cycle)")]
    EmptyV3,

    #[error("operation requires a nonempty V2 (clique part)")]
    EmptyV2,

    #[error("minimal vertex cover {0} does not match either catalogue form")]
    UncataloguedCover(String),

    #[error("graph has no edges; its cover ideal is the unit ideal")]
    EdgelessCoverIdeal,

    #[error("graph is not (C4, 2K2)-free")]
    NotC4TwoK2Free,

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("power must be at least 1, got {0}")]
    InvalidPower(u32),

    #[error("ideals live in different polynomial rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable index {index} outside a ring of {len} variables")]
    VariableOutOfRange { index: usize, len: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("lcm lattice exceeds the cap of {cap} elements")]
    LatticeCap { cap: usize },

    #[error("{count} generators exceed the limit of {max}")]
    TooManyGenerators { count: usize, max: usize },

    #[error("{count} variables exceed the limit of {max}")]
    TooManyVariables { count: usize, max: usize },

    #[error("{0} is not a minimal generator")]
    NotAGenerator(String),

    #[error("no cover-power expression for {0}; the partition does not match the graph")]
    NoExpression(String),

    #[error("order failed linear-quotients validation at step {step}: colon generator {witness}")]
    OrderValidation { step: usize, witness: String },

    #[error("generator list is not a permutation of the minimal generators")]
    NotAPermutation,

    #[error("no linear quotients order found for {0}")]
    NoLinearQuotients(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
