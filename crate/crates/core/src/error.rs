use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("conflicting labels for edge {{{0}, {1}}}")]
    ConflictingEdge(String, String),
    #[error("label {0} out of range (must be >= 2)")]
    LabelOutOfRange(i64),
    #[error("invalid label `{0}` (expected an integer >= 2 or \"inf\")")]
    InvalidLabel(String),

    #[error("numeric positive-definiteness test is indeterminate (minor {minor} at size {size})")]
    IndeterminateNumeric { size: usize, minor: String },
    #[error("subset of size {size} exceeds the bound {bound}")]
    SubsetTooLarge { size: usize, bound: usize },

    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),

    #[error("rules disagree on beta_{dim}: {first} ({first_rule}) vs {second} ({second_rule})")]
    ContradictoryRules {
        dim: usize,
        first: String,
        first_rule: String,
        second: String,
        second_rule: String,
    },
    #[error("betti vector has unknown entries")]
    UnknownEntries,
    #[error("the Coxeter group is finite")]
    FiniteGroup,
    #[error("nerve dimension {0} is too high")]
    DimensionTooHigh(usize),
    #[error("invalid rule context: {0}")]
    InvalidContext(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("rotation system does not describe a sphere embedding (V - E + F = {0})")]
    NotSpherical(i64),
    #[error("face boundary is not a simple cycle: {0}")]
    NonSimpleFaceBoundary(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("graph with {0} vertices is too large for the brute-force oracle")]
    TooLarge(usize),

    #[error("numeric collision: grid runs disagree ({first} vs {second})")]
    NumericCollision { first: usize, second: usize },
    #[error("braid relation check failed for generators {0} and {1}")]
    BadRepresentation(String, String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
