use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,
    #[error("invalid Polish word {word:?}: {reason}")]
    InvalidPolishWord { word: Vec<u8>, reason: &'static str },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("expected {expected} graft arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("tree {0} is not prime")]
    NotPrime(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions live on different ground sets ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("{0} is not below {1} in the refinement order")]
    NotComparable(String, String),
    #[error("series is not a group element: leaf coefficient is {0}")]
    NotGroupElement(String),
    #[error("word has {got} letters but the tree has {expected} sectors")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the unit is not in the augmentation ideal")]
    UnitInput,
    #[error("weight {requested} exceeds the truncation weight {limit}")]
    WeightExceeded { requested: usize, limit: usize },
    #[error("linear form is not an infinitesimal character: {0}")]
    NotInfinitesimal(String),
    #[error("expression is not the evaluation of a tree: {0}")]
    NotTreeShaped(String),
    #[error("involution parameters j={j}, k={k} do not match weight {weight}")]
    BadSplit { j: usize, k: usize, weight: usize },
    #[error("series cannot be reverted: {0}")]
    NotRevertible(&'static str),
    #[error("{0}")]
    Domain(String),
}
