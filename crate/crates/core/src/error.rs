use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Cartan type label `{0}`")]
    UnknownType(String),
    #[error("Weyl group of {label} has order {order}, above the configured limit {limit}")]
    GuardExceeded { label: String, order: u128, limit: u128 },
    #[error("simple root index {index} is outside 1..={rank}")]
    SimpleIndex { index: usize, rank: usize },
    #[error("cannot parse subset `{0}`")]
    SubsetSyntax(String),
    #[error("root subsets belong to different root systems")]
    SystemMismatch,
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("subset is not closed")]
    NotClosed,
    #[error("coset condition is not constant on the coset of {0}")]
    NonConstantCoset(String),
    #[error("witness (X, Y) is missing or fails the splitting conditions")]
    InvalidWitness,
    #[error("cross-check failed: {0}")]
    Mismatch(String),
    #[error("brane diagram: {0}")]
    Brane(String),
    #[error("quiver: {0}")]
    Quiver(String),
    #[error("mirror: {0}")]
    Mirror(String),
}

impl Error {
    /// True for failures of an internal cross-check (as opposed to bad input).
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::Mismatch(_) | Error::NonConstantCoset(_))
    }
}
