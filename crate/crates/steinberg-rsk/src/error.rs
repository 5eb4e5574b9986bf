use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Dominance is only defined between partitions of equal size.
    #[error("partitions of unequal size ({lhs} vs {rhs}) are incomparable in dominance")]
    IncomparableSizes { lhs: usize, rhs: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("not a column-strip extension: {0}")]
    NotColumnStrip(String),
    #[error("standard tableau count overflows u64 for shape {0}")]
    CountOverflow(String),
    #[error("signature mismatch: ({0},{1}) vs ({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("invalid signed diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid partial permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is not nilpotent")]
    NonNilpotent,
    #[error("flag is not compatible with the map at piece {index}")]
    FlagViolation { index: usize },
    #[error("genericity certificate unstable after retry budget: {0}")]
    Genericity(String),
    #[error("no preimage: {0}")]
    NoPreimage(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("{0} is not usable as the field prime")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
