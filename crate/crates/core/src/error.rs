use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {word:?}")]
    NotAPermutation { n: usize, word: Vec<usize> },
    #[error("size {0} is outside the supported range 1..=64")]
    UnsupportedSize(usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("cyclic descents are undefined for n = 1")]
    CyclicDescentUndefined,
    #[error("element {element} outside 1..={bound}")]
    ElementOutOfRange { element: usize, bound: usize },
    #[error("rotation amount {k} outside 1..={max}")]
    RotationOutOfRange { k: usize, max: usize },
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("not a composition of {n}: {parts:?}")]
    InvalidComposition { n: usize, parts: Vec<usize> },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableau does not have a boxed shape")]
    NotBoxed,
    #[error("outside the domain: {0}")]
    OutsideDomain(String),
    #[error("tableau is already standard, no elementary step applies")]
    NoStep,
    #[error("straightening exceeded {0} steps")]
    StepLimitExceeded(usize),
    #[error("not symmetric")]
    NotSymmetric,
    #[error("need at least one variable")]
    NoVariables,
    #[error("group action is not closed on the object list (object {object}, k = {k})")]
    ActionNotClosed { object: usize, k: usize },
}
