use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("division by x_{index} - x_{next} left a nonzero remainder (operator bug)", next = .index + 1)]
    DivisionFailure { index: usize },

    #[error("series inversion needs constant term +1 or -1 and no other degree-0 terms")]
    NonUnit,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("word {word:?} is not reduced")]
    NotReduced { word: Vec<usize> },

    #[error("partition {parts:?} does not fit in the {rows}x{cols} box")]
    OutsideBox { parts: Vec<usize>, rows: usize, cols: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("inconsistent specialization: {0}")]
    Specialization(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("target is not in the span of the basis")]
    NotInSpan,

    #[error("basis is not linearly independent")]
    BasisNotIndependent,

    #[error("kappa is not constant (difference kernel bug)")]
    NonConstantKappa,

    #[error("series cap {cap} too small, need at least {min}")]
    CapTooSmall { cap: usize, min: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
