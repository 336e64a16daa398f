use thiserror::Error;

use crate::division::FactorChain;
use crate::nonassoc::BracketChain;
use crate::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different algebras ({left} and {right})")]
    AlgebraMismatch { left: String, right: String },

    #[error("invalid algebra definition: {0}")]
    InvalidAlgebra(String),

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("operation requires {required}, got algebra {algebra}")]
    WrongAlgebra {
        required: &'static str,
        algebra: String,
    },

    #[error("algebra {0} is not associative")]
    NonAssociative(String),

    #[error("expected a tensor of rank {expected}, got rank {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("expected {expected} arguments, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("matrix is not representable as a tensor over {0}")]
    NotRepresentable(String),

    #[error("singular tensor {0}")]
    SingularTensor(String),

    #[error("singular linear divisor: the linear part {0} has zero determinant")]
    SingularDivisor(String),

    #[error("degree {degree} exceeds the canonical-form cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("missing value for slot {0}")]
    MissingSlot(usize),

    #[error("unsupported chain shape: {0}")]
    ChainShape(String),

    #[error("divisor must be linear, got degree {0}")]
    NotLinear(usize),

    #[error("not a left-sided polynomial: {0}")]
    NotLeftSided(String),

    #[error("stage {stage}: residual {residual} does not contain the next factor")]
    FactorResidual {
        stage: usize,
        residual: Element,
        partial: Box<FactorChain>,
    },

    #[error("bracketed residual {residual} does not contain the factor (x - {root})")]
    BracketResidual {
        residual: Element,
        root: Element,
        partial: Box<BracketChain>,
    },

    #[error("empty coefficient list")]
    Empty,

    #[error("{line}:{column}: {message}")]
    Parse {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("invalid expression: {0}")]
    InvalidExpression(String),
}
