use thiserror::Error;

use crate::fillings::FillingClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("cannot add a square to row {row} of {partition}")]
    InvalidSquare { partition: String, row: usize },

    #[error("{0} and {1} do not differ by exactly one square")]
    NotAdjacent(String, String),

    #[error("invalid boundary word character {0:?}")]
    InvalidWord(char),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("cell ({0},{1}) lies outside the shape")]
    CellOutsideShape(usize, usize),

    #[error("local rule precondition violated: {0}")]
    Precondition(String),

    #[error("filling class {found:?} is not admissible here (need {expected:?})")]
    ClassMismatch {
        expected: FillingClass,
        found: FillingClass,
    },

    #[error("incompatible boundary: {0}")]
    IncompatibleBoundary(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("shape is not a rectangle")]
    NotRectangular,

    #[error("parse error: {0}")]
    Parse(String),
}
