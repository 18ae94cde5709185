use thiserror::Error;

use crate::shapes::{Partition, Rectangle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("rectangle must have at least one row and one column (got {rows}x{cols})")]
    EmptyRectangle { rows: usize, cols: usize },

    #[error("partition {partition} does not fit inside the {rect} rectangle")]
    DoesNotFit {
        partition: Partition,
        rect: Rectangle,
    },

    #[error("{outer} does not contain {inner}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("{to} is not a one-box extension of {from}")]
    NotOneBoxStep { from: Partition, to: Partition },

    #[error("tableau shapes do not line up: expected {expected}, found {found}")]
    ShapeMismatch {
        expected: Partition,
        found: Partition,
    },

    #[error("size mismatch: skew shape has {shape} boxes but the types have {types}")]
    SizeMismatch { shape: usize, types: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("chain must start at the empty partition, found inner shape {0}")]
    NotFromEmpty(Partition),

    #[error("chain must end at the full rectangle {expected}, found {found}")]
    NotToRectangle {
        expected: Partition,
        found: Partition,
    },

    #[error("growth diagram symmetry violated: {0}")]
    SymmetryViolation(String),

    #[error("monodromy word does not permute the chain set: {0}")]
    NotAPermutation(String),

    #[error("invalid increasing tableau: {0}")]
    InvalidIncreasing(String),

    #[error("invalid corner set: {0}")]
    InvalidCorners(String),

    #[error("expected |alpha|+|beta|+|gamma| = {expected}, found {found}")]
    NotFirstOrder { expected: usize, found: usize },

    #[error("{0} is not a horizontal strip")]
    NotHorizontalStrip(String),

    #[error("unknown ordering preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid circular ordering {0:?}")]
    InvalidOrdering(String),

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
