//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by the combinatorics and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A composition part was zero or negative.
    #[error("composition parts must be positive, got {0}")]
    NonPositivePart(i64),

    /// A partition was not weakly decreasing.
    #[error("partition parts must be weakly decreasing and positive: {0:?}")]
    NotAPartition(Vec<i64>),

    /// Two compositions were required to have the same size.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    /// A descent-set element fell outside {1, ..., n-1}.
    #[error("subset element {element} outside {{1,...,{}}}", .n.saturating_sub(1))]
    SubsetOutOfRange { element: u32, n: u32 },

    /// Tableau content does not sum to the number of cells of the shape.
    #[error("content sums to {content} but the shape has {cells} cells")]
    ContentSizeMismatch { cells: u32, content: u32 },

    /// An operation required its operands in a specific basis.
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    /// No conversion path exists between the requested bases.
    #[error("no conversion path from {from} to {to}")]
    NoConversionPath { from: String, to: String },

    /// Failure while parsing a serialized index or element.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
