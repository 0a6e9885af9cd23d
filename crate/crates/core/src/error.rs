//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors reported by operations whose failure depends on caller-supplied
/// data. Violations of internal invariants (e.g. an entry that must cancel to
/// an integer failing to do so) panic instead: they signal implementation
/// bugs, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sequence length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("row and column index sets must have equal size: {rows} vs {cols}")]
    UnequalCardinalities { rows: usize, cols: usize },

    #[error("index {index} out of range for size {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("index set must be strictly increasing")]
    IndexSetNotIncreasing,

    #[error("index sets must be non-empty")]
    EmptyIndexSet,

    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("cannot chain {left_rows}x{left_cols} with {right_rows}x{right_cols}")]
    ChainMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("scaling weights must be non-negative")]
    NegativeWeight,

    #[error("h-vector is not palindromic")]
    NonPalindromic,

    #[error("unknown catalogue name: {0}")]
    UnknownCatalogue(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
