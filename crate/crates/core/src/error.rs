use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty rational token")]
    EmptyToken,

    #[error("malformed rational token `{0}`")]
    MalformedToken(String),

    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),

    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index ({i}, {j}) out of range for {rows}x{cols} matrix")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
}
