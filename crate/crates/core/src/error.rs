use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while parsing, validating or transforming
/// the objects in this crate. Positions are 1-based `(row, column)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("label error: {0}")]
    Label(String),
    #[error("cell ({row}, {col}) is outside a {m}x{n} grid")]
    Index { row: usize, col: usize, m: usize, n: usize },

    // EW-tableau clauses
    #[error("top row must be all 1s (0 found in column {col})")]
    TopRow { col: usize },
    #[error("row {row} is all 1s; only the top row may be")]
    AllOnesRow { row: usize },
    #[error("rows {rows:?} and columns {cols:?} form a rectangle with 0s on one diagonal and 1s on the other")]
    RectanglePattern { rows: (usize, usize), cols: (usize, usize) },

    // decorations and marks
    #[error("decoration has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("decoration entry a_{index} = {value} is outside [0, {max}]")]
    DecorationRange { index: usize, value: usize, max: usize },
    #[error("mark placement: {0}")]
    MarkPlacement(String),

    // polyomino clauses
    #[error("corner cell ({row}, {col}) must be filled")]
    Corner { row: usize, col: usize },
    #[error("row {row} is empty or its 1s are not contiguous")]
    RowGap { row: usize },
    #[error("rows {rows:?}: {side} boundary moves left")]
    Monotonicity { rows: (usize, usize), side: &'static str },
    #[error("rows {rows:?} do not share a column")]
    Overlap { rows: (usize, usize) },
    #[error("area {found} is not the ribbon area {expected}")]
    Area { expected: usize, found: usize },
    #[error("label convention violated: {0}")]
    LabelConvention(String),
    #[error("surplus does not support the ribbon: {0}")]
    Support(String),

    #[error("enumeration of size {m}x{n} exceeds the size guard ({limit})")]
    SizeGuard { m: usize, n: usize, limit: String },
    #[error("consistency failure: {0}")]
    Consistency(String),
}
