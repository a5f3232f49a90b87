use thiserror::Error;

/// Every failure the toolkit can report. Row and column fields are zero-based;
/// the rendered messages use one-based positions, matching the tableau file
/// and the trace output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivideByZero,

    #[error("inexact division: {dividend} / {divisor}{}", describe_at(*.at))]
    InexactDivision {
        dividend: String,
        divisor: String,
        /// `(row, column)` being cleared when the division was attempted, if any.
        at: Option<(usize, usize)>,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero pivot in column {}; row {} has a nonzero entry (try --pivot swap)", .column + 1, .candidate + 1)]
    ZeroPivot { column: usize, candidate: usize },

    #[error("rank deficient: column {} is zero from the diagonal down", .column + 1)]
    RankDeficient { column: usize },

    #[error("leading principal minor of order {order} is zero")]
    SingularLeadingMinor { order: usize },

    #[error("zero diagonal entry in row {}", .row + 1)]
    SingularDiagonal { row: usize },

    #[error("under-determined: {rows} equations need {} columns, found {cols}", .rows + 1)]
    UnderDetermined { rows: usize, cols: usize },

    #[error("over-determined: {rows} equations need {} columns, found {cols}", .rows + 1)]
    OverDetermined { rows: usize, cols: usize },

    #[error("the field strategy needs rational entries; convert the tableau first")]
    NotAField,

    #[error("the hart finish needs an integer echelon form; use the nine or chio strategy")]
    IncompatibleFinish,

    #[error("{method} determinant is limited to n <= {limit}, got n = {n}")]
    SizeLimit {
        method: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("well problems need at least 2 coefficients, got {0}")]
    TooSmall(usize),

    #[error("parametric solves are not supported: b is posited as det(A), never left free")]
    UnsupportedIndeterminate,
}

fn describe_at(at: Option<(usize, usize)>) -> String {
    match at {
        Some((row, col)) => format!(" (row {}, clearing column {})", row + 1, col + 1),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
