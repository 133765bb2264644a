use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernel and the moment-sequence
/// layers built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    /// A determinant or inverse was requested for a non-square matrix.
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Elimination ran out of nonzero pivots. `pivot` is the column index
    /// at which every remaining candidate row had a zero entry.
    #[error("matrix is singular: no nonzero pivot in column {pivot}")]
    Singular { pivot: usize },

    /// A leading principal Hankel determinant vanishes, so the bordered
    /// determinant construction for the orthogonal polynomial is undefined.
    #[error("hankel determinant of order {order} vanishes")]
    VanishingDeterminant { order: usize },

    /// The requested operation is not defined for this moment family
    /// (e.g. the linear functional for the harmonic family, whose zeroth
    /// moment is 0 rather than 1).
    #[error("operation `{operation}` is not defined for the {family} family")]
    UnsupportedFamily {
        operation: &'static str,
        family: &'static str,
    },

    /// A parameter is outside its admissible range (t = 0, s a nonpositive
    /// integer, a malformed range, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An entry index exceeds the order of the matrix it refers to.
    #[error("entry index ({i}, {j}) out of range for order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
}
