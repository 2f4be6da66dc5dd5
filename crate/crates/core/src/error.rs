use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("chart minor is singular")]
    SingularChart,

    #[error("form tuple is not a complete intersection (resultant vanishes)")]
    NotCompleteIntersection,

    #[error("form is not in U_Res")]
    NotInURes,

    #[error("form is not in U (rank of D(F) is {rank}, expected {expected})")]
    NotInU { rank: usize, expected: usize },

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no complete intersection found after {attempts} attempts (coeff_bound = {coeff_bound})")]
    AttemptCapExceeded { attempts: usize, coeff_bound: i64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
