use thiserror::Error;

use crate::exterior::PolyMatrix;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("bivector is not Poisson: [pi,pi] != 0")]
    NotPoisson,

    #[error("N∘pi# != pi#∘N^T; pi_N is not skew-symmetric")]
    SkewViolation { defect: PolyMatrix },

    #[error("omega(NX,Y) is not antisymmetric in X,Y")]
    Asymmetry { defect: PolyMatrix },

    #[error("2-form is not invertible over the polynomial ring (determinant must be a nonzero constant)")]
    NotInvertible,

    #[error("algebraic conditions J^2 = -I and <Jv,Jw> = <v,w> fail")]
    AlgebraicPrecondition,

    #[error("precondition failed: {0}")]
    Precondition(String),
}
