use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate bilinear form (zero determinant)")]
    Degenerate,
    #[error("singular linear system")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("structure constants are not antisymmetric at ({i},{j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("operator is not skew-symmetric with respect to the metric")]
    NotSkew,
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("wrong signature ({neg},{pos})")]
    WrongSignature { neg: usize, pos: usize },
    #[error("metric Lie algebra is not flat")]
    NotFlat,
    #[error("Jacobi identity fails")]
    NotLie,
    #[error("algebra is unimodular (modular vector vanishes)")]
    Unimodular,
    #[error("base algebra is not Riemannian flat")]
    BaseNotRiemannianFlat,
    #[error("algebra is not Riemannian flat")]
    NotRiemannianFlat,
    #[error("tuple is not admissible: {0}")]
    NotAdmissible(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no catalog family matches: {0}")]
    NoMatch(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
