use thiserror::Error;

/// Failures raised by the exact arithmetic and the verification engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// `unshift` could not pull a coefficient back through the shift endomorphism.
    #[error("{what} is not in the image of sigma^{k}")]
    NotInImage { what: String, k: u32 },
    #[error("degmin is undefined for an element with no known nonzero coefficient")]
    UndefinedDegmin,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("interpolation points must be distinct")]
    DuplicateAlpha,
    #[error("element has zero norm; the quaternion parameters do not give a division ring")]
    ZeroNorm,
    #[error("({a}, {b}) is split: found isotropic vector {witness}")]
    NotDivisionAlgebra { a: String, b: String, witness: String },
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("a and b commute (d = ba - ab = 0)")]
    CentralPair,
    #[error("basis is not left linearly independent")]
    BasisNotIndependent,
    #[error("x is central")]
    XCentral,
    #[error("bound violated: operator degree m = {m} exceeds d = {d}")]
    BoundViolated { m: usize, d: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
