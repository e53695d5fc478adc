use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("non-standard system requires p >= 1 and q >= 1")]
    InvalidKind,
    #[error("coordinate length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("reflection root must be even and non-isotropic")]
    NotEven,
    #[error("root is not simple in the given positive system")]
    NotSimple,
    #[error("root is not an odd isotropic root")]
    NotOddIsotropic,
    #[error("root is not an odd positive root of the system")]
    NotOddPositive,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("positive system kind does not match the case: {0}")]
    WrongSystem(String),
    #[error("classification case mismatch: {0}")]
    WrongCase(String),
    #[error("psl(n|n) constraint violated: supertrace of the weight is nonzero")]
    PslConstraintViolated,
    #[error("anti-involution variant incompatible with the signature")]
    VariantMismatch,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("parse error: {0}")]
    Parse(String),
}
