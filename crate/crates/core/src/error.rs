use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field characteristic {0} (need 0 or a prime below 2^31)")]
    InvalidField(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit element does not act as identity on basis element {0}")]
    BadUnit(usize),
    #[error("idempotent computation failed: {0}")]
    Idempotents(String),
    #[error("radical could not be certified: {0}")]
    RadicalUncertain(String),
    #[error("quiver algebra not finite-dimensional within path length cap {cap}")]
    NotFiniteDimensionalWithinCap { cap: usize },
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("not a module: {0}")]
    InvalidModule(String),
    #[error("cannot split idempotents: {0}")]
    IdempotentSplitFailure(String),
    #[error("invalid short exact sequence: {0}")]
    InvalidShortExact(String),
    #[error("invalid matrix factorization: {0}")]
    InvalidFactorization(String),
    #[error("unsupported polynomial {0}: need a power of a linear form")]
    UnsupportedPolynomial(String),
    #[error("resolution cap {cap} reached before degree {degree}")]
    CapExceeded { cap: usize, degree: usize },
    #[error("Iwanaga-Gorenstein level not certified within cap {0}")]
    IgNotCertified(usize),
    #[error("not quasi-resolving: {0}")]
    NotQuasiResolving(String),
    #[error("algebra is not Nakayama: {0}")]
    NotNakayama(String),
    #[error("unknown catalog instance {0:?}")]
    UnknownInstance(String),
    #[error("algebra dimension {0} too large for exhaustive isomorphism search (max 6)")]
    DimensionTooLarge(usize),
    #[error("inconsistent report: {0}")]
    Inconsistent(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
