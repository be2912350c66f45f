use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("forbidden specialization: {0}")]
    ForbiddenSpecialization(String),
    #[error("algebra kind mismatch: {0}")]
    KindMismatch(String),
    #[error("not a monomial")]
    NotAMonomial,
    #[error("monoid action mismatch")]
    ActionMismatch,
    #[error("generalized Weyl algebra data mismatch")]
    DataMismatch,
    #[error("invalid monoid action: {0}")]
    InvalidAction(String),
    #[error("invalid generalized Weyl algebra data: {0}")]
    InvalidData(String),
    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
    #[error("action undefined: {0}")]
    UndefinedAction(String),
    #[error("group too large: more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("no image for generator `{0}`")]
    MissingImage(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid manifest: {0}")]
    Manifest(String),
    #[error("write failed: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
