use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{name}`: {reason}")]
    BadIndex { name: String, reason: String },
    #[error("generator does not belong to this signature")]
    SignatureMismatch,
    #[error("locality bound must be at least 1")]
    InvalidLocality,
    #[error("junction index {index} is not below the locality bound {locality}")]
    IndexNotNormal { index: u32, locality: u32 },
    #[error("the zero polynomial cannot be made monic")]
    ZeroPolynomial,
    #[error("relation #{0} is not monic")]
    NonMonic(usize),
    #[error("malformed pattern: {0}")]
    MalformedPattern(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index arithmetic overflowed")]
    IndexOverflow,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
