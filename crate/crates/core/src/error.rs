use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: rejected input (unknown names, mismatched
/// dimensions, malformed files) and internal consistency failures, where the
/// exact bookkeeping contradicted itself. The CLI maps the first family to
/// exit code 2 and the second to exit code 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: usize, found: usize },
    #[error("invalid multivector: {0}")]
    InvalidMultivector(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weights belong to different root systems ({0} vs {1})")]
    RootSystemMismatch(String, String),
    #[error("unknown case study '{0}'")]
    UnknownCase(String),
    #[error("unknown defining tensor '{0}'")]
    UnknownTensor(String),
    #[error("unsupported group family '{0}'")]
    UnsupportedFamily(String),
    #[error("value is not in the complement m: {0}")]
    NotInComplement(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("negative multiplicity {mult} for weight {weight}: {context}")]
    NegativeMultiplicity {
        weight: String,
        mult: i64,
        context: String,
    },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

impl Error {
    /// True for failures of the exact bookkeeping rather than of the input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NegativeMultiplicity { .. } | Error::NotACharacter(_) | Error::Construction(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
