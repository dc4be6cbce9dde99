use thiserror::Error;

/// Errors raised by the bisemistructure operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A leading principal minor vanished; `index` is the 1-based order of that minor.
    #[error("Gauss decomposition undefined: leading principal minor {index} is zero")]
    DecompositionUndefined { index: usize },

    #[error("no square root available in this backend for delta entry {index}")]
    SqrtUnavailable { index: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("metric is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("metric is not positive-definite")]
    NotPositiveDefinite,

    #[error("metric of kind (1,1) does not determine a (0,2) or (2,0) metric")]
    MetricUnderdetermined,

    #[error("bipoint sources are not symmetric at coordinate {index}")]
    AsymmetricSources { index: usize },

    #[error("expected a {expected} vector, got a {found} vector")]
    WrongSide {
        expected: &'static str,
        found: &'static str,
    },

    #[error("expected a {expected} vector, got a {found} vector")]
    WrongVariance {
        expected: &'static str,
        found: &'static str,
    },

    #[error("operand does not belong to the {0} stage")]
    WrongStage(&'static str),

    #[error("expected a {expected} bisemialgebra element")]
    WrongOrientation { expected: &'static str },

    #[error("value {value} is outside the {carrier} carrier")]
    InadmissibleScalar {
        carrier: &'static str,
        value: String,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid sampled function: {0}")]
    InvalidFunction(String),

    #[error("unknown law identifier `{0}`")]
    UnknownLaw(String),

    #[error("unknown backend `{0}`")]
    UnknownBackend(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::CarrierMismatch(_) => "CarrierMismatch",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DecompositionUndefined { .. } => "DecompositionUndefined",
            Error::SqrtUnavailable { .. } => "SqrtUnavailable",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::MetricUnderdetermined => "MetricUnderdetermined",
            Error::AsymmetricSources { .. } => "AsymmetricSources",
            Error::WrongSide { .. } => "WrongSide",
            Error::WrongVariance { .. } => "WrongVariance",
            Error::WrongStage(_) => "WrongStage",
            Error::WrongOrientation { .. } => "WrongOrientation",
            Error::InadmissibleScalar { .. } => "InadmissibleScalar",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::InvalidFunction(_) => "InvalidFunction",
            Error::UnknownLaw(_) => "UnknownLaw",
            Error::UnknownBackend(_) => "UnknownBackend",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }

    /// Index attached to the error, if any.
    pub fn location(&self) -> Option<usize> {
        match self {
            Error::DecompositionUndefined { index }
            | Error::SqrtUnavailable { index }
            | Error::AsymmetricSources { index } => Some(*index),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
