use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("not integral: {0}")]
    NotIntegral(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("obstructed over the rationals ({reason}); the smallest clearing degree is r = {min_r}")]
    Obstruction { reason: String, min_r: u32 },
    #[error("discriminant mismatch: {0}")]
    DiscMismatch(String),
    #[error("search exhausted below bound {bound}")]
    SearchExhausted { bound: u64 },
    #[error("no auxiliary place found below bound {bound}")]
    NoAuxiliaryPlace { bound: u64 },
    #[error("unsupported spectrum: {0}")]
    UnsupportedSpectrum(String),
    #[error("not unramified: {0}")]
    NotUnramified(String),
    #[error("character exponent {0} is not regular")]
    NotRegular(u64),
    #[error("modulus mismatch: {0}")]
    ModulusMismatch(String),
    #[error("tuple is not generic: {0}")]
    NonGeneric(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::NotPrime(_) => "NotPrime",
            Error::NotIntegral(_) => "NotIntegral",
            Error::ContextMismatch(_) => "ContextMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::Obstruction { .. } => "Obstruction",
            Error::DiscMismatch(_) => "DiscMismatch",
            Error::SearchExhausted { .. } => "SearchExhausted",
            Error::NoAuxiliaryPlace { .. } => "NoAuxiliaryPlace",
            Error::UnsupportedSpectrum(_) => "UnsupportedSpectrum",
            Error::NotUnramified(_) => "NotUnramified",
            Error::NotRegular(_) => "NotRegular",
            Error::ModulusMismatch(_) => "ModulusMismatch",
            Error::NonGeneric(_) => "NonGeneric",
            Error::RankMismatch { .. } => "RankMismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
