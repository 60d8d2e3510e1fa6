use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("cannot extend a series known to order {known} to order {requested}")]
    OrderExtension { known: usize, requested: usize },
    #[error("series is not unital: constant coefficient is {0}")]
    NotUnital(String),
    #[error("negative exponent of {var} in a ring without Laurent monomials")]
    NegativeExponent { var: String },
    #[error("exponent vector has {got} entries, ring has {expected} variables")]
    ExponentArity { expected: usize, got: usize },
    #[error("rescaling t -> t^0 is not allowed")]
    ZeroRescale,
    #[error("{0} is not a monomial with coefficient 1")]
    NotAMonomial(String),
    #[error("substitution is not compatible with the power structure: {0}")]
    IncompatibleSubstitution(String),
    #[error("kernel rejected: {0}")]
    KernelRejected(String),
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("scale bound exceeded: {0}")]
    ScaleBound(String),
    #[error("no bundled local Hilbert series for dimension {0}; supply a local-series data file")]
    MissingLocalData(u32),
    #[error("invalid local Hilbert data: {0}")]
    InvalidLocalData(String),
    #[error("dimension mismatch: class has dimension {class}, local data has dimension {local}")]
    DimensionMismatch { class: u32, local: u32 },
    #[error("invalid JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
