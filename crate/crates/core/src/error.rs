use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. `code()` gives the stable
/// machine-readable name used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("cannot parse multiplicity from {0:?}")]
    ParseMultiplicity(String),
    #[error("invalid multiplicity {0}: finite multiplicities must be >= 1")]
    InvalidMultiplicity(String),
    #[error("zero covector at position {0}")]
    ZeroCovector(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("wrong number of entries: expected {expected}, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("hyperplanes are not in general position")]
    NotGeneralPosition,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("sum of unit fractions is {0}, which is not of the form 1 - 1/b with integral b >= 2")]
    NotDeficitForm(String),
    #[error("search size {requested} exceeds configured limit {limit}")]
    SearchLimitExceeded { requested: usize, limit: usize },
    #[error("integer overflow while extending sequence")]
    Overflow,
    #[error("divisor index {index} out of range for a type with {len} multiplicities")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("contact record {0:?} is invalid: {1}")]
    InvalidContact(String, &'static str),
    #[error("infinite multiplicity is not allowed here")]
    InfiniteMultiplicity,
    #[error("unsupported multiplicity {0}: expected a finite integer >= 2")]
    UnsupportedMultiplicity(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(u32),
    #[error("input is singular: {0}")]
    SingularInput(&'static str),
    #[error("point lies on hyperplane {0} of the arrangement")]
    PointOnArrangement(usize),
    #[error("homotopy failed to converge after {0} restarts")]
    NoConvergence(usize),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("duplicate divisor label {0:?}")]
    DuplicateLabel(String),
    #[error("multiplicity {mult} does not divide degree {degree}")]
    DivisibilityViolation { mult: String, degree: u64 },
    #[error("coefficient {0} is outside [0, 1]")]
    CoefficientOutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ParseRational(_) => "ParseRational",
            Error::ParseMultiplicity(_) => "ParseMultiplicity",
            Error::InvalidMultiplicity(_) => "InvalidMultiplicity",
            Error::ZeroCovector(_) => "ZeroCovector",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::WrongCount { .. } => "WrongCount",
            Error::NotGeneralPosition => "NotGeneralPosition",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotDeficitForm(_) => "NotDeficitForm",
            Error::SearchLimitExceeded { .. } => "SearchLimitExceeded",
            Error::Overflow => "Overflow",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidContact(..) => "InvalidContact",
            Error::InfiniteMultiplicity => "InfiniteMultiplicity",
            Error::UnsupportedMultiplicity(_) => "UnsupportedMultiplicity",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::SingularInput(_) => "SingularInput",
            Error::PointOnArrangement(_) => "PointOnArrangement",
            Error::NoConvergence(_) => "NoConvergence",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::DivisibilityViolation { .. } => "DivisibilityViolation",
            Error::CoefficientOutOfRange(_) => "CoefficientOutOfRange",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
