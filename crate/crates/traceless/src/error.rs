use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at δ = {at}: denominator factor {factor} vanishes")]
    Pole { at: String, factor: String },
    #[error("coefficient has a pole at δ = {at} (factor {factor}); drop the vanishing eigenvalue from the spectrum before expanding instead of specializing the expanded element")]
    PoleOnTensors { at: String, factor: String },
    #[error("operands have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("monomial {0} contains a bracelet outside the admissible family")]
    InadmissibleMonomial(String),
    #[error("no trace rule matches {0}")]
    NoTraceRule(String),
    #[error("zero eigenvalue {0} in spectrum; omit the factor before expanding")]
    ZeroEigenvalue(String),
    #[error("not a standard tableau: {0}")]
    NotStandard(String),
    #[error("tensor shape mismatch: {0}")]
    ShapeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
