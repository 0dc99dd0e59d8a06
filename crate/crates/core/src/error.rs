use alloc::string::String;

/// Errors raised by polynomial construction, parsing and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("polynomials live over different variable tables")]
    MismatchedVars,
    #[error("polynomials live over different coefficient fields")]
    MismatchedField,
    #[error("{0} is not an odd prime below 2^31")]
    InvalidModulus(u64),
    #[error("denominator is not invertible modulo {0}")]
    NotInvertible(u32),
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// Why a Gröbner computation stopped before finishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exhausted {
    Pairs,
    Degree,
    Interrupted,
}

/// A computation hit its budget. Never carries a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("inconclusive: {reason:?} budget exhausted after {pairs_processed} S-pairs")]
pub struct Inconclusive {
    pub reason: Exhausted,
    pub pairs_processed: u64,
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Inconclusive(#[from] Inconclusive),
    #[error("arm parameters must all be at least 2, got ({0}, {1}, {2})")]
    InvalidArms(usize, usize, usize),
    #[error("deformation parameters do not match the arms: {0}")]
    ParamShape(String),
    #[error("deformation parameter is not in the parameter space")]
    NotInDelta,
    #[error("chart {0} is out of range")]
    ChartOutOfRange(String),
    #[error("support enumeration over {arrows} arrows exceeds the cap of {cap}")]
    EnumerationCap { arrows: usize, cap: usize },
    #[error("more than 64 variables are not supported by the dimension search")]
    TooManyVariables,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
