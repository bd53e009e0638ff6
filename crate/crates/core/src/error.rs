use thiserror::Error;

/// Errors produced by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable list: {0}")]
    InvalidVariables(String),

    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("polynomial is not quasi-homogeneous: `{first}` and `{second}` have different weighted degrees")]
    NotQuasiHomogeneous { first: String, second: String },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("resource limit exceeded: more than {cap} pair reductions")]
    ResourceLimit { cap: usize },

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("socle is {0}-dimensional, expected one-dimensional")]
    SocleNotOneDimensional(usize),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
