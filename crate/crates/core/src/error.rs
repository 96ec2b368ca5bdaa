use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),

    #[error("gamma function requested at nonpositive argument {0}")]
    NonPositiveGamma(String),

    #[error("precision of {0} bits is below the 64-bit minimum")]
    PrecisionTooLow(usize),

    #[error("invalid indices: {0}")]
    InvalidIndices(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse {0:?} as a decimal number")]
    Parse(String),

    #[error("x = 0 with negative power offset {0}")]
    PoleAtOrigin(i64),

    #[error("integrand e^-x x^{power} is not integrable on (0, inf)")]
    NotIntegrable { power: i64 },

    #[error("singular point: {what} vanishes at x = {x}")]
    SingularPoint { what: &'static str, x: String },

    #[error("polynomials with different radical factors cannot be added exactly")]
    IncommensurableRadicals,

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
