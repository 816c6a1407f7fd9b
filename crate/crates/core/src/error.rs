use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("index n = {n} is below the tuple degree m = {m}")]
    IndexBelowDegree { n: usize, m: usize },

    #[error("singular input: w - 1/w vanishes at x = {0}")]
    Singular(f64),

    #[error("polynomial degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("root solver did not converge after {iterations} iterations (degree {degree})")]
    NoConvergence { iterations: usize, degree: usize },

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("inexact division: remainder {0:e} exceeds tolerance")]
    InexactDivision(f64),

    #[error("not a Pisot polynomial: {0}")]
    NotPisot(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
