use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("degree {d} does not divide {m}")]
    NotSubfield { d: usize, m: usize },
    #[error("level {0} is not present in the tower")]
    MissingLevel(usize),
    #[error("{m} does not divide the multiplicative group order")]
    BadOrder { m: u128 },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("fixed-point divisor of the identity map is undefined")]
    IdentityMap,
    #[error("divisors have different supports")]
    SupportMismatch,
    #[error("malformed galois type {0:?}")]
    MalformedType(Vec<usize>),
    #[error("resume state: {0}")]
    State(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
