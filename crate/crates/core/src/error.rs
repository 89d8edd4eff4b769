use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("modulus {0} is not monic")]
    NotMonic(String),
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{d} does not divide {n}")]
    NonDivisorDegree { d: usize, n: usize },
    #[error("element is not in the subfield of degree {0}")]
    ElementOutsideSubfield(usize),
    #[error("enumeration of {needed} items exceeds the cap of {cap}")]
    EnumerationCapExceeded { needed: String, cap: u64 },
    #[error("{needed} solutions exceed the cap of {cap}")]
    CapExceeded { needed: String, cap: u64 },
    #[error("field of {bits} bits exceeds the limit of {limit} bits")]
    FieldTooLarge { bits: u64, limit: u64 },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("lcm with a zero polynomial is undefined")]
    ZeroInput,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("congruences are inconsistent")]
    Inconsistent,
    #[error("element is not normal over the base field")]
    NotNormal,
    #[error("no normal element found")]
    SearchExhausted,
    #[error("equation has no solution")]
    NoSolution,
    #[error("at least {min} terms are required, got {got}")]
    KTooSmall { min: usize, got: usize },
    #[error("divisor {0} appears more than once")]
    DuplicateDivisor(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
