use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("GF({p}^{m}) is outside the supported range (m <= 8, q <= 65536)")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("code {code} is not an element of GF({q})")]
    InvalidElement { code: u32, q: u32 },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("operands live over different fields or variable counts")]
    FieldMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degree {requested} is smaller than the total degree {actual}")]
    DegreeTooSmall { requested: u32, actual: u32 },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("enumeration needs {required} point evaluations but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("distribution has only {available} distinct positive weights, asked for #{k}")]
    NotEnoughWeights { k: usize, available: usize },
    #[error("polynomial vanishes at every point")]
    VanishesEverywhere,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("malformed polynomial: {0}")]
    MalformedPoly(String),
}
