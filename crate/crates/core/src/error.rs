use thiserror::Error;

/// Errors raised by the algebra kernel and the closure diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected} exponents, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in different rings")]
    IncompatibleRing,
    #[error("exponent overflow: {0}")]
    Capacity(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomial syntax error at column {column}: {message}")]
    PolySyntax { column: usize, message: String },
    #[error("colon by the zero polynomial is undefined")]
    UndefinedColon,
    #[error("variable `{0}` occurs in both source and target ring; rename it")]
    RenameRequired(String),
    #[error("image list has {found} entries but the source ring has {expected} variables")]
    ImageCount { expected: usize, found: usize },
    #[error("the defining ideal is the unit ideal; the quotient ring is empty")]
    EmptyRing,
    #[error("bad decomposition: {0}")]
    BadDecomposition(String),
    #[error("operation needs the minimal primes of the ring")]
    NeedsPrimes,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("every generator lies in the ideal of the non-distinguished variables")]
    NoYLead,
    #[error("pure-{var} part {part} is not a single monomial in the polynomial ring")]
    NonMonomialLead { var: String, part: String },
    #[error("the multiplier c must be nonzero")]
    InvalidMultiplier,
    #[error("decomposition is not irredundant: no element separates prime {0} from the others")]
    DecompositionNotIrredundant(usize),
    #[error("nilradical is not killed by a Frobenius power with e <= {0}")]
    NilpotencyBound(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
