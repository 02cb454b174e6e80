use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length {0} exceeds the supported maximum of 64 coordinates")]
    TooLong(usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("coordinate index {index} out of range for length {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generator rows span only the zero code")]
    ZeroSpan,
    #[error("operation requires a half-rate code (k = n), got k = {k}, n = {n}")]
    NotHalfRate { k: usize, n: usize },
    #[error("enumerating 2^{k} codewords exceeds the budget of 2^{budget}")]
    BudgetExceeded { k: usize, budget: u32 },
    #[error("no coordinate transversal is invertible; witness: {witness}")]
    Exceptional { witness: String },
    #[error("digraph6 parse error: {0}")]
    Digraph6(String),
    #[error("generator text parse error: {0}")]
    GeneratorText(String),
    #[error("adjacency matrix has a nonzero diagonal entry at {0}")]
    NonzeroDiagonal(usize),
    #[error("graph size {0} not supported here (max {1})")]
    GraphTooLarge(usize, usize),
    #[error("euler transform input does not describe a multiset census: division at index {0} is inexact")]
    EulerInexact(usize),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("arithmetic overflow while counting automorphisms")]
    AutOverflow,
    #[error("minimum distance {d} violates the half-rate Singleton bound {bound} for n = {n}")]
    SingletonViolation { d: usize, bound: usize, n: usize },
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
