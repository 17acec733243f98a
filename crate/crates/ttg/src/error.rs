use thiserror::Error;

/// Errors shared across the crate.
///
/// Operations are exact; an `Error` always means the request was outside an
/// operation's domain (wrong ring, malformed input, budget), never that a
/// numeric computation degraded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("operation not supported over {0}")]
    UnsupportedRing(String),
    #[error("the spectrum of {0} is infinite; enumerate primes yourself")]
    InfiniteSpectrum(String),
    #[error("prime ideal {0} is not maximal")]
    NotMaximal(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a complex: d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error("not a chain map: square at degree {0} does not commute")]
    NotAChainMap(i64),
    #[error("size budget exceeded: total rank {got} > budget {budget}")]
    SizeBudgetExceeded { got: usize, budget: usize },
    #[error("ring {0} is not artinian")]
    NotArtinian(String),
    #[error("descriptor {0} is not compact")]
    NotCompactDescriptor(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),
    #[error("invalid tail rule: {0}")]
    InvalidTail(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
