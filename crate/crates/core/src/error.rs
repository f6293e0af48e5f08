use thiserror::Error;

/// Errors raised by graph construction, polynomial arithmetic and the
/// invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what}: size {got} exceeds limit {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("invalid arguments: {0}")]
    InvalidArgument(String),
    #[error("polynomial context mismatch")]
    ContextMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{q} is not a positive power of the characteristic {p}")]
    NotCharacteristicPower { q: u64, p: u64 },
    #[error("operation requires positive characteristic")]
    CharacteristicZero,
    #[error("basis is not marked as a Gröbner basis")]
    NotGroebner,
    #[error("monomial {0} is not square-free")]
    NotSquareFree(String),
    #[error("generating set is not minimal: {0} divides {1}")]
    NotMinimal(String, String),
    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),
    #[error("no weight vector found within bound {0}")]
    WeightSearchFailed(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
