use thiserror::Error;

/// Errors raised by the analysis library.
///
/// Verification failures are never errors; they are reported through
/// [`crate::lemmas::LemmaVerdict`] and [`crate::certify::CertReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: u32 },
    #[error("line {line}: expected two positive integer labels, found {found:?}")]
    BadEdgeLine { line: usize, found: String },
    #[error("graph would have {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("graph needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u32),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("cycle length {k} out of range 3..={n}")]
    LengthOutOfRange { k: usize, n: usize },
    #[error("zeon coefficient overflow")]
    CoefficientOverflow,
    #[error("internal error: trace coefficient sum {sum} is not divisible by {divisor}")]
    TraceNotDivisible { sum: i128, divisor: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("internal error: family not closed under the group ({0})")]
    FamilyNotClosed(String),
    #[error("cycle of length {len} is not Hamiltonian in a graph on {n} vertices")]
    NotHamiltonian { len: usize, n: usize },
    #[error("cycle must omit exactly 2 of the graph's vertices, it omits {0}")]
    BadComplement(usize),
    #[error("invalid disjoint pair: {0}")]
    InvalidPair(String),
    #[error("vertices {0:?} do not form a triangle")]
    NotTriangle([u32; 3]),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotDegreeThree { vertex: u32, degree: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
