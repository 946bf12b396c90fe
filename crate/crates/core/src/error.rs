use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("not a poset: {0}")]
    NotAPoset(String),
    #[error("not a meet-semilattice: {a} and {b} have no unique greatest lower bound")]
    NotASemilattice { a: String, b: String },
    #[error("elements {a} and {b} are not comparable")]
    NotComparable { a: String, b: String },
    #[error("poset has no top element")]
    NoTop,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("element {0} out of range")]
    ElementOutOfRange(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("join-map check and isomorphism search disagree at element {element}")]
    CheckDisagreement { element: String },
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("vertex label {0:?} already present")]
    VertexClash(String),
    #[error("blowup result is not a meet-semilattice: {0}")]
    InternalNotSemilattice(String),
    #[error("blowup order is not non-increasing: {earlier} comes before {later} but {earlier} < {later}")]
    OrderNotNonIncreasing { earlier: String, later: String },
    #[error("invalid blowup order: {0}")]
    InvalidOrder(String),
    #[error("not a building set (witness {witness})")]
    NotABuildingSet { witness: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("lattice carries no codimension labels")]
    MissingCodim,
    #[error("point does not lie in the ambient space")]
    PointOutsideAmbient,
    #[error("line {0} does not lie in the ambient space")]
    LineOutsideAmbient(usize),
    #[error("line {0} is zero")]
    ZeroLine(usize),
    #[error("line {0} is not orthogonal to its chain element")]
    LineNotOrthogonal(usize),
    #[error("point encoding is not terminal")]
    NotTerminal,
    #[error("line {0} supplied after the encoding became terminal")]
    TooManyLines(usize),
    #[error("lattice is not atomic (witness {witness})")]
    NotAtomic { witness: String },
    #[error("{to} cannot be reached from {from} by joining atoms")]
    NotReachable { from: String, to: String },
    #[error("cone {cone} is not simplicial")]
    NotSimplicial { cone: String },
    #[error("Hilbert function mismatch: basis {basis:?}, reduction {reduction:?}")]
    HilbertMismatch { basis: Vec<usize>, reduction: Vec<usize> },
    #[error("bad cycle notation: {0}")]
    BadCycle(String),
    #[error("group order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
