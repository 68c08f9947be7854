use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is not simple: {0}")]
    NonSimple(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system does not describe a plane embedding (V - E + F = {0})")]
    NotGenusZero(i64),
    #[error("inconsistent rotation: {0}")]
    InconsistentRotation(String),
    #[error("outer face specification does not match any face: {0}")]
    BadOuterFace(String),
    #[error("roots are not distinct vertices of the outer face")]
    RootsNotOnOuterFace,
    #[error("roots are not in clockwise order along the outer face")]
    RootsNotClockwise,
    #[error("graph is not internally 3-connected with respect to the given roots")]
    NotInternally3Connected,
    #[error("invalid Schnyder wood: {0}")]
    InvalidWood(String),
    #[error("minimization did not converge within {0} reversals")]
    FlipDidNotConverge(usize),
    #[error("path order graph contains a cycle")]
    CycleInOrderGraph,
    #[error("path {0} has no neighbor on the previous contour: {1}")]
    MissingNeighbor(usize, String),
    #[error("wood is not minimal: its completion contains a clockwise cycle")]
    NotMinimalWood,
    #[error("index maximal path {0} has no covering path")]
    NoCoveringPath(usize),
    #[error("no deletion rule applies while processing covering path {0}")]
    CaseExhaustion(usize),
    #[error("postcondition failed: {0}")]
    PostconditionFailure(String),
    #[error("edge set is not a spanning tree")]
    NotATree,
    #[error("instance has {0} spanning trees, above the enumeration limit {1}")]
    TooManyTrees(u128, u128),
    #[error("bad generator parameters: {0}")]
    BadParameters(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
