use thiserror::Error;

/// Errors produced by the library surface.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("malformed graph input: {0}")]
    Parse(String),
    #[error("sets overlap in {0}")]
    OverlappingSets(crate::VertexSet),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("partition is not a coalition partition")]
    InvalidPartition,
    #[error("{n} vertices is too many for exhaustive enumeration (limit {limit})")]
    TooLargeForEnumeration { n: usize, limit: usize },
    #[error("unknown graph spec `{0}`")]
    UnknownSpec(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid family parameters: {0}")]
    BadF1Params(String),
    #[error("k = {k} outside the range {min}..={max} of construction {name}")]
    OutOfRange {
        name: &'static str,
        k: usize,
        min: usize,
        max: usize,
    },
    #[error("construction {name} at k = {k} does not produce a partition: {reason}")]
    MalformedConstruction {
        name: &'static str,
        k: usize,
        reason: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
