use thiserror::Error;

/// Errors raised by graph constructions, coloring, ideal arithmetic and the
/// verification layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("{kind} needs at least {min} vertices, got {n}")]
    FamilyTooSmall { kind: &'static str, min: usize, n: usize },

    #[error("{what} must be at least 1")]
    NonPositive { what: &'static str },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has no edges")]
    NoEdges,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("ideal is the zero ideal")]
    ZeroIdeal,

    #[error("exponent {exponent} of x{var} lies outside [1, {s}]")]
    ExponentOutOfRange { var: usize, exponent: u32, s: u32 },

    #[error("graph is not critical (chi = {chi}, failing vertices {failing:?})")]
    NotCritical { chi: usize, failing: Vec<usize> },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
