use thiserror::Error;

use crate::graph::EdgeId;

/// A malformed input file, with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("vertices `{0}` and `{1}` are in different color classes")]
    ColorMismatch(String, String),
    #[error("edge {0} is negative; the unsigned interior polynomial needs an all-positive graph")]
    NegativeEdge(EdgeId),
    #[error("edge {0} is not negative")]
    NotNegative(EdgeId),
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("the graph has no edges")]
    NoEdges,
    #[error("{0} negative edges exceed the subset-sum limit of {1}")]
    TooManyNegativeEdges(usize, usize),
    #[error("power series of order {0} and {1} cannot be combined")]
    OrderMismatch(usize, usize),
    #[error("coefficient {0} is not an integer")]
    NotIntegral(String),
    #[error("invalid rotation system: {0}")]
    InvalidEmbedding(String),
    #[error("rotation system is not planar: V - E + F = {0}, expected {1}")]
    NonPlanar(i64, i64),
    #[error("invalid link diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagram has {0} crossings, over the budget of {1}")]
    CrossingBudget(usize, usize),
    #[error("weight system: {0}")]
    InvalidWeights(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
