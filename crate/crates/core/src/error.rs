use thiserror::Error;

/// Errors raised by graph, group, word and action operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge {{{0}, {0}}} is a loop; simplicial graphs have no loops")]
    LoopEdge(String),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("invalid vertex name `{0}`: names must be non-empty and contain no whitespace, `:`, `,` or `\"`")]
    InvalidName(String),
    #[error("elements of different vertex groups (`{0}` and `{1}`) cannot be multiplied")]
    MixedGroups(String, String),
    #[error("vertex groups are non-trivial: `{0}` is trivial")]
    TrivialGroup(String),
    #[error("invalid group `{name}`: {reason}")]
    InvalidGroup { name: String, reason: String },
    #[error("cannot parse word token `{token}`: {reason}")]
    WordSyntax { token: String, reason: String },
    #[error("{cocycle} cocycle needs {needed} vertex group, `{group}` is {actual}")]
    WrongGroupKind {
        cocycle: &'static str,
        needed: &'static str,
        group: String,
        actual: String,
    },
    #[error("scale constant must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("exponent p must be a finite real >= 1, got {0}")]
    InvalidExponent(f64),
    #[error("value {value} for `{what}` is outside [0, 1]")]
    OutOfUnitInterval { what: String, value: f64 },
    #[error("graph is reducible; decompose it into join factors first")]
    ReducibleGraph,
    #[error("operation needs at least {0} vertices")]
    TooFewVertices(usize),
    #[error("enumeration exceeds the resource limit of {limit} elements")]
    ResourceLimit { limit: usize },
    #[error("kernel table for vertex `{vertex}` has no entry for `{element}`")]
    MissingTableEntry { vertex: String, element: String },
    #[error("growth function: {0}")]
    InvalidGrowth(String),
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
