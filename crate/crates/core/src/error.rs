use thiserror::Error;

/// Errors raised by parsing, construction and the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: edge has no vertices")]
    EmptyEdge { line: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {first} and edge {second} are the same set")]
    DuplicateEdge { first: usize, second: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("id {id} out of range for {len} items")]
    IdOutOfRange { id: usize, len: usize },
    #[error("restriction to the empty vertex set")]
    EmptySubset,
    #[error("vertex {vertex} lies in no edge")]
    IsolatedVertex { vertex: usize },
    #[error("vertex {vertex} has an empty open neighborhood")]
    IsolatedVertexForOpen { vertex: usize },
    #[error("instance of size {size} exceeds the brute-force cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("graph is not a tree: {reason}")]
    NotATree { reason: String },
    #[error("open domination is undefined on a single vertex")]
    SingleVertexOpen,
    #[error("no feasible solution: {reason}")]
    Infeasible { reason: String },
    #[error("gap family needs n >= 3, got {n}")]
    NTooSmall { n: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("requested {requested} distinct edges but only {available} exist")]
    InfeasibleEdgeCount { requested: usize, available: u128 },
}

impl Error {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::EmptyEdge { .. } => "EmptyEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::SelfLoop { .. } => "SelfLoop",
            Error::IdOutOfRange { .. } => "IdOutOfRange",
            Error::EmptySubset => "EmptySubset",
            Error::IsolatedVertex { .. } => "IsolatedVertex",
            Error::IsolatedVertexForOpen { .. } => "IsolatedVertexForOpen",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotATree { .. } => "NotATree",
            Error::SingleVertexOpen => "SingleVertexOpen",
            Error::Infeasible { .. } => "Infeasible",
            Error::NTooSmall { .. } => "NTooSmall",
            Error::Parameter(_) => "ParameterError",
            Error::InfeasibleEdgeCount { .. } => "InfeasibleEdgeCount",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
