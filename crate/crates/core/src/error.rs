use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge:?}: vertex {vertex} out of range (n = {n})")]
    IndexOutOfRange { edge: Vec<usize>, vertex: usize, n: usize },

    #[error("duplicate edge {0:?}; use a multihypergraph to carry multiplicities")]
    DuplicateEdge(Vec<usize>),

    #[error("edge at position {0} is empty")]
    EmptyEdge(usize),

    #[error("bicoloring is not balanced at vertex {vertex} (blue {blue}, red {red})")]
    NotBalanced { vertex: usize, blue: u64, red: u64 },

    #[error("hypergraph is not uniform")]
    NotUniform,

    #[error("vector is not in the integer kernel of the incidence matrix")]
    NotInKernel,

    #[error("zero vector")]
    ZeroVector,

    #[error("operands belong to different host hypergraphs")]
    HostMismatch,

    #[error("the bounded oracle needs a degree bound")]
    BoundRequired,

    #[error("resource limit hit: {resource} exceeded {limit}")]
    ResourceLimit {
        resource: &'static str,
        limit: u64,
        /// Vectors found before the limit was hit, when the operation has any.
        partial: Option<Vec<Vec<i64>>>,
    },

    #[error("hypergraph is not a pair of edge-disjoint perfect matchings")]
    NotMatchingPair,

    #[error("invalid sunflower decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("certificate does not belong to this decomposition")]
    CertificateMismatch,

    #[error("hypergraph admits no balanced bicoloring of its edges")]
    NotMonomial,

    #[error("integer overflow")]
    Overflow,

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    InvalidInput(String),
}
