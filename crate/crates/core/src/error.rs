//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when constructing or transforming hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An edge does not have exactly `k` distinct vertices.
    #[error("edge {edge:?} does not have exactly {k} distinct vertices")]
    EdgeWrongSize { edge: Vec<usize>, k: usize },
    /// A vertex id is outside `0..n`.
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
    /// The same edge (as a set) appears twice.
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },
    /// The operation is only defined for connected hypergraphs.
    #[error("hypergraph is not connected")]
    Disconnected,
    /// A vertex subset argument is invalid (out of range or repeated ids).
    #[error("invalid vertex subset: {reason}")]
    BadSubset { reason: String },
    /// The two subsets of a between-sum overlap.
    #[error("vertex sets overlap on {v}")]
    Overlap { v: usize },
    /// A constructor or operation parameter violates its precondition.
    #[error("bad parameter: {0}")]
    BadParam(String),
    /// `u` and `v` must lie in a common edge.
    #[error("vertices {u} and {v} do not share an edge")]
    NotCoEdge { u: usize, v: usize },
    /// The designated edge is not a pendant edge.
    #[error("edge {e} is not a pendant edge")]
    NotPendantEdge { e: usize },
    /// The hypergraph is not unicyclic.
    #[error("hypergraph is not unicyclic (class: {class})")]
    NotUnicyclic { class: String },
    /// An edge listed in a move does not contain the source vertex.
    #[error("edge {e} does not contain move source {u}")]
    SourceNotInEdge { e: usize, u: usize },
    /// An edge listed in a move already contains the target vertex.
    #[error("edge {e} already contains move target {v}")]
    TargetInEdge { e: usize, v: usize },
    /// Moving an edge would duplicate an existing edge.
    #[error("moved edge {edge:?} collides with an existing edge")]
    CollisionWithExistingEdge { edge: Vec<usize> },
    /// The cycle is too short for the requested transformation.
    #[error("girth {g} is too small (need girth >= 3)")]
    GirthTooSmall { g: usize },
    /// The transformation requires a 2-cycle.
    #[error("girth {g} is not 2")]
    GirthNotTwo { g: usize },
    /// There are no attachment edges to move.
    #[error("nothing to move: the attachment at the designated vertex is trivial")]
    NothingToMove,
    /// The instance exceeds the enumeration budget.
    #[error("instance too large: {candidates} candidates exceed budget {budget}")]
    TooLarge { candidates: u128, budget: u64 },
    /// Unknown lemma id.
    #[error("lemma id {0} is not in 1..=6")]
    BadLemmaId(u8),
}

pub type Result<T> = std::result::Result<T, Error>;
