use thiserror::Error;

/// Unified error type for graph construction, invariant queries, family
/// builders, transforms, and enumeration.
///
/// Refuted claims are never errors; they are reported as verdict data.
/// An `Err` from this crate always means the operation itself could not
/// be performed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// An edge is malformed for the operation: self-loop, duplicate, or
    /// already present where a new edge is required.
    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    /// A numeric parameter is outside the supported domain.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    NotConnected,

    /// The named vertex pair is not an edge of the graph.
    #[error("pair ({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    /// The named edge exists but is not a cut edge.
    #[error("edge ({0}, {1}) is not a cut edge")]
    NotABridge(usize, usize),

    /// The contraction transform rejects cut edges with a pendant
    /// endpoint; contracting one just relocates the leaf.
    #[error("cut edge ({0}, {1}) has a pendant endpoint")]
    PendantBridge(usize, usize),

    /// The vertex passed as a pendant has degree other than one.
    #[error("vertex {0} is not pendant")]
    NotPendant(usize),

    /// A pendant move that would leave the graph unchanged or attach
    /// the leaf to itself.
    #[error("invalid pendant move: {0}")]
    InvalidMove(String),

    /// Family parameters that pass the range checks but name a graph
    /// the family excludes by construction.
    #[error("degenerate family parameters: {0}")]
    DegenerateFamily(String),
}
