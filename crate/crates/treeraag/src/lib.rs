//! Decision procedure for right-angled Coxeter groups on triangle-free
//! presentation graphs: is the group quasiisometric to a right-angled
//! Artin group whose presentation graph is a tree of diameter at least
//! three, and if so, what is the visible index-4 Artin subgroup?
//!
//! The pipeline:
//!
//! 1. [`graph`] — the shared graph value type, parsing, the hypothesis
//!    gate (triangle-free, incomplete, connected, no separating clique).
//! 2. [`squares`] — induced squares, the diagonal graph, CFS.
//! 3. [`cuts`] — cut pairs, cut 2-paths, crossing, maximal thick joins.
//! 4. [`jsj`] — the visual graph of cylinders with annotations.
//! 5. [`mod@classify`] — the structural decision with certificates and
//!    obstruction witnesses.
//! 6. [`fidl`] — the spanning-forest-pair construction, commuting graph,
//!    and hull-based verification.
//! 7. [`words`] — normal forms for both groups and injectivity sampling.

pub mod classify;
pub mod cuts;
pub mod fidl;
pub mod fixtures;
pub mod graph;
pub mod jsj;
pub mod squares;
pub mod structured;
pub mod words;

pub use classify::{classify, Classification, Obstruction};
pub use graph::{Graph, GraphFormat, VertexId};

/// Errors shared by the whole crate. `Internal` signals a violated
/// structural invariant, which the command line maps to its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("too many vertices: {0} exceeds the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("triangle found on vertices {0:?}")]
    TriangleFound(Vec<String>),
    #[error("pole vertices {0} and {1} are adjacent")]
    AdjacentPole(String, String),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("gate failure: {}", .0.join("; "))]
    GateFailure(Vec<String>),
    #[error("cycle graphs have no graph of cylinders here")]
    CycleGraph,
    #[error("vertex outside the tree: {0}")]
    NotInTree(String),
    #[error("cycle length bound {0} exceeded")]
    BoundExceeded(usize),
    #[error("enumeration cap {0} exceeded")]
    ResourceBound(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
