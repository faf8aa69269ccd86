//! Crate-wide error type.

use thiserror::Error;

/// Any failure produced by this crate.
#[derive(Error, Debug)]
pub enum Error {
    /// A graph order outside the range supported by the requested operation.
    #[error("graph order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    /// An order above the cap of an exact-mode algorithm.
    #[error("{context}: order {n} exceeds the cap of {cap}")]
    OrderTooLarge {
        n: usize,
        cap: usize,
        context: &'static str,
    },

    /// Malformed graph6 input; `offset` is the byte position within the line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// The graph has no path between the named vertices.
    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    /// The Jacobi eigensolver did not reach its residual target.
    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})"
    )]
    NonConvergence { sweeps: usize, residual: f64 },

    /// LDL^T factorization hit an exactly singular pivot; the shift sits on
    /// an eigenvalue and the caller should perturb it.
    #[error("zero pivot at index {index} in LDL^T factorization; perturb the shift")]
    ZeroPivot { index: usize },

    /// An eigenvalue index `k` outside its valid range.
    #[error("k = {k} out of range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },

    /// A tree-only check was invoked on a non-tree.
    #[error("graph is not a tree (n = {n}, m = {m})")]
    NotATree { n: usize, m: usize },

    /// A bipartite-only check was invoked on a graph with an odd cycle.
    #[error("graph is not bipartite: edge {u}-{v} joins vertices of the same color class")]
    NotBipartite { u: usize, v: usize },

    /// Invalid parameters for a named graph family.
    #[error("invalid family parameters: {reason}")]
    InvalidFamily { reason: String },

    /// The family has no closed-form distance spectrum.
    #[error("no closed-form distance spectrum for {kind} graphs")]
    UnsupportedFamily { kind: &'static str },

    /// A bound id not present in the catalog.
    #[error("unknown bound id `{id}`")]
    UnknownBoundId { id: String },

    /// A scan corpus mixing graph orders where a single order is required.
    #[error("corpus orders differ: expected n = {expected}, graph {index} has n = {found}")]
    MixedOrders {
        expected: usize,
        found: usize,
        index: usize,
    },

    /// A failure attributable to one line of a corpus file.
    #[error("line {line}: {source}")]
    CorpusLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    /// The scoped worker pool could not be built.
    #[error("worker pool configuration failed: {reason}")]
    WorkerPool { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
