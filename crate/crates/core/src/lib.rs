//! Distance spectra of connected graphs: exact families, spectral bounds,
//! and exhaustive scans.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`graph`] — bitset-backed simple graphs plus exact combinatorial
//!   invariants (degrees, triangles, bipartitions);
//! * [`graph6`] — codec for the compact ASCII graph6 format used for corpus
//!   ingestion and reporting;
//! * [`distance`] — BFS all-pairs shortest paths, diameter, Wiener index;
//! * [`spectra`] — a dense cyclic-Jacobi eigensolver together with an
//!   independent LDL^T inertia oracle ([`inertia`]);
//! * [`families`] — generators and closed-form spectra for complete,
//!   complete bipartite, star, path, and cycle graphs, plus exhaustive
//!   enumeration of small trees and connected graphs ([`enumerate`],
//!   [`canon`]);
//! * [`bounds`] — a catalog of classical inequalities on distance
//!   eigenvalues, each evaluated to a [`bounds::BoundReport`] with equality
//!   detection;
//! * [`harness`] — corpus scans for open questions about `S_k` and
//!   `lambda_2`, with deterministic JSONL/CSV artifacts ([`report`]).
//!
//! All numeric checks use two pinned tolerances: an inequality "holds" when
//! its slack is at least `-1e-9`, and it counts as an equality when the
//! absolute slack is at most `1e-7`.

pub mod bounds;
pub mod canon;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod independence;
pub mod inertia;
pub mod report;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;

/// An inequality holds when its oriented slack is at least this value.
pub const HOLDS_TOL: f64 = 1e-9;
/// An inequality counts as an equality when |slack| is at most this value.
pub const EQUALITY_TOL: f64 = 1e-7;
