//! Shared helpers for the integration suites: seeded random graphs and
//! per-binary caches of the exhaustive corpora.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use distspec::enumerate::{enumerate_connected_graphs, enumerate_trees};
use distspec::Graph;

/// Deterministic RNG so every sampled corpus is reproducible.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices with i.i.d. edges; may be disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random connected graph: a random-attachment spanning tree plus
/// Bernoulli extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for v in 1..n {
        let u = rng.random_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && rng.random_bool(extra_p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random labeled tree on `n >= 1` vertices by random attachment.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    random_connected(rng, n, 0.0)
}

/// All connected graphs on 1..=6 vertices; `corpora[i]` holds order `i + 1`.
/// Enumerated once per test binary.
pub fn connected_by_order() -> &'static [Vec<Graph>] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap())
            .collect()
    })
}

/// All trees on 2..=9 vertices; `corpora[i]` holds order `i + 2`.
/// Enumerated once per test binary.
pub fn trees_by_order() -> &'static [Vec<Graph>] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| (2..=9).map(|n| enumerate_trees(n).unwrap()).collect())
}
