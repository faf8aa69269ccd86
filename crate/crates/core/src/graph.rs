//! Simple undirected graphs stored as fixed-width bitset adjacency rows.

use crate::error::{Error, Result};

/// Largest supported vertex count; dense eigensolve cost dominates beyond it.
pub const MAX_ORDER: usize = 512;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as `n` bitset rows of `n` bits each. The structure
/// maintains two invariants: the adjacency relation is symmetric, and there
/// are no loops. Values are immutable after construction in practice and are
/// safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Creates an edgeless graph on `n` vertices, `1 <= n <= 512`.
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange {
                n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let words = n.div_ceil(64);
        Ok(Self {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per adjacency row.
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// The adjacency row of `u` as a bitset slice.
    pub fn row(&self, u: usize) -> &[u64] {
        debug_assert!(u < self.n);
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Inserts the edge `uv`. Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert_ne!(u, v, "loops are not allowed");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Whether the edge `uv` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Degree of `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All vertex degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        let twice: usize = (0..self.n).map(|u| self.degree(u)).sum();
        twice / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Iterates over the neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    /// The complement graph (same vertex set, complemented edge set).
    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n).expect("order already validated");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    c.add_edge(u, v);
                }
            }
        }
        c
    }

    /// Whether the graph is connected (single vertex counts as connected).
    pub fn is_connected(&self) -> bool {
        self.reachable_from(0)
            .iter()
            .map(|w| w.count_ones())
            .sum::<u32>() as usize
            == self.n
    }

    /// Whether the graph is a tree: connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Whether the graph is complete.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Whether the graph is a path with its `n` vertices in any labeling.
    pub fn is_path_graph(&self) -> bool {
        self.edge_count() == self.n - 1
            && (0..self.n).all(|u| self.degree(u) <= 2)
            && self.is_connected()
    }

    /// Whether the graph is a star `K_{1,n-1}` (defined for `n >= 2`).
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.is_tree() && (0..self.n).any(|u| self.degree(u) == self.n - 1)
    }

    /// Whether the graph is a complete bipartite graph `K_{r,n-r}`.
    ///
    /// Requires connectivity; returns `false` for disconnected input.
    pub fn is_complete_bipartite(&self) -> bool {
        match self.bipartition() {
            Ok(Some(bp)) => self.edge_count() == bp.part1.len() * bp.part2.len(),
            _ => false,
        }
    }

    /// Whether the graph is `K_{n/2,n/2}` for even `n`.
    pub fn is_balanced_complete_bipartite(&self) -> bool {
        self.n.is_multiple_of(2)
            && match self.bipartition() {
                Ok(Some(bp)) => {
                    bp.part1.len() == self.n / 2
                        && self.edge_count() == bp.part1.len() * bp.part2.len()
                }
                _ => false,
            }
    }

    /// Total number of triangles `t(G)`.
    pub fn triangle_count(&self) -> usize {
        let total: usize = (0..self.n).map(|u| self.triangle_count_at(u)).sum();
        total / 3
    }

    /// Number of triangles containing `u`; equals the edge count of the
    /// subgraph induced by the neighborhood of `u`.
    pub fn triangle_count_at(&self, u: usize) -> usize {
        let nu = self.row(u);
        let mut twice = 0usize;
        for v in self.neighbors(u) {
            let nv = self.row(v);
            twice += nu
                .iter()
                .zip(nv)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
        }
        twice / 2
    }

    /// Degree statistics `(max, min, second-min, mean)`; needs `n >= 2` so
    /// that the second-smallest degree exists.
    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n < 2 {
            return Err(Error::OrderOutOfRange {
                n: self.n,
                min: 2,
                max: MAX_ORDER,
            });
        }
        let mut degs = self.degrees();
        let mean = degs.iter().sum::<usize>() as f64 / self.n as f64;
        degs.sort_unstable();
        Ok(DegreeStats {
            max: degs[self.n - 1],
            min: degs[0],
            second_min: degs[1],
            mean,
        })
    }

    /// Two-colors the graph by BFS. Returns `None` when an odd cycle exists.
    /// By convention `part1` is the smaller side.
    ///
    /// Requires connectivity; otherwise the coloring would be ambiguous.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        Ok(match self.two_color()? {
            TwoColor::Classes(b) => Some(b),
            TwoColor::OddEdge(..) => None,
        })
    }

    /// Like [`Graph::bipartition`], but on failure reports the first edge
    /// found inside one color class.
    pub(crate) fn two_color(&self) -> Result<TwoColor> {
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return Ok(TwoColor::OddEdge(u, v));
                }
            }
        }
        if let Some(v) = color.iter().position(|&c| c == u8::MAX) {
            return Err(Error::Disconnected { u: 0, v });
        }
        let part_a: Vec<usize> = (0..self.n).filter(|&v| color[v] == 0).collect();
        let part_b: Vec<usize> = (0..self.n).filter(|&v| color[v] == 1).collect();
        let (part1, part2) = if part_b.len() < part_a.len() {
            (part_b, part_a)
        } else {
            (part_a, part_b)
        };
        Ok(TwoColor::Classes(Bipartition { part1, part2 }))
    }

    /// Bitset of vertices reachable from `src`.
    pub(crate) fn reachable_from(&self, src: usize) -> Vec<u64> {
        let mut visited = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        visited[src / 64] |= 1 << (src % 64);
        frontier[src / 64] |= 1 << (src % 64);
        let mut next = vec![0u64; self.words];
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            for u in iter_bits(&frontier) {
                for (nw, aw) in next.iter_mut().zip(self.row(u)) {
                    *nw |= aw;
                }
            }
            let mut grew = false;
            for i in 0..self.words {
                next[i] &= !visited[i];
                visited[i] |= next[i];
                grew |= next[i] != 0;
            }
            if !grew {
                return visited;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Degree statistics of a graph: maximum, minimum, second-smallest value in
/// the degree multiset, and mean degree `2m/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub second_min: usize,
    pub mean: f64,
}

/// A bipartition `V = part1 ∪ part2` with every edge crossing the parts and
/// `|part1| <= |part2|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl Bipartition {
    /// Size of the smaller part.
    pub fn r(&self) -> usize {
        self.part1.len()
    }
}

/// Outcome of BFS two-coloring: either the color classes or an edge whose
/// endpoints were forced into the same class.
pub(crate) enum TwoColor {
    Classes(Bipartition),
    OddEdge(usize, usize),
}

/// Iterates over the set bit positions of a bitset slice.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + bit)
        })
    })
}
