//! BFS all-pairs shortest paths and the derived distance invariants.

use crate::error::{Error, Result};
use crate::graph::{iter_bits, Graph};

/// The symmetric matrix of pairwise shortest-path lengths of a connected
/// graph, stored row-major as `u32` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `d_ij`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.n && j < self.n);
        self.d[i * self.n + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Maximum entry: the graph diameter.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Wiener index: the sum of distances over unordered pairs.
    pub fn wiener(&self) -> u64 {
        self.d.iter().map(|&x| x as u64).sum::<u64>() / 2
    }

    /// Transmission of vertex `i`: the row sum of distances from `i`.
    pub fn transmission(&self, i: usize) -> u64 {
        self.row(i).iter().map(|&x| x as u64).sum()
    }

    /// Whether every vertex has the same transmission (row sum).
    pub fn is_transmission_regular(&self) -> bool {
        let first = self.transmission(0);
        (1..self.n).all(|i| self.transmission(i) == first)
    }
}

impl Graph {
    /// Computes the full distance matrix by a BFS from every vertex.
    ///
    /// Errors with [`Error::Disconnected`] on disconnected input; sentinel
    /// distances are deliberately not produced.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.n();
        let words = self.words();
        let mut d = vec![0u32; n * n];
        let mut visited = vec![0u64; words];
        let mut frontier = vec![0u64; words];
        let mut next = vec![0u64; words];
        for src in 0..n {
            visited.iter_mut().for_each(|w| *w = 0);
            frontier.iter_mut().for_each(|w| *w = 0);
            visited[src / 64] |= 1 << (src % 64);
            frontier[src / 64] |= 1 << (src % 64);
            let mut level = 0u32;
            let mut seen = 1usize;
            loop {
                for u in iter_bits(&frontier) {
                    d[src * n + u] = level;
                }
                next.iter_mut().for_each(|w| *w = 0);
                for u in iter_bits(&frontier) {
                    for (nw, aw) in next.iter_mut().zip(self.row(u)) {
                        *nw |= aw;
                    }
                }
                let mut grew = false;
                for i in 0..words {
                    next[i] &= !visited[i];
                    visited[i] |= next[i];
                    grew |= next[i] != 0;
                }
                if !grew {
                    break;
                }
                seen += next.iter().map(|w| w.count_ones() as usize).sum::<usize>();
                std::mem::swap(&mut frontier, &mut next);
                level += 1;
            }
            if seen != n {
                let v = (0..n)
                    .find(|&v| visited[v / 64] >> (v % 64) & 1 == 0)
                    .expect("some vertex is unreached");
                return Err(Error::Disconnected { u: src, v });
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// Graph diameter: the maximum pairwise distance.
    pub fn diameter(&self) -> Result<u32> {
        Ok(self.distance_matrix()?.diameter())
    }

    /// Wiener index `W`: the sum of all pairwise distances.
    pub fn wiener_index(&self) -> Result<u64> {
        Ok(self.distance_matrix()?.wiener())
    }
}
