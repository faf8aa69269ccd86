//! Canonical graph6 form for isomorphism-class deduplication at small order.
//!
//! The canonical string is the lexicographically least graph6 encoding over
//! all labelings consistent with iterated degree refinement: vertices are
//! partitioned into refinement cells, cells are ordered canonically by their
//! refinement signature, and the remaining freedom inside cells is resolved
//! by exhaustive search with lexicographic prefix pruning. Two graphs are
//! isomorphic if and only if their canonical strings are equal, since the
//! cell structure itself is an isomorphism invariant.
//!
//! Exhaustive tie-break is viable only at small order; the cap of 16 covers
//! every internal enumeration (trees to 9 vertices, connected graphs to 6).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Cap for canonical-form computation.
pub const CANON_MAX: usize = 16;

/// Computes the canonical graph6 string of a graph with `n <= 16`.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > CANON_MAX {
        return Err(Error::OrderTooLarge {
            n,
            cap: CANON_MAX,
            context: "canonical_graph6",
        });
    }
    if n == 1 {
        return Ok(encode_graph6(g));
    }
    let cells = refine(g);
    let mut search = Search::new(g, &cells);
    search.dfs(0, true);
    let best = search.best.expect("search visits at least one labeling");

    let mut canon = Graph::new(n).expect("order already validated");
    for (v, word) in best.iter().enumerate().skip(1) {
        for u in 0..v {
            if word >> (v - 1 - u) & 1 == 1 {
                canon.add_edge(u, v);
            }
        }
    }
    Ok(encode_graph6(&canon))
}

/// Iterated degree refinement. Returns the stable ordered partition; the
/// cell order depends only on the isomorphism class, not the labeling.
fn refine(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    // Initial colors: rank of the vertex degree among the sorted degrees.
    let mut colors = rank_by_key(&(0..n).map(|v| g.degree(v) as u128).collect::<Vec<_>>());
    loop {
        // Signature: own color in the high bits, neighbor-color counts
        // packed 4 bits per color below (n <= 16 bounds both quantities).
        let sigs: Vec<u128> = (0..n)
            .map(|v| {
                let mut sig = (colors[v] as u128) << 64;
                for u in g.neighbors(v) {
                    sig += 1u128 << (4 * colors[u]);
                }
                sig
            })
            .collect();
        let next = rank_by_key(&sigs);
        let classes = next.iter().max().unwrap() + 1;
        let stable = classes == colors.iter().max().unwrap() + 1;
        colors = next;
        if stable {
            break;
        }
    }
    let classes = colors.iter().max().unwrap() + 1;
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    cells
}

/// Maps each key to the rank of its value among the sorted distinct keys.
fn rank_by_key(keys: &[u128]) -> Vec<usize> {
    let mut sorted: Vec<u128> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// Depth-first minimization over cell-respecting labelings.
///
/// Position `p` receives a vertex from the cell covering `p`; the adjacency
/// column toward earlier positions is compared against the incumbent best,
/// pruning any branch that is already lexicographically greater.
struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cell_of_pos: Vec<usize>,
    cells: Vec<Vec<usize>>,
    used: Vec<bool>,
    perm: Vec<usize>,
    cols: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, cells: &[Vec<usize>]) -> Self {
        let n = g.n();
        let mut cell_of_pos = Vec::with_capacity(n);
        for (c, cell) in cells.iter().enumerate() {
            cell_of_pos.extend(std::iter::repeat_n(c, cell.len()));
        }
        Self {
            g,
            n,
            cell_of_pos,
            cells: cells.to_vec(),
            used: vec![false; n],
            perm: vec![0; n],
            cols: vec![0; n],
            best: None,
        }
    }

    /// `tied` is a pruning hint: the current prefix equaled the best when
    /// this branch was entered. Completion re-compares in full, so a stale
    /// hint can only cost work, never the minimum.
    fn dfs(&mut self, pos: usize, tied: bool) {
        if pos == self.n {
            let replace = match &self.best {
                None => true,
                Some(b) => self.cols < *b,
            };
            if replace {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        let cell = self.cell_of_pos[pos];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            let mut col = 0u16;
            for u in 0..pos {
                col = (col << 1) | u16::from(self.g.has_edge(self.perm[u], v));
            }
            let child_tied = if let (true, Some(best)) = (tied, self.best.as_ref()) {
                if col > best[pos] {
                    continue;
                }
                col == best[pos]
            } else {
                false
            };
            self.used[v] = true;
            self.perm[pos] = v;
            self.cols[pos] = col;
            self.dfs(pos + 1, child_tied);
            self.used[v] = false;
        }
    }
}
