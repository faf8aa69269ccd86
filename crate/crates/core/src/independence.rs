//! Exact independence number via bitset branch-and-bound.
//!
//! `alpha(G)` is computed as the clique number of the complement, using the
//! classic expansion with a greedy-coloring upper bound for pruning. Exact
//! mode only, capped at `n <= 64` so candidate sets fit in one `u64`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cap for exact independence-number computation.
pub const INDEPENDENCE_MAX: usize = 64;

/// Computes the independence number `alpha(G)` exactly; errors for `n > 64`.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > INDEPENDENCE_MAX {
        return Err(Error::OrderTooLarge {
            n,
            cap: INDEPENDENCE_MAX,
            context: "independence_number",
        });
    }
    // Adjacency of the complement, one word per vertex.
    let mut adj = vec![0u64; n];
    for (u, word) in adj.iter_mut().enumerate() {
        for v in 0..n {
            if u != v && !g.has_edge(u, v) {
                *word |= 1 << v;
            }
        }
    }
    let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut best = 0usize;
    expand(&adj, 0, all, &mut best);
    Ok(best)
}

/// Extends a clique of size `size` with candidates `cand`, updating `best`.
fn expand(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // Greedy coloring of the candidate set: vertices within one class are
    // pairwise non-adjacent, so a clique takes at most one per class. A
    // vertex in class `i` (1-based) therefore caps the achievable clique at
    // `size + i` when candidates are consumed in class order.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            order.push((v, color));
            avail &= !(adj[v] | (1 << v));
            uncolored &= !(1 << v);
        }
    }
    let mut remaining = cand;
    for (v, color) in order.into_iter().rev() {
        if size + color <= *best {
            return;
        }
        expand(adj, size + 1, remaining & adj[v], best);
        remaining &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    /// The Petersen graph: outer 5-cycle, spokes, inner 5-cycle with step 2.
    fn petersen() -> Graph {
        let mut g = Graph::new(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        g
    }

    /// Reference alpha by brute force over all vertex subsets.
    fn alpha_brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        'subset: for mask in 0u64..(1 << n) {
            for u in 0..n {
                if mask >> u & 1 == 0 {
                    continue;
                }
                for v in (u + 1)..n {
                    if mask >> v & 1 == 1 && g.has_edge(u, v) {
                        continue 'subset;
                    }
                }
            }
            best = best.max(mask.count_ones() as usize);
        }
        best
    }

    #[test]
    fn known_values() {
        let c5 = FamilySpec::cycle(5).unwrap().build();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        let k33 = FamilySpec::complete_bipartite(3, 3).unwrap().build();
        assert_eq!(independence_number(&k33).unwrap(), 3);
        let k5 = FamilySpec::complete(5).unwrap().build();
        assert_eq!(independence_number(&k5).unwrap(), 1);
        let p6 = FamilySpec::path(6).unwrap().build();
        assert_eq!(independence_number(&p6).unwrap(), 3);
    }

    #[test]
    fn petersen_matches_brute_force() {
        let g = petersen();
        assert_eq!(alpha_brute(&g), 4);
        assert_eq!(independence_number(&g).unwrap(), 4);
    }

    #[test]
    fn rejects_large_orders() {
        let g = Graph::new(65).unwrap();
        assert!(matches!(
            independence_number(&g),
            Err(Error::OrderTooLarge { cap: 64, .. })
        ));
        let edgeless = Graph::new(64).unwrap();
        assert_eq!(independence_number(&edgeless).unwrap(), 64);
    }
}
