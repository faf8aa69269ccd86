//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Both generators are deterministic and single-threaded: they walk a fixed
//! iteration order and deduplicate through [`crate::canon::canonical_graph6`],
//! so repeated runs produce identical vectors.

use std::collections::BTreeSet;

use crate::canon::canonical_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Largest order accepted by [`enumerate_trees`]. The Prüfer space is
/// `n^(n-2)`; at 9 that is ~4.8M sequences, still fast to sweep.
pub const TREE_ENUM_MAX: usize = 9;

/// Largest order accepted by [`enumerate_connected_graphs`]:
/// `2^(n(n-1)/2)` edge masks, 32768 at 6.
pub const CONNECTED_ENUM_MAX: usize = 6;

/// Decodes a Prüfer sequence over `{0..n-1}` of length `n - 2` into the
/// tree it encodes.
fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1u32; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::new(n).expect("order checked by caller");
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always remains while the sequence is nonempty");
        g.add_edge(leaf, v);
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let mut last = (0..n).filter(|&u| degree[u] == 1);
    let u = last.next().expect("two vertices of degree one remain");
    let v = last.next().expect("two vertices of degree one remain");
    g.add_edge(u, v);
    g
}

/// All trees on `n` vertices up to isomorphism, `2 <= n <= 9`, in
/// canonical-string order.
///
/// Every labeled tree arises from exactly one Prüfer sequence, so sweeping
/// the full sequence space and deduplicating canonically is exhaustive.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(Error::OrderOutOfRange {
            n,
            min: 2,
            max: TREE_ENUM_MAX,
        });
    }
    if n > TREE_ENUM_MAX {
        return Err(Error::OrderTooLarge {
            n,
            cap: TREE_ENUM_MAX,
            context: "tree enumeration",
        });
    }
    let mut seen = BTreeSet::new();
    if n == 2 {
        seen.insert(canonical_graph6(&prufer_decode(2, &[]))?);
    } else {
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            seen.insert(canonical_graph6(&prufer_decode(n, &seq))?);
            // Odometer increment over {0..n-1}^len.
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                seq[pos] += 1;
                if seq[pos] < n {
                    break;
                }
                seq[pos] = 0;
            }
            if pos == 0 && seq[0] == 0 {
                break;
            }
        }
    }
    seen.iter().map(|s| parse_graph6(s)).collect()
}

/// All connected graphs on `n` vertices up to isomorphism, `1 <= n <= 6`,
/// in canonical-string order.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n < 1 {
        return Err(Error::OrderOutOfRange {
            n,
            min: 1,
            max: CONNECTED_ENUM_MAX,
        });
    }
    if n > CONNECTED_ENUM_MAX {
        return Err(Error::OrderTooLarge {
            n,
            cap: CONNECTED_ENUM_MAX,
            context: "connected-graph enumeration",
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut g = Graph::new(n)?;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        if g.is_connected() {
            seen.insert(canonical_graph6(&g)?);
        }
    }
    seen.iter().map(|s| parse_graph6(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_small() {
        // Unlabeled tree counts for n = 2..7.
        for (n, count) in [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11)] {
            assert_eq!(enumerate_trees(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn trees_are_trees() {
        for g in enumerate_trees(6).unwrap() {
            assert!(g.is_tree());
            assert_eq!(g.n(), 6);
        }
    }

    #[test]
    fn tree_range_errors() {
        assert!(matches!(
            enumerate_trees(1),
            Err(Error::OrderOutOfRange { n: 1, .. })
        ));
        assert!(matches!(
            enumerate_trees(10),
            Err(Error::OrderTooLarge { n: 10, cap: 9, .. })
        ));
    }

    #[test]
    fn connected_counts_small() {
        for (n, count) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)] {
            assert_eq!(
                enumerate_connected_graphs(n).unwrap().len(),
                count,
                "n = {n}"
            );
        }
    }

    #[test]
    fn connected_six_count_and_members() {
        let graphs = enumerate_connected_graphs(6).unwrap();
        assert_eq!(graphs.len(), 112);
        for g in &graphs {
            assert!(g.is_connected());
        }
        // The list contains exactly the 6 trees on 6 vertices.
        assert_eq!(graphs.iter().filter(|g| g.is_tree()).count(), 6);
        // And exactly one complete graph.
        assert_eq!(graphs.iter().filter(|g| g.is_complete()).count(), 1);
    }

    #[test]
    fn connected_range_errors() {
        assert!(matches!(
            enumerate_connected_graphs(0),
            Err(Error::OrderOutOfRange { n: 0, .. })
        ));
        assert!(matches!(
            enumerate_connected_graphs(7),
            Err(Error::OrderTooLarge { n: 7, cap: 6, .. })
        ));
    }

    #[test]
    fn deterministic_output() {
        let a = enumerate_connected_graphs(5).unwrap();
        let b = enumerate_connected_graphs(5).unwrap();
        assert_eq!(a, b);
        let ta = enumerate_trees(7).unwrap();
        let tb = enumerate_trees(7).unwrap();
        assert_eq!(ta, tb);
    }
}
