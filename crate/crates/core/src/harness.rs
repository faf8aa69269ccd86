//! Corpus scans: streaming evaluation of the open-problem statistics and
//! of bound-catalog batches, with deterministic, re-verified output.
//!
//! Scans map over the corpus in parallel with order-preserving collection,
//! then aggregate sequentially, so results are independent of worker count.
//! Every reported violation is re-verified from a fresh parse of its
//! graph6 string — by recomputation for partial-sum claims and through the
//! triangular-factorization eigenvalue-counting oracle for single-eigenvalue
//! claims — and carries the outcome in its `verified` flag.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{check_by_id, BoundId, BoundReport};
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColor};
use crate::graph6::{encode_graph6, parse_graph6, FILE_HEADER};
use crate::inertia::inertia_below_perturbing;
use crate::spectra::{distance_spectrum, eig_symmetric, SymMatrix};
use crate::{EQUALITY_TOL, HOLDS_TOL};

/// Runs `f` inside a private worker pool of the given size, so callers can
/// pin the parallelism of the scans without touching the global pool.
///
/// Scan output is identical for every worker count; this exists to control
/// resource use and to let tests state that property.
pub fn with_workers<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::WorkerPool {
            reason: e.to_string(),
        })?;
    Ok(pool.install(f))
}

/// One graph that broke the scanned inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub lhs: f64,
    pub rhs: f64,
    /// Whether the claim survived independent re-verification.
    pub verified: bool,
}

/// Aggregated outcome of one scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSummary {
    /// Which statement was scanned; for bound batches, the ids joined by `+`.
    pub conjecture_id: String,
    /// Common order of the corpus, when it has one.
    pub n: Option<usize>,
    /// The `k` parameter, for scans that take one.
    pub k: Option<usize>,
    pub corpus_size: usize,
    /// Sorted by graph6 string.
    pub violations: Vec<Violation>,
    /// Graphs attaining equality (within tolerance), sorted; disjoint from
    /// the violations.
    pub equality_witnesses: Vec<String>,
    /// The witness set the scanned statement predicts, sorted.
    pub expected_witnesses: Vec<String>,
    /// Graph maximizing the scanned statistic, ties broken toward the
    /// lexicographically smaller graph6 string.
    pub extremal: Option<(String, f64)>,
}

impl ScanSummary {
    fn empty(conjecture_id: impl Into<String>, k: Option<usize>) -> Self {
        Self {
            conjecture_id: conjecture_id.into(),
            n: None,
            k,
            corpus_size: 0,
            violations: Vec::new(),
            equality_witnesses: Vec::new(),
            expected_witnesses: Vec::new(),
            extremal: None,
        }
    }
}

/// Checks that all corpus members share one order; `None` for an empty
/// corpus.
fn uniform_order(corpus: &[Graph]) -> Result<Option<usize>> {
    let Some(first) = corpus.first() else {
        return Ok(None);
    };
    let expected = first.n();
    for (index, g) in corpus.iter().enumerate() {
        if g.n() != expected {
            return Err(Error::MixedOrders {
                expected,
                found: g.n(),
                index,
            });
        }
    }
    Ok(Some(expected))
}

fn require_k(k: usize, min: usize, n: usize) -> Result<()> {
    if k < min || k > n {
        return Err(Error::KOutOfRange { k, min, max: n });
    }
    Ok(())
}

/// Argmax over `(graph6, value)` pairs with the deterministic tie rule.
fn extremal_of<'a>(samples: impl Iterator<Item = (&'a str, f64)>) -> Option<(String, f64)> {
    let mut best: Option<(&str, f64)> = None;
    for (g6, value) in samples {
        best = match best {
            None => Some((g6, value)),
            Some((bg, bv)) => {
                if value > bv || (value == bv && g6 < bg) {
                    Some((g6, value))
                } else {
                    Some((bg, bv))
                }
            }
        };
    }
    best.map(|(g6, value)| (g6.to_owned(), value))
}

fn recompute_sk(graph6: &str, k: usize) -> Option<f64> {
    let g = parse_graph6(graph6).ok()?;
    distance_spectrum(&g).ok()?.sum_top_k(k).ok()
}

/// Scans "is the path the unique maximizer of `S_k`": violations are
/// non-path graphs with `S_k` at or above the path's value.
pub fn scan_path_max(corpus: &[Graph], k: usize) -> Result<ScanSummary> {
    let Some(n) = uniform_order(corpus)? else {
        return Ok(ScanSummary::empty("path-max", Some(k)));
    };
    require_k(k, 1, n)?;
    let path = crate::families::FamilySpec::path(n)
        .expect("corpus orders fit the path family")
        .build();
    let rhs = distance_spectrum(&path)?.sum_top_k(k)?;
    let samples: Vec<(String, f64, bool)> = corpus
        .par_iter()
        .map(|g| -> Result<_> {
            let sk = distance_spectrum(g)?.sum_top_k(k)?;
            Ok((encode_graph6(g), sk, g.is_path_graph()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut violations: Vec<Violation> = samples
        .iter()
        .filter(|(_, sk, is_path)| !is_path && *sk >= rhs - HOLDS_TOL)
        .map(|(g6, sk, _)| Violation {
            graph6: g6.clone(),
            lhs: *sk,
            rhs,
            verified: recompute_sk(g6, k)
                .is_some_and(|v| (v - sk).abs() <= 1e-6 && v >= rhs - HOLDS_TOL),
        })
        .collect();
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(ScanSummary {
        conjecture_id: "path-max".into(),
        n: Some(n),
        k: Some(k),
        corpus_size: corpus.len(),
        violations,
        equality_witnesses: Vec::new(),
        expected_witnesses: Vec::new(),
        extremal: extremal_of(samples.iter().map(|(g6, sk, _)| (g6.as_str(), *sk))),
    })
}

/// Scans `S_k >= 2n - 2k` over connected bipartite graphs; the predicted
/// equality witnesses are the complete bipartite members of the corpus.
pub fn scan_bipartite_sk(corpus: &[Graph], k: usize) -> Result<ScanSummary> {
    let Some(n) = uniform_order(corpus)? else {
        return Ok(ScanSummary::empty("bipartite-sk", Some(k)));
    };
    require_k(k, 2, n)?;
    let samples: Vec<(String, f64, bool)> = corpus
        .par_iter()
        .map(|g| -> Result<_> {
            if let TwoColor::OddEdge(u, v) = g.two_color()? {
                return Err(Error::NotBipartite { u, v });
            }
            let sk = distance_spectrum(g)?.sum_top_k(k)?;
            Ok((encode_graph6(g), sk, g.is_complete_bipartite()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = (2 * (n - k)) as f64;
    let mut violations = Vec::new();
    let mut equality_witnesses = Vec::new();
    for (g6, sk, _) in &samples {
        if *sk < rhs - HOLDS_TOL {
            violations.push(Violation {
                graph6: g6.clone(),
                lhs: *sk,
                rhs,
                verified: recompute_sk(g6, k)
                    .is_some_and(|v| (v - sk).abs() <= 1e-6 && v < rhs - HOLDS_TOL),
            });
        } else if (sk - rhs).abs() <= EQUALITY_TOL {
            equality_witnesses.push(g6.clone());
        }
    }
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    equality_witnesses.sort();
    let mut expected_witnesses: Vec<String> = samples
        .iter()
        .filter(|(_, _, complete_bip)| *complete_bip)
        .map(|(g6, ..)| g6.clone())
        .collect();
    expected_witnesses.sort();
    Ok(ScanSummary {
        conjecture_id: "bipartite-sk".into(),
        n: Some(n),
        k: Some(k),
        corpus_size: corpus.len(),
        violations,
        equality_witnesses,
        expected_witnesses,
        extremal: extremal_of(samples.iter().map(|(g6, sk, _)| (g6.as_str(), *sk))),
    })
}

/// Scans `lambda_2(D) <= n/2 - 2`; the predicted equality witness is the
/// balanced complete bipartite graph.
pub fn scan_lambda2_half(corpus: &[Graph]) -> Result<ScanSummary> {
    let Some(n) = uniform_order(corpus)? else {
        return Ok(ScanSummary::empty("lambda2-half", None));
    };
    require_k(2, 2, n)?;
    let rhs = n as f64 / 2.0 - 2.0;
    let samples: Vec<(String, f64, bool)> = corpus
        .par_iter()
        .map(|g| -> Result<_> {
            let lambda2 = distance_spectrum(g)?.lambda(2);
            Ok((
                encode_graph6(g),
                lambda2,
                g.is_balanced_complete_bipartite(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut violations = Vec::new();
    let mut equality_witnesses = Vec::new();
    for (g6, lambda2, _) in &samples {
        if *lambda2 > rhs + HOLDS_TOL {
            violations.push(Violation {
                graph6: g6.clone(),
                lhs: *lambda2,
                rhs,
                verified: verify_lambda2_above(g6, rhs),
            });
        } else if (lambda2 - rhs).abs() <= EQUALITY_TOL {
            equality_witnesses.push(g6.clone());
        }
    }
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    equality_witnesses.sort();
    let mut expected_witnesses: Vec<String> = samples
        .iter()
        .filter(|(_, _, balanced)| *balanced)
        .map(|(g6, ..)| g6.clone())
        .collect();
    expected_witnesses.sort();
    Ok(ScanSummary {
        conjecture_id: "lambda2-half".into(),
        n: Some(n),
        k: None,
        corpus_size: corpus.len(),
        violations,
        equality_witnesses,
        expected_witnesses,
        extremal: extremal_of(samples.iter().map(|(g6, l2, _)| (g6.as_str(), *l2))),
    })
}

/// Confirms `lambda_2 > rhs` on a fresh parse, cross-checked against the
/// factorization counting oracle: at most `n - 2` eigenvalues may lie
/// below `rhs`.
fn verify_lambda2_above(graph6: &str, rhs: f64) -> bool {
    let Ok(g) = parse_graph6(graph6) else {
        return false;
    };
    let Ok(dm) = g.distance_matrix() else {
        return false;
    };
    let sym = SymMatrix::from_distance(&dm);
    let recomputed = match eig_symmetric(&sym) {
        Ok(s) => s.lambda(2),
        Err(_) => return false,
    };
    recomputed > rhs + HOLDS_TOL
        && inertia_below_perturbing(&sym, rhs).is_ok_and(|count| count <= g.n() - 2)
}

/// Which errors mean "this bound does not apply to this graph" rather
/// than "this corpus is unusable".
fn maps_to_inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::NotATree { .. }
            | Error::NotBipartite { .. }
            | Error::KOutOfRange { .. }
            | Error::OrderTooLarge { .. }
    )
}

/// The `(k, s)` subset each catalog entry records in its reports.
fn id_params(id: BoundId, k: usize, s: usize) -> (Option<usize>, Option<usize>) {
    match id {
        BoundId::SkLowerGeneral
        | BoundId::SkLowerTree
        | BoundId::PathDominance
        | BoundId::LambdakFloor
        | BoundId::MooreThreshold => (Some(k), None),
        BoundId::Lambda2Triangles | BoundId::TuranChain => (None, Some(s)),
        BoundId::Lambda2TrianglesT => (None, Some(2)),
        _ => (None, None),
    }
}

/// Batch-evaluates catalog entries over a corpus.
///
/// Produces one report per `(graph, bound)`, sorted by
/// `(graph6, bound id)`, plus a per-graph summary: a graph counts as a
/// violation when any applicable entry fails on it, else as an equality
/// witness when any entry is tight. Structural mismatches (a non-tree fed
/// to a tree bound, a `k` exceeding the order, an order beyond the
/// independence solver's cap) become inapplicable reports; corpus-level
/// problems (disconnection, eigensolver failure) abort the scan.
pub fn scan_bounds(
    corpus: &[Graph],
    ids: &[BoundId],
    k: usize,
    s: usize,
) -> Result<(Vec<BoundReport>, ScanSummary)> {
    let per_graph: Vec<Vec<BoundReport>> = corpus
        .par_iter()
        .map(|g| -> Result<Vec<BoundReport>> {
            ids.iter()
                .map(|&id| match check_by_id(id, g, k, s) {
                    Ok(report) => Ok(report),
                    Err(e) if maps_to_inapplicable(&e) => {
                        let (pk, ps) = id_params(id, k, s);
                        Ok(BoundReport::inapplicable(g, id, pk, ps))
                    }
                    Err(e) => Err(e),
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut violations = Vec::new();
    let mut equality_witnesses = Vec::new();
    for reports in &per_graph {
        let worst = reports
            .iter()
            .filter(|r| r.applicable && !r.holds)
            .min_by(|a, b| a.slack.unwrap().total_cmp(&b.slack.unwrap()));
        if let Some(r) = worst {
            violations.push(Violation {
                graph6: r.graph6.clone(),
                lhs: r.lhs.expect("applicable report has values"),
                rhs: r.rhs.expect("applicable report has values"),
                verified: verify_bound_violation(r, k, s),
            });
        } else if let Some(r) = reports.iter().find(|r| r.equality) {
            equality_witnesses.push(r.graph6.clone());
        }
    }
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    equality_witnesses.sort();

    let mut reports: Vec<BoundReport> = per_graph.into_iter().flatten().collect();
    reports.sort_by(|a, b| {
        (a.graph6.as_str(), a.bound_id.as_str()).cmp(&(b.graph6.as_str(), b.bound_id.as_str()))
    });

    let extremal = extremal_of(
        reports
            .iter()
            .filter_map(|r| Some((r.graph6.as_str(), -r.slack?))),
    );
    let conjecture_id = ids
        .iter()
        .map(|id| id.as_str())
        .collect::<Vec<_>>()
        .join("+");
    // Unlike the conjecture scans, bound batches accept mixed orders; the
    // summary then simply records no common order.
    let common_order = corpus
        .first()
        .map(Graph::n)
        .filter(|&first| corpus.iter().all(|g| g.n() == first));
    let summary = ScanSummary {
        conjecture_id,
        n: common_order,
        k: Some(k),
        corpus_size: corpus.len(),
        violations,
        equality_witnesses,
        expected_witnesses: Vec::new(),
        extremal,
    };
    Ok((reports, summary))
}

enum Side {
    Lower,
    Upper,
}

/// For bounds comparing a single eigenvalue to the rhs: its 1-based index
/// and the side of the comparison.
fn single_eigen_claim(id: BoundId, g: &Graph, k: usize) -> Option<(usize, Side)> {
    match id {
        BoundId::Lambda2Diameter | BoundId::Lambda2Triangles | BoundId::Lambda2TrianglesT => {
            Some((2, Side::Upper))
        }
        BoundId::ZhouIlic => Some((1, Side::Upper)),
        BoundId::BipartiteLambda1 | BoundId::Lambda1Wiener => Some((1, Side::Lower)),
        BoundId::LambdakFloor | BoundId::MooreThreshold => Some((k, Side::Lower)),
        BoundId::MerrisHalfDiameter => {
            let dm = g.distance_matrix().ok()?;
            Some((dm.diameter() as usize / 2, Side::Lower))
        }
        _ => None,
    }
}

/// Re-runs a failing check on a fresh parse and, where the bound compares
/// one eigenvalue, confirms the eigenvalue-counting oracle agrees with
/// the claimed ordering.
fn verify_bound_violation(report: &BoundReport, k: usize, s: usize) -> bool {
    let Ok(g) = parse_graph6(&report.graph6) else {
        return false;
    };
    let Ok(fresh) = check_by_id(report.bound_id, &g, k, s) else {
        return false;
    };
    if !fresh.applicable || fresh.holds {
        return false;
    }
    let (Some(lhs), Some(rhs)) = (fresh.lhs, fresh.rhs) else {
        return false;
    };
    if report.lhs.is_none_or(|orig| (lhs - orig).abs() > 1e-6) {
        return false;
    }
    let Some((index, side)) = single_eigen_claim(report.bound_id, &g, k) else {
        return true;
    };
    let Ok(dm) = g.distance_matrix() else {
        return false;
    };
    let Ok(count) = inertia_below_perturbing(&SymMatrix::from_distance(&dm), rhs) else {
        return false;
    };
    let n = g.n();
    match side {
        // Violated lower bound: lambda_index < rhs, so eigenvalues
        // index..=n all lie below rhs.
        Side::Lower => count > n - index,
        // Violated upper bound: lambda_index > rhs, so at most n - index
        // eigenvalues lie below rhs.
        Side::Upper => count <= n - index,
    }
}

/// Reads a graph6 corpus file: one graph per line, blank lines and
/// `>>graph6<<` headers skipped, every graph checked for connectivity.
/// Errors carry 1-based line numbers.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let content = std::fs::read_to_string(path)?;
    corpus_from_str(&content)
}

/// [`load_corpus`] on in-memory text.
pub fn corpus_from_str(content: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (idx, raw) in content.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with(FILE_HEADER) {
            continue;
        }
        let wrap = |source: Error| Error::CorpusLine {
            line: idx + 1,
            source: Box::new(source),
        };
        let g = parse_graph6(line).map_err(wrap)?;
        if !g.is_connected() {
            let reach = g.reachable_from(0);
            let v = (0..g.n())
                .find(|&v| reach[v / 64] >> (v % 64) & 1 == 0)
                .expect("a disconnected graph has an unreached vertex");
            return Err(wrap(Error::Disconnected { u: 0, v }));
        }
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_graph6;
    use crate::enumerate::{enumerate_connected_graphs, enumerate_trees};
    use crate::families::FamilySpec;

    fn bipartite_corpus(n: usize) -> Vec<Graph> {
        enumerate_connected_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| matches!(g.two_color(), Ok(TwoColor::Classes(_))))
            .collect()
    }

    #[test]
    fn path_max_exhaustive_n5() {
        let corpus = enumerate_connected_graphs(5).unwrap();
        let summary = scan_path_max(&corpus, 2).unwrap();
        assert_eq!(summary.corpus_size, 21);
        assert!(summary.violations.is_empty());
        let (extremal, _) = summary.extremal.unwrap();
        assert!(parse_graph6(&extremal).unwrap().is_path_graph());
    }

    #[test]
    fn path_max_trees_n7() {
        let corpus = enumerate_trees(7).unwrap();
        let summary = scan_path_max(&corpus, 2).unwrap();
        assert_eq!(summary.corpus_size, 11);
        assert!(summary.violations.is_empty());
        let (extremal, value) = summary.extremal.unwrap();
        assert!(parse_graph6(&extremal).unwrap().is_path_graph());
        assert!(value > 14.0, "S_2 of the 7-path exceeds its Wiener mean");
    }

    #[test]
    fn path_max_singleton_corpus() {
        let p6 = FamilySpec::path(6).unwrap().build();
        let summary = scan_path_max(&[p6], 2).unwrap();
        assert_eq!(summary.corpus_size, 1);
        assert!(summary.violations.is_empty());
        assert!(summary.extremal.is_some());
    }

    #[test]
    fn bipartite_sk_witnesses_n6() {
        let corpus = bipartite_corpus(6);
        let summary = scan_bipartite_sk(&corpus, 2).unwrap();
        assert!(summary.violations.is_empty());
        let mut expected: Vec<String> = [(1, 5), (2, 4), (3, 3)]
            .into_iter()
            .map(|(r, s)| {
                canonical_graph6(&FamilySpec::complete_bipartite(r, s).unwrap().build()).unwrap()
            })
            .collect();
        expected.sort();
        assert_eq!(summary.equality_witnesses, expected);
        assert_eq!(summary.expected_witnesses, expected);
        assert!(summary.corpus_size >= summary.violations.len() + summary.equality_witnesses.len());
    }

    #[test]
    fn bipartite_sk_rejects_odd_cycles() {
        let c5 = FamilySpec::cycle(5).unwrap().build();
        let k22 = FamilySpec::complete_bipartite(2, 3).unwrap().build();
        assert!(matches!(
            scan_bipartite_sk(&[k22, c5], 2),
            Err(Error::NotBipartite { .. })
        ));
    }

    #[test]
    fn lambda2_half_exhaustive_n6() {
        let corpus = enumerate_connected_graphs(6).unwrap();
        let summary = scan_lambda2_half(&corpus).unwrap();
        assert_eq!(summary.corpus_size, 112);
        assert!(summary.violations.is_empty());
        let k33 = canonical_graph6(&FamilySpec::complete_bipartite(3, 3).unwrap().build()).unwrap();
        assert_eq!(summary.equality_witnesses, vec![k33.clone()]);
        assert_eq!(summary.expected_witnesses, vec![k33]);
    }

    #[test]
    fn lambda2_half_exhaustive_n4() {
        let corpus = enumerate_connected_graphs(4).unwrap();
        let summary = scan_lambda2_half(&corpus).unwrap();
        assert!(summary.violations.is_empty());
        let k22 = canonical_graph6(&FamilySpec::complete_bipartite(2, 2).unwrap().build()).unwrap();
        assert_eq!(summary.equality_witnesses, vec![k22]);
    }

    #[test]
    fn mixed_orders_rejected() {
        let p3 = FamilySpec::path(3).unwrap().build();
        let p4 = FamilySpec::path(4).unwrap().build();
        assert!(matches!(
            scan_path_max(&[p3, p4], 2),
            Err(Error::MixedOrders {
                expected: 3,
                found: 4,
                index: 1
            })
        ));
    }

    #[test]
    fn scan_bounds_trees_clean_and_sorted() {
        let corpus = enumerate_trees(7).unwrap();
        let ids = [BoundId::MerrisInterlacing, BoundId::MerrisHalfDiameter];
        let (reports, summary) = scan_bounds(&corpus, &ids, 2, 2).unwrap();
        assert_eq!(reports.len(), 22);
        assert!(reports.iter().all(|r| r.holds));
        assert!(summary.violations.is_empty());
        let keys: Vec<(&str, &str)> = reports
            .iter()
            .map(|r| (r.graph6.as_str(), r.bound_id.as_str()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(summary.conjecture_id, "lem2.3+thm2.6");
        assert_eq!(summary.n, Some(7));
    }

    #[test]
    fn scan_bounds_maps_structural_errors() {
        let corpus = enumerate_connected_graphs(4).unwrap();
        let (reports, summary) = scan_bounds(&corpus, &[BoundId::SkLowerTree], 2, 2).unwrap();
        assert_eq!(reports.len(), 6);
        let inapplicable = reports.iter().filter(|r| !r.applicable).count();
        assert_eq!(inapplicable, 4, "the non-trees among the 6 graphs");
        assert!(summary.violations.is_empty());
    }

    #[test]
    fn scan_bounds_reports_findings() {
        let c5 = FamilySpec::cycle(5).unwrap().build();
        let (reports, summary) = scan_bounds(&[c5], &[BoundId::LambdakFloor], 4, 2).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(!reports[0].holds && reports[0].applicable);
        assert_eq!(summary.violations.len(), 1);
        assert!(summary.violations[0].verified, "inertia agrees");
    }

    #[test]
    fn scan_bounds_deterministic() {
        let corpus = enumerate_connected_graphs(5).unwrap();
        let ids = [BoundId::Lambda2Diameter, BoundId::Lambda1Wiener];
        let a = scan_bounds(&corpus, &ids, 2, 2).unwrap();
        let b = scan_bounds(&corpus, &ids, 2, 2).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn corpus_from_str_validates() {
        let graphs = corpus_from_str(">>graph6<<\nBw\n\nCh\n").unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].n(), 4);

        let err = corpus_from_str("Bw\nB?\n").unwrap_err();
        match err {
            Error::CorpusLine { line, source } => {
                assert_eq!(line, 2);
                assert!(matches!(*source, Error::Disconnected { .. }));
            }
            other => panic!("unexpected error {other:?}"),
        }

        let err = corpus_from_str("Bw\nC\n").unwrap_err();
        assert!(matches!(err, Error::CorpusLine { line: 2, .. }));
    }

    #[test]
    fn empty_corpus_is_empty_summary() {
        let summary = scan_path_max(&[], 2).unwrap();
        assert_eq!(summary.corpus_size, 0);
        assert!(summary.extremal.is_none());
        assert!(summary.n.is_none());
    }
}
