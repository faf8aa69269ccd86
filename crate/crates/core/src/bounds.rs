//! The bound catalog: pure checks of spectral inequalities, each keyed by a
//! stable identifier string and producing a [`BoundReport`].
//!
//! Every check orients its slack so that `slack >= 0` means the inequality
//! holds; `holds` applies the shared tolerance [`crate::HOLDS_TOL`] and
//! `equality` the tighter [`crate::EQUALITY_TOL`]. Checks whose inequality is
//! strict by statement never set `equality`; they record the margin in the
//! separate `strict` field instead. Checks are pure: a report depends only on
//! the graph and the parameters, so batches parallelize freely.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, TwoColor};
use crate::graph6::encode_graph6;
use crate::independence::independence_number;
use crate::spectra::{distance_spectrum, eig_symmetric, laplacian_spectrum, Spectrum, SymMatrix};
use crate::{EQUALITY_TOL, HOLDS_TOL};

/// Stable identifier of one catalog entry. The string forms returned by
/// [`BoundId::as_str`] are the external interface used in report files and
/// on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundId {
    /// `S_k(D) >= n - k` for connected graphs; equality class `K_n`.
    SkLowerGeneral,
    /// `S_k(D) >= 2n - 2k` for trees; equality class the star.
    SkLowerTree,
    /// `lambda_2(D) <= n(d-1)/2 - d`.
    Lambda2Diameter,
    /// `lambda_2(D) < 3 s^3 t(G) / m` under an independence cap.
    Lambda2Triangles,
    /// `lambda_2(D) < t(G)` for `alpha <= 2`, `n >= 11`.
    Lambda2TrianglesT,
    /// `S_k(D(G)) < S_k(D(P_n))` for small-diameter graphs.
    PathDominance,
    /// The interlacing chain between `-2/mu_i` and `lambda_i(D)` on trees.
    MerrisInterlacing,
    /// `lambda_{floor(d/2)}(D(T)) > -1` on trees of diameter at least 2.
    MerrisHalfDiameter,
    /// `lambda_1(D) <= sqrt(A B)` with degree/diameter terms A, B.
    ZhouIlic,
    /// Report-mode floor `lambda_k(D) >= -2`.
    LambdakFloor,
    /// `lambda_1(D) >= 2(n^2 + (r-1)n - r^2 - 2m)/n` on bipartite graphs.
    BipartiteLambda1,
    /// `lambda_1(D) >= 2W/n`; equality class transmission-regular graphs.
    Lambda1Wiener,
    /// Independence/triangle chain behind the `lambda_2` triangle bounds.
    TuranChain,
    /// `lambda_k(D) >= -2` for orders at or above the Ramsey–Moore threshold.
    MooreThreshold,
}

impl BoundId {
    /// Every catalog entry, in catalog order.
    pub const ALL: [BoundId; 14] = [
        BoundId::SkLowerGeneral,
        BoundId::SkLowerTree,
        BoundId::Lambda2Diameter,
        BoundId::Lambda2Triangles,
        BoundId::Lambda2TrianglesT,
        BoundId::PathDominance,
        BoundId::MerrisInterlacing,
        BoundId::MerrisHalfDiameter,
        BoundId::ZhouIlic,
        BoundId::LambdakFloor,
        BoundId::BipartiteLambda1,
        BoundId::Lambda1Wiener,
        BoundId::TuranChain,
        BoundId::MooreThreshold,
    ];

    /// The stable string key.
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::SkLowerGeneral => "thm1.2i",
            BoundId::SkLowerTree => "thm1.2ii",
            BoundId::Lambda2Diameter => "thm1.3",
            BoundId::Lambda2Triangles => "thm1.4i",
            BoundId::Lambda2TrianglesT => "thm1.4ii",
            BoundId::PathDominance => "prop1.5",
            BoundId::MerrisInterlacing => "lem2.3",
            BoundId::MerrisHalfDiameter => "thm2.6",
            BoundId::ZhouIlic => "thm2.7",
            BoundId::LambdakFloor => "lem-lk-2",
            BoundId::BipartiteLambda1 => "lem3.1",
            BoundId::Lambda1Wiener => "lambda1-wiener",
            BoundId::TuranChain => "turan-chain",
            BoundId::MooreThreshold => "moore-threshold",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownBoundId { id: s.to_owned() })
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BoundId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of one bound check on one graph.
///
/// Serialized field order is the report-file schema; the trailing
/// `#[serde(skip)]` fields are in-memory enrichments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph6: String,
    pub n: usize,
    pub bound_id: BoundId,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: bool,
    pub equality: bool,
    pub applicable: bool,
    /// For strict-by-statement bounds: whether the margin exceeded the
    /// equality tolerance. `None` on non-strict bounds.
    #[serde(skip)]
    pub strict: Option<bool>,
    /// Whether the graph lies in the bound's characterized equality class,
    /// where one is known.
    #[serde(skip)]
    pub in_equality_class: Option<bool>,
    /// Order threshold above which the k-th eigenvalue floor is guaranteed.
    #[serde(skip)]
    pub threshold_n0: Option<BigUint>,
}

impl BoundReport {
    fn evaluated(
        g: &Graph,
        bound_id: BoundId,
        k: Option<usize>,
        s: Option<usize>,
        lhs: f64,
        rhs: f64,
        slack: f64,
    ) -> Self {
        let holds = slack >= -HOLDS_TOL;
        Self {
            graph6: encode_graph6(g),
            n: g.n(),
            bound_id,
            k,
            s,
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            holds,
            equality: holds && slack.abs() <= EQUALITY_TOL,
            applicable: true,
            strict: None,
            in_equality_class: None,
            threshold_n0: None,
        }
    }

    fn evaluated_strict(
        g: &Graph,
        bound_id: BoundId,
        k: Option<usize>,
        s: Option<usize>,
        lhs: f64,
        rhs: f64,
        slack: f64,
    ) -> Self {
        let mut report = Self::evaluated(g, bound_id, k, s, lhs, rhs, slack);
        report.strict = Some(slack > EQUALITY_TOL);
        report.equality = false;
        report
    }

    /// A vacuous report for a graph outside the bound's precondition:
    /// no values, `holds` true, `equality` false.
    pub(crate) fn inapplicable(
        g: &Graph,
        bound_id: BoundId,
        k: Option<usize>,
        s: Option<usize>,
    ) -> Self {
        Self {
            graph6: encode_graph6(g),
            n: g.n(),
            bound_id,
            k,
            s,
            lhs: None,
            rhs: None,
            slack: None,
            holds: true,
            equality: false,
            applicable: false,
            strict: None,
            in_equality_class: None,
            threshold_n0: None,
        }
    }
}

/// Exact small diagonal Ramsey numbers with a binomial upper-bound fallback.
pub struct RamseyTable;

impl RamseyTable {
    /// Exact values of `R(t,t)` for `t = 1..=4`.
    pub const EXACT_DIAGONAL: [u64; 4] = [1, 2, 6, 18];

    /// `R(t,t)`: exact for `t <= 4`, otherwise the upper bound
    /// `C(2t-2, t-1)` marked as inexact.
    pub fn diagonal(t: usize) -> RamseyValue {
        assert!(t >= 1, "diagonal Ramsey numbers start at t = 1");
        if t <= Self::EXACT_DIAGONAL.len() {
            RamseyValue {
                value: BigUint::from(Self::EXACT_DIAGONAL[t - 1]),
                exact: true,
            }
        } else {
            RamseyValue {
                value: binomial(2 * t as u64 - 2, t as u64 - 1),
                exact: false,
            }
        }
    }
}

/// A diagonal Ramsey number, or an upper bound for it when `exact` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyValue {
    pub value: BigUint,
    pub exact: bool,
}

/// `C(n, k)` exactly; the running product stays integral at every step.
fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Sufficiency threshold for the k-th eigenvalue floor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreThreshold {
    /// Degree parameter `l = R(k-1, k-1) - 1`.
    pub l: BigUint,
    /// Diameter parameter `d = 2k`.
    pub d: usize,
    /// Orders `n >= n0` guarantee `lambda_k(D) >= -2`.
    pub n0: BigUint,
    /// Whether `l` came from an exact Ramsey value (`k <= 5`) rather than
    /// the binomial upper bound.
    pub exact: bool,
}

/// Computes `n0 = 1 + sum_{i=0}^{d-1} l (l-1)^i` with `l = R(k-1,k-1) - 1`
/// and `d = 2k`. Requires `k >= 2`.
pub fn moore_threshold(k: usize) -> MooreThreshold {
    assert!(k >= 2, "threshold defined for k >= 2");
    let ramsey = RamseyTable::diagonal(k - 1);
    let l = ramsey.value - 1u32;
    let d = 2 * k;
    let mut n0 = BigUint::from(1u32);
    if l != BigUint::from(0u32) {
        let l_minus_1 = &l - 1u32;
        let mut power = BigUint::from(1u32);
        for _ in 0..d {
            n0 += &l * &power;
            power *= &l_minus_1;
        }
    }
    MooreThreshold {
        l,
        d,
        n0,
        exact: ramsey.exact,
    }
}

/// Distance matrix plus its spectrum; the common preamble of most checks.
fn distance_data(g: &Graph) -> Result<(DistanceMatrix, Spectrum)> {
    let dm = g.distance_matrix()?;
    let spectrum = eig_symmetric(&SymMatrix::from_distance(&dm))?;
    Ok((dm, spectrum))
}

fn require_k(k: usize, min: usize, n: usize) -> Result<()> {
    if k < min || k > n {
        return Err(Error::KOutOfRange { k, min, max: n });
    }
    Ok(())
}

/// Tracks the tightest comparison `lhs >= rhs` seen so far; the first
/// minimum encountered wins ties, keeping reports deterministic.
struct MinSlack {
    slack: f64,
    lhs: f64,
    rhs: f64,
}

impl MinSlack {
    fn new() -> Self {
        Self {
            slack: f64::INFINITY,
            lhs: f64::NAN,
            rhs: f64::NAN,
        }
    }

    fn observe(&mut self, lhs: f64, rhs: f64) {
        let slack = lhs - rhs;
        if slack < self.slack {
            *self = Self { slack, lhs, rhs };
        }
    }
}

/// `thm1.2i`: `S_k(D) >= n - k` on connected graphs, `2 <= k <= n`;
/// equality class `K_n`.
pub fn check_sk_lower_general(g: &Graph, k: usize) -> Result<BoundReport> {
    let n = g.n();
    require_k(k, 2, n)?;
    let spectrum = distance_spectrum(g)?;
    let lhs = spectrum.sum_top_k(k)?;
    let rhs = (n - k) as f64;
    let mut report = BoundReport::evaluated(
        g,
        BoundId::SkLowerGeneral,
        Some(k),
        None,
        lhs,
        rhs,
        lhs - rhs,
    );
    report.in_equality_class = Some(g.is_complete());
    Ok(report)
}

/// `thm1.2ii`: `S_k(D) >= 2n - 2k` on trees, `2 <= k <= n`; equality class
/// the star.
pub fn check_sk_lower_tree(g: &Graph, k: usize) -> Result<BoundReport> {
    if !g.is_tree() {
        return Err(Error::NotATree {
            n: g.n(),
            m: g.edge_count(),
        });
    }
    let n = g.n();
    require_k(k, 2, n)?;
    let spectrum = distance_spectrum(g)?;
    let lhs = spectrum.sum_top_k(k)?;
    let rhs = (2 * (n - k)) as f64;
    let mut report =
        BoundReport::evaluated(g, BoundId::SkLowerTree, Some(k), None, lhs, rhs, lhs - rhs);
    report.in_equality_class = Some(g.is_star());
    Ok(report)
}

/// `thm1.3`: `lambda_2(D) <= n(d-1)/2 - d`; equality class `K_n` and the
/// balanced complete bipartite graph. Inapplicable below order 2.
pub fn check_lambda2_diameter(g: &Graph) -> Result<BoundReport> {
    let (dm, spectrum) = distance_data(g)?;
    let n = g.n();
    if n < 2 {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::Lambda2Diameter,
            None,
            None,
        ));
    }
    let d = dm.diameter() as f64;
    let lhs = spectrum.lambda(2);
    let rhs = n as f64 * (d - 1.0) / 2.0 - d;
    let mut report =
        BoundReport::evaluated(g, BoundId::Lambda2Diameter, None, None, lhs, rhs, rhs - lhs);
    report.in_equality_class = Some(g.is_complete() || g.is_balanced_complete_bipartite());
    Ok(report)
}

/// `thm1.4i`: strict bound `lambda_2(D) < 3 s^3 t(G) / m`, applicable when
/// `alpha(G) <= s` and `n > s^3 + s^2 - 2s + 1`.
///
/// The independence precondition is decidable only up to the independence
/// solver's order cap; larger graphs yield that solver's error.
pub fn check_lambda2_triangles(g: &Graph, s: usize) -> Result<BoundReport> {
    let n = g.n();
    let su = s as u128;
    let threshold = su * su * su + su * su + 1 - 2 * su;
    if n as u128 <= threshold {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::Lambda2Triangles,
            None,
            Some(s),
        ));
    }
    if independence_number(g)? > s {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::Lambda2Triangles,
            None,
            Some(s),
        ));
    }
    let spectrum = distance_spectrum(g)?;
    let lhs = spectrum.lambda(2);
    let rhs = 3.0 * (s * s * s) as f64 * g.triangle_count() as f64 / g.edge_count() as f64;
    Ok(BoundReport::evaluated_strict(
        g,
        BoundId::Lambda2Triangles,
        None,
        Some(s),
        lhs,
        rhs,
        rhs - lhs,
    ))
}

/// `thm1.4ii`: strict bound `lambda_2(D) < t(G)`, applicable when
/// `alpha(G) <= 2` and `n >= 11`.
pub fn check_lambda2_triangles_t(g: &Graph) -> Result<BoundReport> {
    let n = g.n();
    if n < 11 {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::Lambda2TrianglesT,
            None,
            Some(2),
        ));
    }
    if independence_number(g)? > 2 {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::Lambda2TrianglesT,
            None,
            Some(2),
        ));
    }
    let spectrum = distance_spectrum(g)?;
    let lhs = spectrum.lambda(2);
    let rhs = g.triangle_count() as f64;
    Ok(BoundReport::evaluated_strict(
        g,
        BoundId::Lambda2TrianglesT,
        None,
        Some(2),
        lhs,
        rhs,
        rhs - lhs,
    ))
}

/// `turan-chain`: the counting chain underlying the triangle bounds.
///
/// Always checks (a) `alpha >= n / (1 + mean degree)`. When
/// `alpha(G) <= s`, additionally checks (b) per vertex
/// `t(G,u) >= (d(u)^2 - s d(u)) / (2s)` and (c) the summed form
/// `3 t(G) >= sum_v (d(v)^2 - s d(v)) / (2s)`. The report carries the
/// tightest sub-inequality.
pub fn check_turan_chain(g: &Graph, s: usize) -> Result<BoundReport> {
    let n = g.n();
    let alpha = independence_number(g)?;
    let m = g.edge_count();
    let mut min = MinSlack::new();
    min.observe(alpha as f64, (n * n) as f64 / (n + 2 * m) as f64);
    if s >= 1 && alpha <= s {
        let two_s = (2 * s) as f64;
        let degrees = g.degrees();
        for (u, &du) in degrees.iter().enumerate() {
            let du = du as i64;
            let rhs = (du * du - s as i64 * du) as f64 / two_s;
            min.observe(g.triangle_count_at(u) as f64, rhs);
        }
        let sum_sq: i64 = degrees.iter().map(|&d| (d as i64) * (d as i64)).sum();
        let rhs = (sum_sq - s as i64 * 2 * m as i64) as f64 / two_s;
        min.observe(3.0 * g.triangle_count() as f64, rhs);
    }
    Ok(BoundReport::evaluated(
        g,
        BoundId::TuranChain,
        None,
        Some(s),
        min.lhs,
        min.rhs,
        min.slack,
    ))
}

/// `prop1.5`: strict bound `S_k(D(G)) < S_k(D(P_n))`, applicable when
/// `3(k+2) d < 2n`.
pub fn check_path_dominance(g: &Graph, k: usize) -> Result<BoundReport> {
    let n = g.n();
    require_k(k, 1, n)?;
    let dm = g.distance_matrix()?;
    let d = dm.diameter() as u64;
    if 3 * (k as u64 + 2) * d >= 2 * n as u64 {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::PathDominance,
            Some(k),
            None,
        ));
    }
    let spectrum = eig_symmetric(&SymMatrix::from_distance(&dm))?;
    let lhs = spectrum.sum_top_k(k)?;
    let path = FamilySpec::path(n)
        .expect("order fits the path family")
        .build();
    let rhs = distance_spectrum(&path)?.sum_top_k(k)?;
    Ok(BoundReport::evaluated_strict(
        g,
        BoundId::PathDominance,
        Some(k),
        None,
        lhs,
        rhs,
        rhs - lhs,
    ))
}

/// `lambda1-wiener`: `lambda_1(D) >= 2W/n`; equality class the
/// transmission-regular graphs.
pub fn check_lambda1_wiener(g: &Graph) -> Result<BoundReport> {
    let (dm, spectrum) = distance_data(g)?;
    let lhs = spectrum.lambda(1);
    let rhs = 2.0 * dm.wiener() as f64 / g.n() as f64;
    let mut report =
        BoundReport::evaluated(g, BoundId::Lambda1Wiener, None, None, lhs, rhs, lhs - rhs);
    report.in_equality_class = Some(dm.is_transmission_regular());
    Ok(report)
}

/// `lem3.1`: on connected bipartite graphs with smaller part size `r`,
/// `lambda_1(D) >= 2(n^2 + (r-1)n - r^2 - 2m)/n`.
pub fn check_bipartite_lambda1(g: &Graph) -> Result<BoundReport> {
    let bipartition = match g.two_color()? {
        TwoColor::Classes(b) => b,
        TwoColor::OddEdge(u, v) => return Err(Error::NotBipartite { u, v }),
    };
    let spectrum = distance_spectrum(g)?;
    let n = g.n() as f64;
    let r = bipartition.r() as f64;
    let m = g.edge_count() as f64;
    let lhs = spectrum.lambda(1);
    let rhs = 2.0 * (n * n + (r - 1.0) * n - r * r - 2.0 * m) / n;
    let mut report = BoundReport::evaluated(
        g,
        BoundId::BipartiteLambda1,
        None,
        None,
        lhs,
        rhs,
        lhs - rhs,
    );
    report.in_equality_class = Some(g.is_balanced_complete_bipartite());
    Ok(report)
}

/// `lem2.3`: on a tree, the interleaved chain
/// `0 > -2/mu_1 >= lambda_2 >= -2/mu_2 >= lambda_3 >= ... >= lambda_n`
/// linking Laplacian and distance eigenvalues.
///
/// The head comparison `-2/mu_1` vs `lambda_2` is stated strictly but
/// admits numerical equality; it is tested non-strictly here and the
/// `strict` field records whether a genuine margin was observed. The
/// report carries the tightest link of the chain.
pub fn check_merris_interlacing(g: &Graph) -> Result<BoundReport> {
    if !g.is_tree() {
        return Err(Error::NotATree {
            n: g.n(),
            m: g.edge_count(),
        });
    }
    let n = g.n();
    if n < 2 {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::MerrisInterlacing,
            None,
            None,
        ));
    }
    let dist = distance_spectrum(g)?;
    let lap = laplacian_spectrum(g)?;
    let mut chain = Vec::with_capacity(2 * n - 1);
    chain.push(0.0);
    for i in 1..n {
        chain.push(-2.0 / lap.lambda(i));
        chain.push(dist.lambda(i + 1));
    }
    let mut min = MinSlack::new();
    for pair in chain.windows(2) {
        min.observe(pair[0], pair[1]);
    }
    let head_slack = chain[1] - chain[2];
    let mut report = BoundReport::evaluated(
        g,
        BoundId::MerrisInterlacing,
        None,
        None,
        min.lhs,
        min.rhs,
        min.slack,
    );
    report.strict = Some(head_slack > EQUALITY_TOL);
    Ok(report)
}

/// `thm2.6`: on a tree of diameter `d >= 2`, the strict bound
/// `lambda_{floor(d/2)}(D) > -1`.
pub fn check_merris_half_diameter(g: &Graph) -> Result<BoundReport> {
    if !g.is_tree() {
        return Err(Error::NotATree {
            n: g.n(),
            m: g.edge_count(),
        });
    }
    let dm = g.distance_matrix()?;
    let d = dm.diameter() as usize;
    if d < 2 {
        return Ok(BoundReport::inapplicable(
            g,
            BoundId::MerrisHalfDiameter,
            None,
            None,
        ));
    }
    let spectrum = eig_symmetric(&SymMatrix::from_distance(&dm))?;
    let lhs = spectrum.lambda(d / 2);
    Ok(BoundReport::evaluated_strict(
        g,
        BoundId::MerrisHalfDiameter,
        None,
        None,
        lhs,
        -1.0,
        lhs + 1.0,
    ))
}

/// `thm2.7`: `lambda_1(D) <= sqrt(A B)` where
/// `A = dn - d(d-1)/2 - 1 - delta_1 (d-1)` with `delta_1` the smallest
/// degree and `B` likewise with the second-smallest. Equality class:
/// regular graphs of diameter at most 2. Inapplicable below order 2.
pub fn check_zhou_ilic(g: &Graph) -> Result<BoundReport> {
    let (dm, spectrum) = distance_data(g)?;
    let n = g.n();
    if n < 2 {
        return Ok(BoundReport::inapplicable(g, BoundId::ZhouIlic, None, None));
    }
    let d = dm.diameter() as i64;
    let stats = g.degree_stats()?;
    let base = d * n as i64 - d * (d - 1) / 2 - 1;
    let a = (base - stats.min as i64 * (d - 1)) as f64;
    let b = (base - stats.second_min as i64 * (d - 1)) as f64;
    debug_assert!(a > 0.0 && b > 0.0, "transmission bounds are positive");
    let lhs = spectrum.lambda(1);
    let rhs = (a * b).sqrt();
    let mut report = BoundReport::evaluated(g, BoundId::ZhouIlic, None, None, lhs, rhs, rhs - lhs);
    report.in_equality_class = Some(stats.max == stats.min && d <= 2);
    Ok(report)
}

/// `lem-lk-2`: the floor `lambda_k(D) >= -2`, checked in report mode:
/// the guarantee only applies to sufficiently large orders, so a failing
/// comparison is a recorded finding, not an error. The Ramsey–Moore
/// sufficiency threshold is attached for context.
pub fn check_lambdak_floor(g: &Graph, k: usize) -> Result<BoundReport> {
    require_k(k, 2, g.n())?;
    let spectrum = distance_spectrum(g)?;
    let lhs = spectrum.lambda(k);
    let mut report = BoundReport::evaluated(
        g,
        BoundId::LambdakFloor,
        Some(k),
        None,
        lhs,
        -2.0,
        lhs + 2.0,
    );
    report.threshold_n0 = Some(moore_threshold(k).n0);
    Ok(report)
}

/// `moore-threshold` as a per-graph check: applicable exactly when the
/// order reaches the sufficiency threshold `n0(k)`, where the floor
/// `lambda_k(D) >= -2` is guaranteed.
pub fn check_moore_lambdak(g: &Graph, k: usize) -> Result<BoundReport> {
    require_k(k, 2, g.n())?;
    let threshold = moore_threshold(k);
    if BigUint::from(g.n()) < threshold.n0 {
        let mut report = BoundReport::inapplicable(g, BoundId::MooreThreshold, Some(k), None);
        report.threshold_n0 = Some(threshold.n0);
        return Ok(report);
    }
    let spectrum = distance_spectrum(g)?;
    let lhs = spectrum.lambda(k);
    let mut report = BoundReport::evaluated(
        g,
        BoundId::MooreThreshold,
        Some(k),
        None,
        lhs,
        -2.0,
        lhs + 2.0,
    );
    report.threshold_n0 = Some(threshold.n0);
    Ok(report)
}

/// Runs the catalog entry `id` with parameters `k` and `s`, ignoring
/// whichever parameter the bound does not use.
pub fn check_by_id(id: BoundId, g: &Graph, k: usize, s: usize) -> Result<BoundReport> {
    match id {
        BoundId::SkLowerGeneral => check_sk_lower_general(g, k),
        BoundId::SkLowerTree => check_sk_lower_tree(g, k),
        BoundId::Lambda2Diameter => check_lambda2_diameter(g),
        BoundId::Lambda2Triangles => check_lambda2_triangles(g, s),
        BoundId::Lambda2TrianglesT => check_lambda2_triangles_t(g),
        BoundId::PathDominance => check_path_dominance(g, k),
        BoundId::MerrisInterlacing => check_merris_interlacing(g),
        BoundId::MerrisHalfDiameter => check_merris_half_diameter(g),
        BoundId::ZhouIlic => check_zhou_ilic(g),
        BoundId::LambdakFloor => check_lambdak_floor(g, k),
        BoundId::BipartiteLambda1 => check_bipartite_lambda1(g),
        BoundId::Lambda1Wiener => check_lambda1_wiener(g),
        BoundId::TuranChain => check_turan_chain(g, s),
        BoundId::MooreThreshold => check_moore_lambdak(g, k),
    }
}
