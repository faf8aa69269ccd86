//! Generators and closed-form spectra for the named extremal families.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::spectra::Spectrum;

/// Which named family a [`FamilySpec`] denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Complete,
    CompleteBipartite,
    Star,
    Path,
    Cycle,
}

impl FamilyKind {
    /// The lowercase name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Star => "star",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
        }
    }
}

/// A validated description of one family member: `K_n`, `K_{r,n-r}`,
/// `K_{1,n-1}`, `P_n`, or `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    kind: FamilyKind,
    n: usize,
    /// Smaller part size for bipartite kinds (1 for stars), otherwise 0.
    r: usize,
}

impl FamilySpec {
    fn check_order(kind: &'static str, n: usize, min: usize) -> Result<()> {
        if n < min || n > MAX_ORDER {
            return Err(Error::InvalidFamily {
                reason: format!("{kind} requires {min} <= n <= {MAX_ORDER}, got n = {n}"),
            });
        }
        Ok(())
    }

    /// The complete graph `K_n`, `n >= 1`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::check_order("complete", n, 1)?;
        Ok(Self {
            kind: FamilyKind::Complete,
            n,
            r: 0,
        })
    }

    /// The complete bipartite graph `K_{r,s}`; parts may come in any order
    /// and are normalized so that `r <= n - r`.
    pub fn complete_bipartite(r: usize, s: usize) -> Result<Self> {
        if r < 1 || s < 1 {
            return Err(Error::InvalidFamily {
                reason: format!("complete_bipartite requires both parts nonempty, got ({r}, {s})"),
            });
        }
        let n = r + s;
        Self::check_order("complete_bipartite", n, 2)?;
        Ok(Self {
            kind: FamilyKind::CompleteBipartite,
            n,
            r: r.min(s),
        })
    }

    /// The star `K_{1,n-1}`, `n >= 2`.
    pub fn star(n: usize) -> Result<Self> {
        Self::check_order("star", n, 2)?;
        Ok(Self {
            kind: FamilyKind::Star,
            n,
            r: 1,
        })
    }

    /// The path `P_n`, `n >= 1`.
    pub fn path(n: usize) -> Result<Self> {
        Self::check_order("path", n, 1)?;
        Ok(Self {
            kind: FamilyKind::Path,
            n,
            r: 0,
        })
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        Self::check_order("cycle", n, 3)?;
        Ok(Self {
            kind: FamilyKind::Cycle,
            n,
            r: 0,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Smaller part size for bipartite kinds.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Builds the graph with its canonical vertex labeling: paths and
    /// cycles in vertex order, bipartite graphs with `part1 = {0..r-1}`.
    pub fn build(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("order validated at construction");
        match self.kind {
            FamilyKind::Complete => {
                for u in 0..self.n {
                    for v in (u + 1)..self.n {
                        g.add_edge(u, v);
                    }
                }
            }
            FamilyKind::CompleteBipartite | FamilyKind::Star => {
                for u in 0..self.r {
                    for v in self.r..self.n {
                        g.add_edge(u, v);
                    }
                }
            }
            FamilyKind::Path => {
                for v in 1..self.n {
                    g.add_edge(v - 1, v);
                }
            }
            FamilyKind::Cycle => {
                for v in 1..self.n {
                    g.add_edge(v - 1, v);
                }
                g.add_edge(self.n - 1, 0);
            }
        }
        g
    }

    /// The exact distance spectrum, where a closed form exists.
    ///
    /// * `K_n`: `{n-1, (-1)^(n-1)}`.
    /// * `K_{r,s}` (stars included): the two roots of the equitable
    ///   quotient `[[2(r-1), s], [r, 2(s-1)]]` plus `-2` with multiplicity
    ///   `n - 2`; both roots exceed `-2`, so the sort order is immediate.
    /// * `C_n`: circulant eigenvalues `sum_j d(0,j) cos(2 pi jk / n)`.
    ///
    /// Paths have no closed form and yield [`Error::UnsupportedFamily`];
    /// use the eigensolver, with [`path_lambda1_approx`] as the asymptotic
    /// comparison point.
    pub fn closed_form_distance_spectrum(&self) -> Result<Spectrum> {
        let n = self.n;
        let nf = n as f64;
        let values = match self.kind {
            FamilyKind::Complete => {
                let mut v = vec![-1.0; n];
                v[0] = nf - 1.0;
                v
            }
            FamilyKind::CompleteBipartite | FamilyKind::Star => {
                let (r, s) = (self.r as f64, (n - self.r) as f64);
                let trace = 2.0 * (r + s - 2.0);
                let det = 4.0 * (r - 1.0) * (s - 1.0) - r * s;
                let disc = (trace * trace - 4.0 * det).sqrt();
                let mut v = vec![-2.0; n];
                v[0] = (trace + disc) / 2.0;
                v[1] = (trace - disc) / 2.0;
                v
            }
            FamilyKind::Cycle => (0..n)
                .map(|k| {
                    (1..n)
                        .map(|j| {
                            let d = j.min(n - j) as f64;
                            // Reduce jk mod n exactly before taking cos.
                            let angle = 2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / nf;
                            d * angle.cos()
                        })
                        .sum()
                })
                .collect(),
            FamilyKind::Path => {
                return Err(Error::UnsupportedFamily { kind: "path" });
            }
        };
        let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Ok(Spectrum::from_values(values, nf * f64::EPSILON * scale))
    }
}

/// The root `a` of `a tanh a = 1`, with the residual achieved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhRoot {
    pub a: f64,
    pub residual: f64,
}

/// Solves `a tanh a = 1` on `[1, 1.5]` by bisection followed by Newton
/// polishing, to residual at most `1e-12` (`a ≈ 1.199679`).
pub fn solve_tanh_root() -> TanhRoot {
    let f = |a: f64| a * a.tanh() - 1.0;
    let (mut lo, mut hi) = (1.0f64, 1.5f64);
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut a = 0.5 * (lo + hi);
    for _ in 0..4 {
        let sech = 1.0 / a.cosh();
        let derivative = a.tanh() + a * sech * sech;
        a -= f(a) / derivative;
    }
    TanhRoot {
        a,
        residual: f(a).abs(),
    }
}

/// Asymptotic approximation of the largest distance eigenvalue of `P_n`:
/// `n^2/(2a^2) - (2 + a^2)/(6a^2)` with `a` from [`solve_tanh_root`]. The
/// neglected term is `O(1/n^2)`.
pub fn path_lambda1_approx(n: usize) -> f64 {
    assert!(n >= 2, "path approximation needs n >= 2");
    let a2 = {
        let root = solve_tanh_root().a;
        root * root
    };
    let nf = n as f64;
    nf * nf / (2.0 * a2) - (2.0 + a2) / (6.0 * a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::encode_graph6;
    use crate::spectra::distance_spectrum;

    #[test]
    fn build_examples() {
        let k4 = FamilySpec::complete(4).unwrap().build();
        assert_eq!(k4.edge_count(), 6);
        let k23 = FamilySpec::complete_bipartite(2, 3).unwrap().build();
        assert_eq!(k23.edge_count(), 6);
        let p4 = FamilySpec::path(4).unwrap().build();
        assert_eq!(encode_graph6(&p4), "Ch");
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            FamilySpec::complete(0),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::cycle(2),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::star(1),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::complete_bipartite(0, 3),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            FamilySpec::path(513),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn bipartite_parts_normalize() {
        let a = FamilySpec::complete_bipartite(4, 2).unwrap();
        let b = FamilySpec::complete_bipartite(2, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.r(), 2);
    }

    #[test]
    fn closed_form_k33_lambda2() {
        let spec = FamilySpec::complete_bipartite(3, 3).unwrap();
        let s = spec.closed_form_distance_spectrum().unwrap();
        assert!((s.lambda(2) - 1.0).abs() <= 1e-12, "n/2 - 2 = 1 for n = 6");
        assert!((s.lambda(1) - 7.0).abs() <= 1e-12);
    }

    #[test]
    fn closed_form_star_s2() {
        let spec = FamilySpec::star(6).unwrap();
        let s = spec.closed_form_distance_spectrum().unwrap();
        assert!((s.sum_top_k(2).unwrap() - 8.0).abs() <= 1e-12, "2n - 4 = 8");
    }

    #[test]
    fn closed_form_c4() {
        let spec = FamilySpec::cycle(4).unwrap();
        let s = spec.closed_form_distance_spectrum().unwrap();
        let expected = [4.0, 0.0, -2.0, -2.0];
        for (v, e) in s.values().iter().zip(&expected) {
            assert!((v - e).abs() <= 1e-12);
        }
    }

    #[test]
    fn paths_have_no_closed_form() {
        let spec = FamilySpec::path(5).unwrap();
        assert!(matches!(
            spec.closed_form_distance_spectrum(),
            Err(Error::UnsupportedFamily { kind: "path" })
        ));
    }

    #[test]
    fn closed_forms_match_solver_at_small_order() {
        for spec in [
            FamilySpec::complete(7).unwrap(),
            FamilySpec::complete_bipartite(2, 5).unwrap(),
            FamilySpec::star(8).unwrap(),
            FamilySpec::cycle(7).unwrap(),
            FamilySpec::cycle(8).unwrap(),
        ] {
            let closed = spec.closed_form_distance_spectrum().unwrap();
            let solved = distance_spectrum(&spec.build()).unwrap();
            for (c, s) in closed.values().iter().zip(solved.values()) {
                assert!((c - s).abs() <= 1e-10, "{spec:?}: {c} vs {s}");
            }
        }
    }

    #[test]
    fn tanh_root_matches_reference() {
        let root = solve_tanh_root();
        assert!(root.residual <= 1e-12);
        assert!((root.a - 1.199679).abs() <= 5e-7);
        // Sign bracket used by the bisection.
        assert!(1f64.tanh() - 1.0 < 0.0);
        assert!(1.5f64 * 1.5f64.tanh() - 1.0 > 0.0);
    }

    #[test]
    fn path_approx_examples() {
        let approx100 = path_lambda1_approx(100);
        assert!((approx100 - 3473.68).abs() < 0.05, "got {approx100}");
        // Exact lambda_1(D(P4)) = 2 + sqrt(10); the approximation error is
        // the O(1/n^2) remainder, well under 0.25 already at n = 4.
        let exact4 = 2.0 + 10f64.sqrt();
        assert!((path_lambda1_approx(4) - exact4).abs() < 0.25);
    }
}
