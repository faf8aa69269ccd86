//! Dense symmetric eigensolver and graph spectra.
//!
//! Eigenvalues are computed by cyclic Jacobi rotations in fixed row-major
//! `(p, q)` order, stopping once the off-diagonal Frobenius norm drops to
//! `1e-12` times the initial Frobenius norm. The fixed sweep order makes
//! results bit-reproducible regardless of thread count. Only eigenvalues
//! are produced; no check in this crate needs eigenvectors.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative off-diagonal target for the Jacobi iteration.
pub const JACOBI_RELATIVE_TOL: f64 = 1e-12;
/// Maximum number of Jacobi sweeps before reporting non-convergence.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// A dense real symmetric matrix, stored row-major.
///
/// Constructors only ever write symmetric data, so symmetry holds exactly
/// rather than to a tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymMatrix {
    /// Zero matrix of dimension `n >= 1`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be positive");
        Self {
            n,
            a: vec![0.0; n * n],
        }
    }

    /// Builds a symmetric matrix from `f(i, j)`, evaluated once per
    /// unordered pair with the result mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                m.a[i * n + j] = x;
                m.a[j * n + i] = x;
            }
        }
        m
    }

    /// The distance matrix of a graph as floating-point data.
    pub fn from_distance(dm: &DistanceMatrix) -> Self {
        Self::from_fn(dm.n(), |i, j| dm.get(i, j) as f64)
    }

    /// The Laplacian `L = Deg - A` of a graph (connectivity not required).
    pub fn laplacian(g: &Graph) -> Self {
        Self::from_fn(g.n(), |i, j| {
            if i == j {
                g.degree(i) as f64
            } else {
                -f64::from(g.has_edge(i, j))
            }
        })
    }

    /// Dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.n && j < self.n);
        self.a[i * self.n + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.a
    }

    /// The principal submatrix indexed by `keep` (indices strictly
    /// increasing).
    pub fn principal_submatrix(&self, keep: &[usize]) -> SymMatrix {
        assert!(
            keep.windows(2).all(|w| w[0] < w[1]),
            "indices must increase"
        );
        assert!(!keep.is_empty() && *keep.last().unwrap() < self.n);
        SymMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]))
    }
}

/// Eigenvalues sorted descending, with the solver residual achieved.
///
/// `tol` bounds the eigenvalue error: it combines the final off-diagonal
/// Frobenius norm with the accumulated rounding of the rotations.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Wraps raw eigenvalues, sorting them descending.
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Self { values, tol }
    }

    /// Eigenvalues in descending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of eigenvalues.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Residual bound achieved by the solver (0-adjacent for closed forms).
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The `i`-th largest eigenvalue, 1-indexed to match the usual
    /// `lambda_1 >= lambda_2 >= ...` notation.
    pub fn lambda(&self, i: usize) -> f64 {
        assert!(
            (1..=self.values.len()).contains(&i),
            "eigenvalue index {i} out of range 1..={}",
            self.values.len()
        );
        self.values[i - 1]
    }

    /// Partial sum `S_k`: the sum of the `k` largest eigenvalues.
    pub fn sum_top_k(&self, k: usize) -> Result<f64> {
        if !(1..=self.values.len()).contains(&k) {
            return Err(Error::KOutOfRange {
                k,
                min: 1,
                max: self.values.len(),
            });
        }
        Ok(self.values[..k].iter().sum())
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        self.values.iter().filter(|&&v| v < x).count()
    }
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_frobenius(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p * n + q] * a[p * n + q];
            }
        }
    }
    s.sqrt()
}

/// Computes all eigenvalues of a symmetric matrix by cyclic Jacobi.
pub fn eig_symmetric(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.n();
    let mut a = m.entries().to_vec();
    let frob = frobenius(&a);
    let target = JACOBI_RELATIVE_TOL * frob;
    let mut off = off_frobenius(&a, n);
    let mut sweeps = 0usize;
    while off > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NonConvergence {
                sweeps,
                residual: off,
            });
        }
        // Elements below this threshold cannot keep the off-norm above the
        // target once every element is that small, so skipping them is safe
        // and avoids enormous rotation angles on denormal entries.
        let skip = target / (2.0 * n as f64);
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= skip {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    1.0 / (theta - (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                a[p * n + p] -= h;
                a[q * n + q] += h;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    let nip = aip - s * (aiq + tau * aip);
                    let niq = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = nip;
                    a[p * n + i] = nip;
                    a[i * n + q] = niq;
                    a[q * n + i] = niq;
                }
            }
        }
        sweeps += 1;
        off = off_frobenius(&a, n);
    }
    let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let tol = off + n as f64 * f64::EPSILON * frob;
    Ok(Spectrum::from_values(values, tol))
}

/// The distance spectrum of a connected graph.
pub fn distance_spectrum(g: &Graph) -> Result<Spectrum> {
    let dm = g.distance_matrix()?;
    eig_symmetric(&SymMatrix::from_distance(&dm))
}

/// The Laplacian spectrum `mu_1 >= ... >= mu_n = 0` of a graph.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eig_symmetric(&SymMatrix::laplacian(g))
}
