//! Matrix inertia via LDL^T factorization with Bunch-Kaufman pivoting.
//!
//! This path shares no code with the Jacobi solver and serves as an
//! independent oracle: by Sylvester's law of inertia, the number of negative
//! pivots of `A - xI = L D L^T` equals the number of eigenvalues of `A`
//! strictly below `x` (provided `x` is not itself an eigenvalue).

use crate::error::{Error, Result};
use crate::spectra::SymMatrix;

/// Counts the eigenvalues of `a` strictly below `x`.
///
/// Factorizes `a - xI` with symmetric 1x1/2x2 Bunch-Kaufman pivoting and
/// counts negative pivot blocks. Errors with [`Error::ZeroPivot`] when the
/// factorization hits an exactly singular pivot, which signals that `x`
/// lies on an eigenvalue; the caller should perturb `x` by around `1e-9`.
pub fn inertia_below(a: &SymMatrix, x: f64) -> Result<usize> {
    let n = a.n();
    let mut m = a.entries().to_vec();
    for i in 0..n {
        m[i * n + i] -= x;
    }
    // Bunch-Kaufman threshold minimizing worst-case element growth.
    let alpha = (1.0 + 17f64.sqrt()) / 8.0;
    let mut negatives = 0usize;
    let mut k = 0usize;
    while k < n {
        // omega1 = |m[r][k]|: largest subdiagonal magnitude in column k.
        let (r, omega1) = (k + 1..n)
            .map(|i| (i, m[i * n + k].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap_or((k, 0.0));
        let akk = m[k * n + k].abs();
        let use_2x2 = if omega1 == 0.0 || akk >= alpha * omega1 {
            false
        } else {
            // omega_r: largest off-diagonal magnitude in column r (among
            // active rows), excluding the (r, r) entry itself.
            let omega_r = (k..n)
                .filter(|&i| i != r)
                .map(|i| m[i * n + r].abs())
                .fold(0.0f64, f64::max);
            if akk * omega_r >= alpha * omega1 * omega1 {
                false
            } else if m[r * n + r].abs() >= alpha * omega_r {
                swap_sym(&mut m, n, k, r);
                false
            } else {
                swap_sym(&mut m, n, k + 1, r);
                true
            }
        };
        if use_2x2 {
            let a11 = m[k * n + k];
            let a21 = m[(k + 1) * n + k];
            let a22 = m[(k + 1) * n + k + 1];
            let det = a11 * a22 - a21 * a21;
            if det == 0.0 {
                return Err(Error::ZeroPivot { index: k });
            }
            if det < 0.0 {
                // Indefinite 2x2 block: one eigenvalue of each sign.
                negatives += 1;
            } else if a11 + a22 < 0.0 {
                negatives += 2;
            }
            let (i11, i12, i22) = (a22 / det, -a21 / det, a11 / det);
            for i in k + 2..n {
                let c1 = m[i * n + k];
                let c2 = m[i * n + k + 1];
                let w1 = c1 * i11 + c2 * i12;
                let w2 = c1 * i12 + c2 * i22;
                for j in k + 2..=i {
                    let upd = w1 * m[j * n + k] + w2 * m[j * n + k + 1];
                    m[i * n + j] -= upd;
                    m[j * n + i] = m[i * n + j];
                }
            }
            k += 2;
        } else {
            let pivot = m[k * n + k];
            if pivot == 0.0 {
                return Err(Error::ZeroPivot { index: k });
            }
            if pivot < 0.0 {
                negatives += 1;
            }
            for i in k + 1..n {
                let factor = m[i * n + k] / pivot;
                for j in k + 1..=i {
                    m[i * n + j] -= factor * m[j * n + k];
                    m[j * n + i] = m[i * n + j];
                }
            }
            k += 1;
        }
    }
    Ok(negatives)
}

/// [`inertia_below`] with the documented perturbation fallback: retries at
/// `x - 1e-9` and `x + 1e-9` when the factorization lands on a zero pivot.
pub fn inertia_below_perturbing(a: &SymMatrix, x: f64) -> Result<usize> {
    for shift in [x, x - 1e-9, x + 1e-9] {
        match inertia_below(a, shift) {
            Err(Error::ZeroPivot { .. }) => continue,
            other => return other,
        }
    }
    Err(Error::ZeroPivot { index: 0 })
}

/// Swaps rows and columns `i` and `j` of a symmetric matrix in place.
fn swap_sym(m: &mut [f64], n: usize, i: usize, j: usize) {
    if i == j {
        return;
    }
    for col in 0..n {
        m.swap(i * n + col, j * n + col);
    }
    for row in 0..n {
        m.swap(row * n + i, row * n + j);
    }
}
