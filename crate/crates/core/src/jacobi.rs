//! Cyclic Jacobi eigendecomposition for symmetric matrices.
//!
//! Plain full sweeps over the strict upper triangle. The stopping rule is
//! an off-diagonal Frobenius norm below 1e-13 with a hard cap of 100
//! sweeps, which is far more than quadratic convergence needs at the sizes
//! this crate handles (n <= 64).

use crate::error::{Error, Result};

const OFF_DIAGONAL_THRESHOLD: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    /// Column-major orthonormal eigenvectors; column `k` (entries
    /// `vectors[k*n..(k+1)*n]`) pairs with `values[k]`.
    pub vectors: Vec<f64>,
    pub n: usize,
}

impl SymEigen {
    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }
}

/// Diagonalizes a symmetric matrix given as a flat row-major slice.
pub fn symmetric_eigen(a: &[f64], n: usize) -> Result<SymEigen> {
    assert_eq!(a.len(), n * n, "flat matrix must be n*n");
    let mut m = a.to_vec();
    // Column-major accumulator; starts as the identity.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let off = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += m[p * n + q] * m[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&m) < OFF_DIAGONAL_THRESHOLD {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // Classic two-angle rotation choice (Numerical-Recipes
                // parameterization): tan of the rotation from the stable
                // quadratic root.
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[p * n + k];
                    let vkq = v[q * n + k];
                    v[p * n + k] = c * vkp - s * vkq;
                    v[q * n + k] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off(&m) >= OFF_DIAGONAL_THRESHOLD {
        return Err(Error::Numeric(format!(
            "Jacobi sweep cap reached with off-diagonal norm {:.3e}",
            off(&m)
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (dst, &src) in order.iter().enumerate() {
        vectors[dst * n..(dst + 1) * n].copy_from_slice(&v[src * n..(src + 1) * n]);
    }
    Ok(SymEigen { values, vectors, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let e = symmetric_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-12);
        assert!((e.values[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn reconstructs_input() {
        let a = [4.0, 1.0, -2.0, 1.0, 2.0, 0.0, -2.0, 0.0, 3.0];
        let e = symmetric_eigen(&a, 3).unwrap();
        // sum_k lambda_k v_k v_k^T == A
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += e.values[k] * e.vector(k)[i] * e.vector(k)[j];
                }
                assert!((s - a[i * 3 + j]).abs() < 1e-10, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn orthonormal_vectors() {
        let a: Vec<f64> = (0..16)
            .map(|k| {
                let (i, j) = (k / 4, k % 4);
                ((i * j) as f64).sin() + if i == j { 2.0 } else { 0.0 }
            })
            .collect();
        // Symmetrize explicitly.
        let mut s = a.clone();
        for i in 0..4 {
            for j in 0..4 {
                s[i * 4 + j] = 0.5 * (a[i * 4 + j] + a[j * 4 + i]);
            }
        }
        let e = symmetric_eigen(&s, 4).unwrap();
        for p in 0..4 {
            for q in 0..4 {
                let dot: f64 = (0..4).map(|i| e.vector(p)[i] * e.vector(q)[i]).sum();
                let expect = if p == q { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-12);
            }
        }
    }
}
