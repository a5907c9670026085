//! Walk matrices and main-eigenvalue counts.
//!
//! The walk matrix of an `m x m` matrix `M` is `[e, Me, ..., M^{m-1}e]`
//! with `e` the all-ones vector; for a graph it is taken over the adjacency
//! matrix, and its columns count walks from each vertex by length. Columns
//! are built by iterated matrix-vector products, never by explicit matrix
//! powers.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::jacobi::symmetric_eigen;
use crate::linalg::rank_rational;
use crate::matrix::BigMatrix;

/// `[e, Me, ..., M^{m-1}e]` for a square `M`.
pub fn walk_matrix(a: &BigMatrix) -> Result<BigMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "walk matrix of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let m = a.rows();
    let mut w = BigMatrix::zeros(m, m);
    let mut col = vec![BigInt::one(); m];
    for j in 0..m {
        for i in 0..m {
            w[(i, j)] = col[i].clone();
        }
        if j + 1 < m {
            col = a.mat_vec(&col)?;
        }
    }
    Ok(w)
}

/// Walk matrix of the graph's adjacency matrix.
pub fn graph_walk_matrix(g: &Graph) -> BigMatrix {
    walk_matrix(&g.adjacency_matrix()).expect("adjacency matrices are square")
}

/// The `(n-1) x (n-1)` truncation: walk matrix with first row and last
/// column removed.
pub fn hat_walk_matrix(g: &Graph) -> Result<BigMatrix> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Dimension(
            "hat walk matrix needs at least 2 vertices".into(),
        ));
    }
    let w = graph_walk_matrix(g);
    Ok(BigMatrix::from_fn(n - 1, n - 1, |i, j| {
        w[(i + 1, j)].clone()
    }))
}

/// Number of main eigenvalues (eigenvalues owning an eigenvector not
/// orthogonal to the all-ones vector), computed exactly as the rational
/// rank of the walk matrix.
pub fn main_eigenvalue_count_exact(g: &Graph) -> usize {
    rank_rational(&graph_walk_matrix(g))
}

/// Numeric cross-check of the main-eigenvalue count.
///
/// Diagonalizes the adjacency matrix, merges eigenvalues closer than `tol`
/// into one eigenspace, and counts the spaces where the projection of the
/// all-ones vector has norm above `tol * sqrt(n)`.
pub fn main_eigenvalue_count_numeric(g: &Graph, tol: f64) -> Result<usize> {
    if tol <= 0.0 {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let n = g.vertex_count();
    let a = g.adjacency_matrix().to_f64_vec();
    let eig = symmetric_eigen(&a, n)?;

    let threshold = tol * (n as f64).sqrt();
    let mut count = 0;
    let mut k = 0;
    while k < n {
        let mut group_end = k + 1;
        while group_end < n && eig.values[group_end] - eig.values[group_end - 1] < tol {
            group_end += 1;
        }
        let mut proj_sq = 0.0;
        for j in k..group_end {
            let dot: f64 = eig.vector(j).iter().sum();
            proj_sq += dot * dot;
        }
        if proj_sq.sqrt() > threshold {
            count += 1;
        }
        k = group_end;
    }
    Ok(count)
}
