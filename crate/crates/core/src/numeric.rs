//! Double-precision helpers backing the verification harness: log-space LU
//! determinants, linear solves for inverse iteration, polynomial root
//! finding, and diagonal symmetrization of sign-consistent matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `(log|det|, sign)` of a square matrix via partial-pivot LU. A zero pivot
/// yields `(f64::NEG_INFINITY, 0)`.
pub fn lu_log_det(a: &[f64], n: usize) -> (f64, i8) {
    let mut m = a.to_vec();
    let mut log_abs = 0.0;
    let mut sign = 1i8;
    for k in 0..n {
        let (p, _) = (k..n)
            .map(|i| (i, m[i * n + k].abs()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        if m[p * n + k] == 0.0 {
            return (f64::NEG_INFINITY, 0);
        }
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k];
        log_abs += pivot.abs().ln();
        if pivot < 0.0 {
            sign = -sign;
        }
        for i in (k + 1)..n {
            let f = m[i * n + k] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                m[i * n + j] -= f * m[k * n + j];
            }
        }
    }
    (log_abs, sign)
}

/// Solves `A x = b` by partial-pivot LU. Pivots smaller than `eps` are
/// replaced by `eps` (signed), the standard trick that lets inverse
/// iteration run on a nearly singular shift.
pub fn lu_solve_regularized(a: &[f64], b: &[f64], n: usize, eps: f64) -> Vec<f64> {
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let (p, _) = (k..n)
            .map(|i| (i, m[i * n + k].abs()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            perm.swap(k, p);
            x.swap(k, p);
        }
        if m[k * n + k].abs() < eps {
            m[k * n + k] = if m[k * n + k] < 0.0 { -eps } else { eps };
        }
        let pivot = m[k * n + k];
        for i in (k + 1)..n {
            let f = m[i * n + k] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in (k + 1)..n {
                m[i * n + j] -= f * m[k * n + j];
            }
            x[i] -= f * x[k];
        }
    }
    for k in (0..n).rev() {
        let mut s = x[k];
        for j in (k + 1)..n {
            s -= m[k * n + j] * x[j];
        }
        x[k] = s / m[k * n + k];
    }
    x
}

/// All roots of a polynomial with the given coefficients (index = degree)
/// by Aberth-Ehrlich simultaneous iteration in complex double precision.
///
/// Coefficient-basis root finding is ill-conditioned for high degrees; this
/// is intended for the modest degrees (< 20 or so) reached by the
/// eigenvalue fallback path.
pub fn polynomial_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Ok(vec![]);
    }
    let lead = coeffs[deg];
    if lead == 0.0 {
        return Err(Error::InvalidParameter(
            "leading coefficient must not vanish".into(),
        ));
    }
    // Cauchy bound on root magnitude.
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);

    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };

    // Slightly irrational starting angles avoid symmetric stalls.
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.354) / deg as f64;
            Complex64::from_polar(radius * 0.8, angle)
        })
        .collect();

    for _ in 0..200 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    repulsion += (z[i] - z[j]).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius.max(1.0) {
            return Ok(z);
        }
    }
    // Accept whatever achieved small backward error; reject otherwise.
    let worst = z.iter().map(|&zi| eval(zi).0.norm()).fold(0.0f64, f64::max);
    let scale = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    if worst < 1e-8 * scale.max(1.0) {
        Ok(z)
    } else {
        Err(Error::Numeric(format!(
            "root iteration stalled with residual {worst:.3e}"
        )))
    }
}

/// Searches for a positive diagonal `d` with `D M D^{-1}` symmetric, i.e.
/// `d_i^2 m_ij = d_j^2 m_ji` for all `i, j`. Requires a symmetric zero
/// pattern, positive products `m_ij * m_ji`, and consistency around cycles.
/// Returns the scaling vector, or `None` when no such diagonal exists.
pub fn symmetrizing_diagonal(m: &[f64], n: usize) -> Option<Vec<f64>> {
    const REL_TOL: f64 = 1e-9;
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (m[i * n + j], m[j * n + i]);
            if (a == 0.0) != (b == 0.0) {
                return None;
            }
            if a != 0.0 && a * b < 0.0 {
                return None;
            }
        }
    }
    // BFS over the nonzero pattern, assigning log-scales per component.
    let mut log_d = vec![f64::NAN; n];
    for start in 0..n {
        if !log_d[start].is_nan() {
            continue;
        }
        log_d[start] = 0.0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || m[i * n + j] == 0.0 {
                    continue;
                }
                // d_j^2 / d_i^2 = m_ij / m_ji
                let ratio = 0.5 * (m[i * n + j] / m[j * n + i]).ln();
                let want = log_d[i] + ratio;
                if log_d[j].is_nan() {
                    log_d[j] = want;
                    queue.push_back(j);
                } else if (log_d[j] - want).abs() > REL_TOL * (1.0 + want.abs()) {
                    return None;
                }
            }
        }
    }
    Some(log_d.into_iter().map(f64::exp).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_det_matches_direct() {
        // det [[1,2],[3,4]] = -2
        let (l, s) = lu_log_det(&[1.0, 2.0, 3.0, 4.0], 2);
        assert_eq!(s, -1);
        assert!((l - 2f64.ln()).abs() < 1e-12);
        let (_, s) = lu_log_det(&[1.0, 2.0, 2.0, 4.0], 2);
        assert_eq!(s, 0);
    }

    #[test]
    fn solve_small_system() {
        let a = [2.0, 1.0, 1.0, 3.0];
        let x = lu_solve_regularized(&a, &[5.0, 10.0], 2, 1e-300);
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn roots_of_cubic() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let mut roots = polynomial_roots(&[-6.0, 11.0, -6.0, 1.0]).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (r, expect) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r.re - expect).abs() < 1e-9 && r.im.abs() < 1e-9);
        }
    }

    #[test]
    fn symmetrization_of_sign_consistent_tridiagonal() {
        // [[0,2,0],[1,0,1],[0,1,0]] scales to a symmetric matrix.
        let m = [0.0, 2.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0];
        let d = symmetrizing_diagonal(&m, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s_ij = d[i] * m[i * 3 + j] / d[j];
                let s_ji = d[j] * m[j * 3 + i] / d[i];
                assert!((s_ij - s_ji).abs() < 1e-12);
            }
        }
        // Sign-inconsistent pair has no symmetrizer.
        let bad = [0.0, 1.0, -1.0, 0.0];
        assert!(symmetrizing_diagonal(&bad, 2).is_none());
    }
}
