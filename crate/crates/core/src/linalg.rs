//! Fraction-free exact kernels: determinant, rank over the rationals, rank
//! over GF(2), minor-gcd oracle, and exact characteristic polynomials.
//!
//! Everything here is Bareiss-style one-step fraction-free elimination: the
//! update `w[i][j] = (w[i][j]*p - w[i][k]*w[k][j]) / prev` divides exactly at
//! every step (Sylvester's identity), so no rationals ever appear.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::BigMatrix;
use crate::poly::IntPolynomial;

/// Result of running fraction-free elimination to completion.
struct Elimination {
    rank: usize,
    sign: i8,
    /// The final pivot, which for a full-rank square input equals `|det|`
    /// times the tracked sign.
    last_pivot: BigInt,
}

/// Fraction-free Gaussian elimination with full pivoting. The pivot chosen
/// at each step is the nonzero entry of smallest absolute value in the
/// working submatrix, which keeps intermediate minors as small as the input
/// allows.
fn eliminate(mut w: BigMatrix) -> Elimination {
    let (rows, cols) = (w.rows(), w.cols());
    let steps = rows.min(cols);
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut rank = 0;

    for step in 0..steps {
        let mut pivot: Option<(usize, usize)> = None;
        for i in step..rows {
            for j in step..cols {
                if w[(i, j)].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => w[(i, j)].abs() < w[(pi, pj)].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        if pi != step {
            w.swap_rows(pi, step);
            sign = -sign;
        }
        if pj != step {
            w.swap_cols(pj, step);
            sign = -sign;
        }
        let p = w[(step, step)].clone();
        for i in (step + 1)..rows {
            let lead = w[(i, step)].clone();
            for j in (step + 1)..cols {
                let num = &w[(i, j)] * &p - &lead * &w[(step, j)];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free update must divide exactly");
                w[(i, j)] = q;
            }
            w[(i, step)] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }

    Elimination {
        rank,
        sign,
        last_pivot: prev,
    }
}

/// Exact determinant by fraction-free elimination.
pub fn det_bareiss(m: &BigMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows() == 0 {
        return Ok(BigInt::one());
    }
    let e = eliminate(m.clone());
    if e.rank < m.rows() {
        return Ok(BigInt::zero());
    }
    Ok(if e.sign < 0 {
        -e.last_pivot
    } else {
        e.last_pivot
    })
}

/// Rank over the rationals.
pub fn rank_rational(m: &BigMatrix) -> usize {
    eliminate(m.clone()).rank
}

/// Rank of the entries reduced mod 2, by elimination over GF(2) on packed
/// bit rows.
pub fn rank_mod2(m: &BigMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let words = cols.div_ceil(64);
    let mut bits: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..cols {
                if m[(i, j)].is_odd() {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();

    let mut rank = 0;
    for j in 0..cols {
        let (word, mask) = (j / 64, 1u64 << (j % 64));
        let Some(p) = (rank..rows).find(|&i| bits[i][word] & mask != 0) else {
            continue;
        };
        bits.swap(rank, p);
        let pivot_row = bits[rank].clone();
        for (i, row) in bits.iter_mut().enumerate() {
            if i != rank && row[word] & mask != 0 {
                for (w, pw) in row.iter_mut().zip(&pivot_row) {
                    *w ^= pw;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Gcd of all `k x k` minors (0 if every one vanishes).
///
/// This is the brute-force side of the Smith-normal-form cross-check: the
/// product of the first `k` invariant factors equals this gcd. Exponential
/// in `k`, intended for `min(rows, cols) <= 8`.
pub fn minor_gcd_oracle(m: &BigMatrix, k: usize) -> Result<BigInt> {
    if k > m.rows().min(m.cols()) {
        return Err(Error::Dimension(format!(
            "{k}x{k} minors of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    let mut gcd = BigInt::zero();
    for row_set in (0..m.rows()).combinations(k) {
        for col_set in (0..m.cols()).combinations(k) {
            let sub = BigMatrix::from_fn(k, k, |i, j| m[(row_set[i], col_set[j])].clone());
            let d = det_bareiss(&sub)?;
            gcd = gcd.gcd(&d);
            if gcd.is_one() {
                return Ok(gcd);
            }
        }
    }
    Ok(gcd)
}

/// Exact characteristic polynomial `det(x*I - M)` via the Faddeev-LeVerrier
/// recurrence. Monic of degree `m.rows()`; all divisions are exact over Z.
pub fn char_poly(m: &BigMatrix) -> Result<IntPolynomial> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut work = m.clone();
    for k in 1..=n {
        let trace: BigInt = (0..n).map(|i| work[(i, i)].clone()).sum();
        let (c, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                work[(i, i)] += &c;
            }
            work = m.mat_mul(&work)?;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> BigMatrix {
        BigMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_bareiss(&BigMatrix::identity(3)).unwrap(), BigInt::one());
        assert_eq!(
            det_bareiss(&mat(&[vec![1, 1], vec![1, 3]])).unwrap(),
            BigInt::from(2)
        );
        assert!(det_bareiss(&BigMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn det_singular_and_signed() {
        assert_eq!(
            det_bareiss(&mat(&[vec![1, 2], vec![2, 4]])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            det_bareiss(&mat(&[vec![0, 1], vec![1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        // Compare against cofactor expansion on a 3x3.
        assert_eq!(
            det_bareiss(&mat(&[vec![2, -3, 1], vec![2, 0, -1], vec![1, 4, 5]])).unwrap(),
            BigInt::from(49)
        );
    }

    #[test]
    fn rank_cases() {
        assert_eq!(rank_rational(&BigMatrix::zeros(3, 3)), 0);
        assert_eq!(rank_rational(&BigMatrix::identity(4)), 4);
        assert_eq!(rank_rational(&mat(&[vec![1, 2, 3], vec![2, 4, 6]])), 1);
    }

    #[test]
    fn rank_mod2_cases() {
        assert_eq!(rank_mod2(&BigMatrix::identity(5)), 5);
        let ones = BigMatrix::from_fn(4, 4, |_, _| BigInt::one());
        assert_eq!(rank_mod2(&ones), 1);
        // 2 = 0 mod 2, and parity of negatives follows the magnitude.
        assert_eq!(rank_mod2(&mat(&[vec![2, 4], vec![6, -3]])), 1);
        assert!(rank_mod2(&mat(&[vec![-3]])) == 1);
    }

    #[test]
    fn minor_gcd_small() {
        assert_eq!(
            minor_gcd_oracle(&BigMatrix::identity(3), 2).unwrap(),
            BigInt::one()
        );
        let d = mat(&[vec![4, 0], vec![0, 6]]);
        assert_eq!(minor_gcd_oracle(&d, 1).unwrap(), BigInt::from(2));
        assert_eq!(minor_gcd_oracle(&d, 2).unwrap(), BigInt::from(24));
        assert!(minor_gcd_oracle(&d, 3).is_err());
    }

    #[test]
    fn char_poly_matches_det_and_trace() {
        let m = mat(&[vec![2, 1], vec![1, 2]]);
        let p = char_poly(&m).unwrap();
        // x^2 - 4x + 3
        assert_eq!(
            p.coeffs(),
            &[BigInt::from(3), BigInt::from(-4), BigInt::one()]
        );
        let m3 = mat(&[vec![0, 1, 0], vec![0, 0, 1], vec![6, -11, 6]]);
        let p3 = char_poly(&m3).unwrap();
        // Companion matrix of x^3 - 6x^2 + 11x - 6.
        assert_eq!(
            p3.coeffs(),
            &[
                BigInt::from(-6),
                BigInt::from(11),
                BigInt::from(-6),
                BigInt::one()
            ]
        );
    }
}
