//! Smith normal form over the integers with unimodular witnesses.
//!
//! The computation is self-certifying: the row and column operations are
//! mirrored into `left` and `right`, so `left * M * right` can always be
//! recomputed and compared against the diagonal. No step of the pipeline
//! has to be trusted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::linalg::det_bareiss;
use crate::matrix::BigMatrix;

/// Invariant-factor diagonal plus the unimodular transforms that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// `d_1, ..., d_min(rows,cols)`, nonnegative, each dividing the next,
    /// zeros trailing.
    pub diag: Vec<BigInt>,
    /// Row transform (rows x rows), `|det| = 1`.
    pub left: BigMatrix,
    /// Column transform (cols x cols), `|det| = 1`.
    pub right: BigMatrix,
    rows: usize,
    cols: usize,
}

impl SnfResult {
    /// Count of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal as a full `rows x cols` matrix.
    pub fn diag_matrix(&self) -> BigMatrix {
        let mut m = BigMatrix::zeros(self.rows, self.cols);
        for (i, d) in self.diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Recomputes `left * M * right` and the witness determinants.
    pub fn certifies(&self, m: &BigMatrix) -> Result<bool> {
        let product = self.left.mat_mul(m)?.mat_mul(&self.right)?;
        if product != self.diag_matrix() {
            return Ok(false);
        }
        let du = det_bareiss(&self.left)?;
        let dv = det_bareiss(&self.right)?;
        Ok(du.abs().is_one() && dv.abs().is_one())
    }
}

struct Worker {
    m: BigMatrix,
    left: BigMatrix,
    right: BigMatrix,
}

impl Worker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.left.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.right.swap_cols(a, b);
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.m.cols() {
            let v = -self.m[(i, j)].clone();
            self.m[(i, j)] = v;
        }
        for j in 0..self.left.cols() {
            let v = -self.left[(i, j)].clone();
            self.left[(i, j)] = v;
        }
    }

    /// row_dst -= q * row_src
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.m.cols() {
            let t = q * &self.m[(src, j)];
            self.m[(dst, j)] -= t;
        }
        for j in 0..self.left.cols() {
            let t = q * &self.left[(src, j)];
            self.left[(dst, j)] -= t;
        }
    }

    /// col_dst -= q * col_src
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.m.rows() {
            let t = q * &self.m[(i, src)];
            self.m[(i, dst)] -= t;
        }
        for i in 0..self.right.rows() {
            let t = q * &self.right[(i, src)];
            self.right[(i, dst)] -= t;
        }
    }

    /// Nonzero entry of smallest absolute value at or after `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m.rows() {
            for j in t..self.m.cols() {
                if self.m[(i, j)].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => self.m[(i, j)].abs() < self.m[b].abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Rounded quotient: the remainder `a - q*p` lands in `[-|p|/2, |p|/2]`, so
/// one reduction pass at least halves every off-pivot entry.
fn rounded_div(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(p);
    if &r.abs() * 2 > p.abs() {
        if r.sign() == p.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Smith normal form of an arbitrary (possibly rectangular) integer matrix.
///
/// Pivot strategy: the nonzero entry of smallest absolute value in the
/// working submatrix, which bounds coefficient growth on walk matrices whose
/// entries are already hundreds of bits wide. After each pivot is isolated,
/// divisibility of the full remaining submatrix is enforced before moving
/// on, which is what makes `d_i | d_{i+1}` structural rather than a
/// postprocessing fix.
pub fn smith_normal_form(m: &BigMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Worker {
        m: m.clone(),
        left: BigMatrix::identity(rows),
        right: BigMatrix::identity(cols),
    };

    let steps = rows.min(cols);
    for t in 0..steps {
        'pivot: loop {
            let Some((pi, pj)) = w.min_pivot(t) else {
                break 'pivot; // submatrix is zero; trailing diagonal stays 0
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            // Reduce the pivot column and row. Any nonzero remainder is
            // strictly smaller than the pivot, so the loop reselects it and
            // terminates by infinite descent.
            let mut clean = true;
            let p = w.m[(t, t)].clone();
            for i in (t + 1)..rows {
                if w.m[(i, t)].is_zero() {
                    continue;
                }
                let q = rounded_div(&w.m[(i, t)].clone(), &p);
                w.row_axpy(i, t, &q);
                if !w.m[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in (t + 1)..cols {
                if w.m[(t, j)].is_zero() {
                    continue;
                }
                let q = rounded_div(&w.m[(t, j)].clone(), &p);
                w.col_axpy(j, t, &q);
                if !w.m[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }

            // Pivot row/column are zero. Enforce divisibility of the rest
            // of the submatrix: folding an offending row into the pivot row
            // exposes a remainder smaller than the pivot.
            let mut offender = None;
            'scan: for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if !w.m[(i, j)].is_multiple_of(&p) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    w.row_axpy(t, i, &minus_one); // row_t += row_i
                }
                None => break 'pivot,
            }
        }
    }

    // Sign normalization: diagonal entries made nonnegative by row flips.
    for t in 0..steps {
        if w.m[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }

    let diag = (0..steps).map(|t| w.m[(t, t)].clone()).collect();
    SnfResult {
        diag,
        left: w.left,
        right: w.right,
        rows,
        cols,
    }
}

/// Checks the divisibility chain `d_i | d_{i+1}` (with trailing zeros).
pub fn divisibility_chain_holds(diag: &[BigInt]) -> bool {
    diag.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].is_multiple_of(&w[0])
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::minor_gcd_oracle;

    fn mat(rows: &[Vec<i64>]) -> BigMatrix {
        BigMatrix::from_rows(rows).unwrap()
    }

    fn diag_i64(s: &SnfResult) -> Vec<i64> {
        use num_traits::ToPrimitive;
        s.diag.iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn diagonal_input() {
        let s = smith_normal_form(&mat(&[vec![4, 0], vec![0, 6]]));
        assert_eq!(diag_i64(&s), vec![2, 12]);
        assert!(s.certifies(&mat(&[vec![4, 0], vec![0, 6]])).unwrap());
    }

    #[test]
    fn zero_and_identity() {
        let z = BigMatrix::zeros(2, 3);
        let s = smith_normal_form(&z);
        assert_eq!(diag_i64(&s), vec![0, 0]);
        assert!(s.certifies(&z).unwrap());

        let id = BigMatrix::identity(3);
        let s = smith_normal_form(&id);
        assert_eq!(diag_i64(&s), vec![1, 1, 1]);
    }

    #[test]
    fn rectangular_witnesses() {
        let m = mat(&[vec![2, 4, 4], vec![-6, 6, 12]]);
        let s = smith_normal_form(&m);
        assert!(s.certifies(&m).unwrap());
        assert!(divisibility_chain_holds(&s.diag));
        // d1*d2 = gcd of 2x2 minors.
        let prod = &s.diag[0] * &s.diag[1];
        assert_eq!(prod, minor_gcd_oracle(&m, 2).unwrap());
        assert_eq!(s.diag[0], minor_gcd_oracle(&m, 1).unwrap());
    }

    #[test]
    fn negative_entries_normalized() {
        let m = mat(&[vec![-7]]);
        let s = smith_normal_form(&m);
        assert_eq!(diag_i64(&s), vec![7]);
        assert!(s.certifies(&m).unwrap());
    }

    #[test]
    fn known_5x5() {
        // Frozen from the minor-gcd oracle: d_1..d_k products must equal the
        // k-minor gcds.
        let m = mat(&[
            vec![-20, -7, -27, 2, 29],
            vec![17, 8, 14, -4, -10],
            vec![13, 8, 10, -4, -6],
            vec![-9, -2, -14, 0, 16],
            vec![5, 0, 5, -1, -4],
        ]);
        let s = smith_normal_form(&m);
        assert!(s.certifies(&m).unwrap());
        let mut prod = BigInt::one();
        for (k, d) in s.diag.iter().enumerate() {
            prod *= d;
            assert_eq!(prod, minor_gcd_oracle(&m, k + 1).unwrap(), "k = {}", k + 1);
        }
        assert_eq!(diag_i64(&s), vec![1, 1, 1, 2, 60]);
    }
}
