//! Dense matrices of arbitrary-precision integers.
//!
//! Walk-matrix entries grow like `lambda_max^n` and the fraction-free
//! kernels square intermediate values, so every entry is a [`BigInt`];
//! machine words are never used for matrix data.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct BigMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl BigMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BigMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BigMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of anything convertible to `BigInt`.
    /// All rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            for x in row {
                data.push(x.clone().into());
            }
        }
        Ok(BigMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        BigMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        BigMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Exact product; inner dimensions must agree.
    pub fn mat_mul(&self, other: &BigMatrix) -> Result<BigMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BigMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        Ok(out)
    }

    /// Exact matrix-vector product.
    pub fn mat_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = BigInt::zero();
            for j in 0..self.cols {
                acc += &self[(i, j)] * &v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Entry-wise conversion to `f64` (lossy; intended for the numeric checks
    /// where entries are small).
    pub fn to_f64_vec(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.data
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Text form consumed by [`BigMatrix::parse_text`]: a `rows cols` header
    /// line, then one line of space-separated decimal entries per row.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("{} {}\n", self.rows, self.cols));
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<BigMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (hdr_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse_at_line(1, "empty matrix text"))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::parse_at_line(
                hdr_line + 1,
                "expected header `rows cols`",
            ));
        }
        let rows: usize = dims[0]
            .parse()
            .map_err(|_| Error::parse_at_line(hdr_line + 1, "bad row count"))?;
        let cols: usize = dims[1]
            .parse()
            .map_err(|_| Error::parse_at_line(hdr_line + 1, "bad column count"))?;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (ln, line) = lines.next().ok_or_else(|| {
                Error::parse_at_line(hdr_line + 1, format!("expected {rows} rows of entries"))
            })?;
            let mut count = 0;
            for tok in line.split_whitespace() {
                let val: BigInt = tok
                    .parse()
                    .map_err(|_| Error::parse_at_line(ln + 1, format!("bad integer `{tok}`")))?;
                data.push(val);
                count += 1;
            }
            if count != cols {
                return Err(Error::parse_at_line(
                    ln + 1,
                    format!("expected {cols} entries, found {count}"),
                ));
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse_at_line(
                ln + 1,
                "trailing content after matrix",
            ));
        }
        Ok(BigMatrix { rows, cols, data })
    }
}

impl Index<(usize, usize)> for BigMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for BigMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for BigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BigMatrix {}x{}\n{}",
            self.rows,
            self.cols,
            self.to_text()
        )
    }
}

impl fmt::Display for BigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
