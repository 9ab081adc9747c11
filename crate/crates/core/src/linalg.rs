//! Exact linear algebra over the rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{one, zero, Scalar};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Outcome of Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduction {
    pub rank: usize,
    /// One vector per free column; `m * v = 0` for each.
    pub kernel_basis: Vec<Vec<Scalar>>,
    /// The pivot columns of the original matrix.
    pub image_basis: Vec<Vec<Scalar>>,
    pub pivot_cols: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!("column {j} has length {}, expected {rows}", col.len())));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row count mismatch".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        row_reduce(self).rank
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n)).ok()?;
        let (rref, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, rref.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

/// Reduced row echelon form and its pivot columns.
fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.entries.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let pivot = a.get(row, col).clone();
        for c in col..a.cols {
            let v = a.get(row, c) / &pivot;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let sub = a.get(row, c);
                if sub.is_zero() {
                    continue;
                }
                let v = a.get(r, c) - &factor * sub;
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn row_reduce(m: &ExactMatrix) -> RowReduction {
    let (reduced, pivots) = rref(m);
    let mut kernel_basis = Vec::new();
    for free in (0..m.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero(); m.cols];
        v[free] = one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -reduced.get(r, free).clone();
        }
        kernel_basis.push(v);
    }
    let image_basis = pivots.iter().map(|&c| m.column(c)).collect();
    RowReduction { rank: pivots.len(), kernel_basis, image_basis, pivot_cols: pivots }
}

/// `dim span(z) - dim span(b)`, after checking `span(b) ⊆ span(z)`.
pub fn quotient_dim(z: &ExactMatrix, b: &ExactMatrix) -> Result<usize> {
    let rz = z.rank();
    let rb = b.rank();
    if b.cols() > 0 {
        if z.rows() != b.rows() {
            return Err(Error::Dimension("subspaces live in different ambient spaces".into()));
        }
        if z.hstack(b)?.rank() != rz {
            return Err(Error::ContainmentViolation);
        }
    }
    Ok(rz - rb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn mat(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let red = row_reduce(&ExactMatrix::identity(2));
        assert_eq!(red.rank, 2);
        assert!(red.kernel_basis.is_empty());
        assert_eq!(red.image_basis, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn zero_one_by_one() {
        let red = row_reduce(&mat(&[&[0]]));
        assert_eq!(red.rank, 0);
        assert_eq!(red.kernel_basis, vec![vec![int(1)]]);
    }

    #[test]
    fn rank_one_kernel() {
        // hand reduction: [[1,2],[2,4]] -> [[1,2],[0,0]], x = -2y
        let m = mat(&[&[1, 2], &[2, 4]]);
        let red = row_reduce(&m);
        assert_eq!(red.rank, 1);
        assert_eq!(red.kernel_basis, vec![vec![int(-2), int(1)]]);
        assert!(m.mul_vec(&red.kernel_basis[0]).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn quotient_examples() {
        let plane = ExactMatrix::identity(2);
        assert_eq!(quotient_dim(&plane, &ExactMatrix::zeros(2, 0)).unwrap(), 2);
        let line = mat(&[&[1], &[0]]);
        assert_eq!(quotient_dim(&line, &line).unwrap(), 0);
        let diag = mat(&[&[1], &[1]]);
        assert_eq!(quotient_dim(&plane, &diag).unwrap(), 1);
        assert_eq!(quotient_dim(&line, &diag), Err(Error::ContainmentViolation));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
