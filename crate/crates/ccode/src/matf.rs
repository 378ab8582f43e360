//! Matrices over a finite field.
//!
//! Row-major storage of raw element encodings. The workhorse is Gaussian
//! elimination to *reduced row echelon form* (RREF): pivots are 1, pivot
//! columns are otherwise zero, pivot columns strictly increase, and zero
//! rows are dropped. Pivot selection takes the first nonzero entry scanning
//! down the column, so the result is deterministic — and since the RREF of a
//! matrix is unique given its row space, two matrices with the same row
//! space reduce to the identical object.
//!
//! A matrix may have zero rows (e.g. the check matrix of a code with k = n,
//! or an empty null-space basis); the column count is still tracked so
//! shapes stay meaningful.

use std::fmt;

use thiserror::Error;

use crate::gf::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct MatF {
    field: Field,
    rows: usize,
    cols: usize,
    /// Row-major, rows*cols entries.
    data: Vec<u64>,
}

impl MatF {
    /// Build from row-major data. Panics if `data.len() != rows*cols` or an
    /// entry is not a field element.
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u64>) -> MatF {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        for &v in &data {
            assert!(v < field.q(), "entry {v} is not an element of {field}");
        }
        MatF {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> MatF {
        let cols = rows.first().map_or(0, Vec::len);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        let data = rows.iter().flatten().copied().collect();
        MatF::new(field, rows.len(), cols, data)
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> MatF {
        MatF::new(field, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(field: Field, n: usize) -> MatF {
        let mut m = MatF::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        assert!(v < self.field.q(), "entry {v} is not an element");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        assert!(r < self.rows, "row out of bounds");
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u64]> {
        self.data.chunks_exact(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> MatF {
        let mut t = MatF::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product. Panics on shape mismatch or field mismatch.
    pub fn mat_mul(&self, rhs: &MatF) -> MatF {
        assert!(self.field == rhs.field, "matrices over different fields");
        assert_eq!(self.cols, rhs.rows, "shape mismatch for product");
        let f = &self.field;
        let mut out = MatF::zero(f.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix: v * M. Panics if `v.len() != rows`.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "vector length does not match rows");
        let f = &self.field;
        let mut out = vec![0u64; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = f.add(out[j], f.mul(vi, self.get(i, j)));
            }
        }
        out
    }

    /// Matrix times column vector: M * v^T. Panics if `v.len() != cols`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length does not match cols");
        let f = &self.field;
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0;
            for (j, &vj) in v.iter().enumerate() {
                acc = f.add(acc, f.mul(self.get(i, j), vj));
            }
            out[i] = acc;
        }
        out
    }

    /// Reduced row echelon form with zero rows dropped. Deterministic:
    /// pivot = first nonzero entry scanning down each column left to right.
    pub fn rref(&self) -> MatF {
        let f = self.field.clone();
        let mut rows: Vec<Vec<u64>> = self.rows_iter().map(<[u64]>::to_vec).collect();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(src) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(pivot_row, src);
            let inv = f.inv(rows[pivot_row][col]).unwrap();
            for v in rows[pivot_row].iter_mut() {
                *v = f.mul(*v, inv);
            }
            for r in 0..rows.len() {
                if r == pivot_row || rows[r][col] == 0 {
                    continue;
                }
                let factor = rows[r][col];
                for c in 0..self.cols {
                    let sub = f.mul(factor, rows[pivot_row][c]);
                    rows[r][c] = f.sub(rows[r][c], sub);
                }
            }
            pivot_row += 1;
            if pivot_row == rows.len() {
                break;
            }
        }
        rows.truncate(pivot_row);
        MatF::from_rows_with_cols(f, rows, self.cols)
    }

    /// Like `from_rows` but keeps the column count when there are no rows.
    fn from_rows_with_cols(field: Field, rows: Vec<Vec<u64>>, cols: usize) -> MatF {
        let n = rows.len();
        let data: Vec<u64> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), n * cols);
        MatF {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// A basis of the right null space { x : M x^T = 0 }, one vector per row
    /// of the returned matrix. For each free column, the basis vector has 1
    /// there and back-filled pivot entries; rows are emitted in free-column
    /// order, so the result is deterministic. May have zero rows.
    pub fn null_space_basis(&self) -> MatF {
        let r = self.rref();
        let f = self.field.clone();
        // pivot_of_col[c] = Some(row) if column c is a pivot column.
        let mut pivot_of_col = vec![None; self.cols];
        for row in 0..r.rows {
            let col = (0..r.cols)
                .find(|&c| r.get(row, c) != 0)
                .expect("rref dropped zero rows");
            pivot_of_col[col] = Some(row);
        }
        let mut basis: Vec<Vec<u64>> = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (col, &p) in pivot_of_col.iter().enumerate() {
                if let Some(row) = p {
                    // Row says x_col + sum_{free c} r[row][c] x_c = 0.
                    v[col] = f.neg(r.get(row, free));
                }
            }
            basis.push(v);
        }
        MatF::from_rows_with_cols(f, basis, self.cols)
    }

    /// Inverse of a square matrix via elimination on [M | I].
    pub fn invert(&self) -> Result<MatF, MatError> {
        if self.rows != self.cols {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let f = self.field.clone();
        let mut aug = MatF::zero(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let r = aug.rref();
        if r.rows < n {
            return Err(MatError::Singular);
        }
        for i in 0..n {
            for j in 0..n {
                let want = u64::from(i == j);
                if r.get(i, j) != want {
                    return Err(MatError::Singular);
                }
            }
        }
        let mut inv = MatF::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Horizontal concatenation [self | rhs].
    pub fn hstack(&self, rhs: &MatF) -> MatF {
        assert!(self.field == rhs.field, "matrices over different fields");
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        let mut out = MatF::zero(self.field.clone(), self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j));
            }
        }
        out
    }

    /// Keep the listed columns, in the order given.
    pub fn select_columns(&self, cols: &[usize]) -> MatF {
        for &c in cols {
            assert!(c < self.cols, "column {c} out of bounds");
        }
        let mut out = MatF::zero(self.field.clone(), self.rows, cols.len());
        for i in 0..self.rows {
            for (jo, &jc) in cols.iter().enumerate() {
                out.set(i, jo, self.get(i, jc));
            }
        }
        out
    }
}

impl fmt::Debug for MatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatF {}x{} over {}:", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}
