//! Dense matrices over a finite field: just enough linear algebra for
//! generator matrices (rank, reduced row echelon form, null space).

use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u8>, // row-major
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: Vec<Vec<u8>>) -> Result<Self> {
        let nrows = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch { left: cols, right: row.len() });
            }
            for &cell in row {
                field.check_symbol(cell)?;
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// A rows x cols matrix of zeros; useful as a builder.
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// message * self for a message of length `rows`.
    pub fn mul_message(&self, message: &[u8]) -> Vec<u8> {
        debug_assert_eq!(message.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0u8; self.cols];
        for (i, &coef) in message.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            let row = self.row(i);
            for (o, &cell) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(coef, cell));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                m.set(r, j, f.mul(inv, m.get(r, j)));
            }
            for i in 0..m.rows {
                if i != r && m.get(i, c) != 0 {
                    let factor = m.get(i, c);
                    for j in c..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right null space { v : self * v^T = 0 }, one vector
    /// per row; has cols - rank rows.
    pub fn null_space(&self) -> Matrix {
        let f = self.field.clone();
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(f.clone(), free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(bi, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(bi, pc, f.neg(rref.get(pr, fc)));
            }
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn without_column(&self, col: usize) -> Matrix {
        debug_assert!(col < self.cols);
        let mut data = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            let row = self.row(i);
            data.extend_from_slice(&row[..col]);
            data.extend_from_slice(&row[col + 1..]);
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols - 1, data }
    }
}
