//! Dense matrices over GF(4) with exact linear algebra.
//!
//! Everything is deterministic: `rref` always picks the first nonzero entry
//! scanning top to bottom in each column, so equal row spaces yield equal
//! reduced forms.  A matrix may have zero rows (the empty basis returned by
//! [`Gf4Matrix::null_space`] for full-rank inputs); code constructors reject
//! that case separately.

use crate::gf4::Gf4;
use crate::{Error, Result};
use std::fmt;

/// A dense `rows x cols` matrix over GF(4), row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

/// Result of Gaussian elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Gf4Matrix,
    pub rank: usize,
    /// 0-based pivot column indices, ascending.
    pub pivots: Vec<usize>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Gf4Matrix {
        assert!(cols > 0, "matrices must have at least one column");
        Gf4Matrix { rows, cols, data: vec![Gf4::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Gf4Matrix {
        let mut m = Gf4Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Gf4::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gf4>>) -> Result<Gf4Matrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if c == 0 {
            return Err(Error::DimensionMismatch("empty rows".into()));
        }
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Gf4Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from digit rows (`0..=3`), the qmat convention.
    pub fn from_digits(rows: &[Vec<u8>]) -> Result<Gf4Matrix> {
        Gf4Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&d| Gf4::from_digit(d)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Gf4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Gf4Matrix {
        let mut t = Gf4Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Entrywise Frobenius conjugation.
    pub fn conj(&self) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    /// Conjugate transpose `M†`.
    pub fn conj_transpose(&self) -> Gf4Matrix {
        self.conj().transpose()
    }

    pub fn mul(&self, rhs: &Gf4Matrix) -> Gf4Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Gf4Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                let (orow, rrow) = (i * rhs.cols, t * rhs.cols);
                for j in 0..rhs.cols {
                    out.data[orow + j] += a * rhs.data[rrow + j];
                }
            }
        }
        out
    }

    /// `[self | rhs]` side by side.
    pub fn augment(&self, rhs: &Gf4Matrix) -> Gf4Matrix {
        assert_eq!(self.rows, rhs.rows, "row counts must agree");
        let mut out = Gf4Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)];
            }
        }
        out
    }

    /// `[self; rhs]` stacked.
    pub fn stack(&self, rhs: &Gf4Matrix) -> Gf4Matrix {
        assert_eq!(self.cols, rhs.cols, "column counts must agree");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Gf4Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Keeps the columns whose 0-based indices satisfy `keep`.
    pub fn select_cols(&self, keep: &[usize]) -> Gf4Matrix {
        assert!(!keep.is_empty());
        let mut out = Gf4Matrix::zeros(self.rows, keep.len());
        for i in 0..self.rows {
            for (jj, &j) in keep.iter().enumerate() {
                out[(i, jj)] = self[(i, j)];
            }
        }
        out
    }

    pub fn select_rows(&self, keep: &[usize]) -> Gf4Matrix {
        let mut out = Gf4Matrix::zeros(keep.len(), self.cols);
        for (ii, &i) in keep.iter().enumerate() {
            for j in 0..self.cols {
                out[(ii, j)] = self[(i, j)];
            }
        }
        out
    }

    /// Reduced row echelon form with deterministic pivoting: in each column
    /// the first nonzero entry from the top becomes the pivot and is scaled
    /// to one.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(sel) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, sel);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)];
                    m.add_scaled_row(i, r, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The reduced form with zero rows dropped; canonical for the row space.
    pub fn row_space_basis(&self) -> Gf4Matrix {
        let Rref { reduced, rank, .. } = self.rref();
        let keep: Vec<usize> = (0..rank).collect();
        if rank == 0 {
            Gf4Matrix { rows: 0, cols: self.cols, data: Vec::new() }
        } else {
            reduced.select_rows(&keep)
        }
    }

    /// A full-row-rank basis of the right kernel under the plain (not
    /// conjugated) transpose: `self · B^T = 0`.  The basis has
    /// `cols - rank` rows; zero rows mean the kernel is trivial.  A matrix
    /// with zero rows has the whole space as its kernel.
    pub fn null_space(&self) -> Gf4Matrix {
        if self.rows == 0 {
            return Gf4Matrix::identity(self.cols);
        }
        let Rref { reduced, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Gf4Matrix::zeros(free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            basis[(bi, f)] = Gf4::ONE;
            for (ri, &p) in pivots.iter().enumerate() {
                if ri < rank {
                    // char 2: -x = x
                    basis[(bi, p)] = reduced[(ri, f)];
                }
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

    fn scale_row(&mut self, r: usize, f: Gf4) {
        for j in 0..self.cols {
            self.data[r * self.cols + j] *= f;
        }
    }

    /// row[dst] += f * row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, f: Gf4) {
        for j in 0..self.cols {
            let v = self.data[src * self.cols + j] * f;
            self.data[dst * self.cols + j] += v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Gf4Matrix {
    type Output = Gf4;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Gf4 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Gf4Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gf4 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let digits: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", digits.join(" "))?;
        }
        Ok(())
    }
}
