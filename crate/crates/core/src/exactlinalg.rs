//! Dense exact matrices over `Q(i)` with determinants, Pfaffians and
//! submatrix selection.
//!
//! The public index convention is 1-based: `m[(1, 1)]` is the top-left entry.
//! Storage is row-major, entry `(i, j)` at offset `(i - 1) * cols + (j - 1)`.

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::MatrixError;
use crate::exactnum::GaussianRational as G;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    /// Gaussian elimination, first nonzero pivot in each column.
    Elimination,
    /// First-row Laplace expansion. Exponential; meant as an oracle for n <= 6.
    Cofactor,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<G>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: alloc::vec![G::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 1..=n {
            m[(i, i)] = G::one();
        }
        m
    }

    /// Build from `f(i, j)` with 1-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> G) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Fallible variant of [`ExactMatrix::from_fn`]; stops at the first error.
    pub fn try_from_fn<E>(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<G, E>,
    ) -> Result<Self, E> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j)?);
            }
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::Ragged { row: i + 1, len: row.len(), expected: cols });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { rows: n, cols, entries })
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

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[G] {
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&G> {
        if (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j) {
            Some(&self.entries[(i - 1) * self.cols + (j - 1)])
        } else {
            None
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        Ok(ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = G::zero();
            for k in 1..=self.cols {
                let (a, b) = (&self[(i, k)], &rhs[(k, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        }))
    }

    /// Entries at the given 1-based rows and columns, in the given order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<ExactMatrix, MatrixError> {
        for &i in row_idx {
            if !(1..=self.rows).contains(&i) {
                return Err(MatrixError::IndexOutOfRange { index: i, bound: self.rows });
            }
        }
        for &j in col_idx {
            if !(1..=self.cols).contains(&j) {
                return Err(MatrixError::IndexOutOfRange { index: j, bound: self.cols });
            }
        }
        Ok(ExactMatrix::from_fn(row_idx.len(), col_idx.len(), |i, j| self[(row_idx[i - 1], col_idx[j - 1])].clone()))
    }

    pub fn determinant(&self, method: DetMethod) -> Result<G, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(match method {
            DetMethod::Elimination => det_elimination(self.rows, self.entries.clone()),
            DetMethod::Cofactor => {
                let idx: Vec<usize> = (0..self.rows).collect();
                det_cofactor(self, 0, &idx)
            }
        })
    }

    /// Shorthand for the elimination determinant.
    pub fn det(&self) -> Result<G, MatrixError> {
        self.determinant(DetMethod::Elimination)
    }

    fn check_skew(&self) -> Result<(), MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows % 2 == 1 {
            return Err(MatrixError::OddPfaffian { dim: self.rows });
        }
        for i in 1..=self.rows {
            for j in i..=self.rows {
                if self[(i, j)] != -&self[(j, i)] {
                    return Err(MatrixError::NotSkew { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Pfaffian by skew-symmetric elimination.
    pub fn pfaffian(&self) -> Result<G, MatrixError> {
        self.check_skew()?;
        Ok(pf_elimination(self.rows, self.entries.clone()))
    }

    /// Pfaffian by expansion along the first row. Exponential; oracle only.
    pub fn pfaffian_expansion(&self) -> Result<G, MatrixError> {
        self.check_skew()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(pf_expand(self, &idx))
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = G;
    fn index(&self, (i, j): (usize, usize)) -> &G {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut G {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &mut self.entries[(i - 1) * self.cols + (j - 1)]
    }
}

fn det_elimination(n: usize, mut a: Vec<G>) -> G {
    let mut det = G::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
            return G::zero();
        };
        if p != c {
            for k in 0..n {
                a.swap(c * n + k, p * n + k);
            }
            det = -det;
        }
        let pivot = a[c * n + c].clone();
        det *= &pivot;
        let inv = pivot.inv().expect("pivot is nonzero");
        for r in c + 1..n {
            if a[r * n + c].is_zero() {
                continue;
            }
            let f = &a[r * n + c] * &inv;
            for k in c + 1..n {
                if !a[c * n + k].is_zero() {
                    let t = &f * &a[c * n + k];
                    a[r * n + k] -= t;
                }
            }
            a[r * n + c] = G::zero();
        }
    }
    det
}

fn det_cofactor(m: &ExactMatrix, row: usize, cols: &[usize]) -> G {
    if cols.is_empty() {
        return G::one();
    }
    let mut acc = G::zero();
    let mut rest: Vec<usize> = Vec::with_capacity(cols.len() - 1);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m.entries[row * m.cols + c];
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&x| x != c));
        let t = entry * &det_cofactor(m, row + 1, &rest);
        if pos % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

fn pf_elimination(n: usize, mut a: Vec<G>) -> G {
    let mut pf = G::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !a[k * n + j].is_zero()) else {
            return G::zero();
        };
        if p != k + 1 {
            // Swap index k+1 with p in rows and columns; Pf changes sign.
            for c in 0..n {
                a.swap((k + 1) * n + c, p * n + c);
            }
            for r in 0..n {
                a.swap(r * n + k + 1, r * n + p);
            }
            pf = -pf;
        }
        let pivot = a[k * n + k + 1].clone();
        pf *= &pivot;
        let inv = pivot.inv().expect("pivot is nonzero");
        // Clear row k beyond the pivot with the congruence
        // R_i -= f R_{k+1}, C_i -= f C_{k+1}, which keeps skew symmetry.
        for i in k + 2..n {
            if a[k * n + i].is_zero() {
                continue;
            }
            let f = &a[k * n + i] * &inv;
            for c in k..n {
                if !a[(k + 1) * n + c].is_zero() {
                    let t = &f * &a[(k + 1) * n + c];
                    a[i * n + c] -= t;
                }
            }
            for r in k..n {
                if !a[r * n + k + 1].is_zero() {
                    let t = &f * &a[r * n + k + 1];
                    a[r * n + i] -= t;
                }
            }
        }
        k += 2;
    }
    pf
}

fn pf_expand(m: &ExactMatrix, idx: &[usize]) -> G {
    if idx.is_empty() {
        return G::one();
    }
    let first = idx[0];
    let mut acc = G::zero();
    let mut rest: Vec<usize> = Vec::with_capacity(idx.len().saturating_sub(2));
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = &m.entries[first * m.cols + j];
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(idx[1..].iter().copied().filter(|&x| x != j));
        let t = entry * &pf_expand(m, &rest);
        if pos % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}
