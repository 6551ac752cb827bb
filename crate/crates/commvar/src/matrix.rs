//! Dense matrices over an exact scalar, plus the exact elimination routines
//! (rank, kernel, span membership) the rest of the crate leans on.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Elementary matrix with a single entry at (i, j).
    pub fn unit(n: usize, i: usize, j: usize, value: S) -> Self {
        let mut m = Matrix::zero(n, n);
        m.set(i, j, value);
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Row-major flattening, used to treat matrices as vectors.
    pub fn flatten(&self) -> Vec<S> {
        self.data.clone()
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Matrix<S> = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Reflection over the anti-diagonal: (i, j) -> (n-1-j, n-1-i).
    pub fn anti_transpose(&self) -> Self {
        assert!(self.is_square(), "anti-transpose needs a square matrix");
        let n = self.rows;
        Matrix::from_fn(n, n, |i, j| self.get(n - 1 - j, n - 1 - i).clone())
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        let mut t = S::zero();
        for i in 0..self.rows {
            t = t + self.get(i, i).clone();
        }
        t
    }

    /// Commutator [x, y] = xy - yx.
    pub fn bracket(&self, rhs: &Self) -> Result<Self> {
        if !self.is_square() || self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Input(format!(
                "bracket needs two square matrices of equal size, got {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul(rhs).sub(&rhs.mul(self)))
    }

    /// Smallest e >= 1 with self^e = 0, or None if not nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = self.clone();
        for e in 1..=n {
            if acc.is_zero() {
                return Some(e);
            }
            acc = acc.mul(self);
        }
        if acc.is_zero() {
            Some(n)
        } else {
            None
        }
    }
}

impl<S: Field> Matrix<S> {
    /// Row-reduce in place; returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for j in 0..self.cols {
                    let a = self.get(row, j).clone();
                    let b = self.get(pivot_row, j).clone();
                    self.set(row, j, b);
                    self.set(pivot_row, j, a);
                }
            }
            let inv = self.get(row, col).inv().unwrap();
            for j in col..self.cols {
                let v = self.get(row, j).clone() * inv.clone();
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).clone() - factor.clone() * self.get(row, j).clone();
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the right kernel { v : self * v = 0 }.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, S::one());
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    /// Solve self * x = b, if consistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for (i, rhs) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs.clone());
        }
        let pivots = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Incremental echelon form over a field, tracking how each reduced row was
/// combined from the inserted vectors. Used for linear independence, span
/// membership, and solving for structure coefficients.
pub struct SpanSolver<S: Field> {
    dim: usize,
    n_inserted: usize,
    // (pivot column, reduced row, combination over inserted vectors)
    rows: Vec<(usize, Vec<S>, Vec<S>)>,
}

impl<S: Field> SpanSolver<S> {
    pub fn new(dim: usize) -> Self {
        SpanSolver {
            dim,
            n_inserted: 0,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, v: &[S]) -> (Vec<S>, Vec<S>) {
        let mut v = v.to_vec();
        let mut comb = vec![S::zero(); self.n_inserted];
        for (pivot, row, row_comb) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for j in 0..self.dim {
                v[j] = v[j].clone() - factor.clone() * row[j].clone();
            }
            for (cj, rc) in comb.iter_mut().zip(row_comb) {
                *cj = cj.clone() - factor.clone() * rc.clone();
            }
        }
        (v, comb)
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut red, mut comb) = self.reduce_tracked(v);
        comb.push(S::one());
        self.n_inserted += 1;
        for (_, _, row_comb) in &mut self.rows {
            row_comb.push(S::zero());
        }
        let Some(pivot) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[pivot].inv().unwrap();
        for x in red.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for c in comb.iter_mut() {
            *c = c.clone() * inv.clone();
        }
        // keep existing rows reduced against the new pivot
        for (_, row, row_comb) in &mut self.rows {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for j in 0..self.dim {
                row[j] = row[j].clone() - factor.clone() * red[j].clone();
            }
            for (rc, c) in row_comb.iter_mut().zip(&comb) {
                *rc = rc.clone() - factor.clone() * c.clone();
            }
        }
        self.rows.push((pivot, red, comb));
        self.rows.sort_by_key(|(p, _, _)| *p);
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let (red, _) = self.reduce_tracked(v);
        red.iter().all(|x| x.is_zero())
    }

    /// Coefficients expressing v over the inserted vectors, if v lies in the
    /// span.
    pub fn solve(&self, v: &[S]) -> Option<Vec<S>> {
        let (red, comb) = self.reduce_tracked(v);
        if red.iter().all(|x| x.is_zero()) {
            Some(comb.iter().map(|c| -c.clone()).collect())
        } else {
            None
        }
    }
}
