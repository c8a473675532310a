//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Field;

/// Row-major dense matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(rows: usize, cols: usize, entries: &[Vec<F>]) -> Self {
        assert_eq!(entries.len(), rows);
        Self::from_fn(rows, cols, |i, j| entries[i][j])
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&v| F::from_i64(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let base = i * o.cols;
                for j in 0..o.cols {
                    if !orow[j].is_zero() {
                        out.data[base + j] += a * orow[j];
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s += *a * *b;
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.shape(), o.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.shape(), o.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| *a - *b).collect(),
        }
    }

    pub fn scale(&self, c: F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| *a * c).collect() }
    }

    pub fn add_scaled(&mut self, o: &Self, c: F) {
        assert_eq!(self.shape(), o.shape());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            *a += *b * c;
        }
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                o[(i, j - self.cols)]
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.set_block(ro, co, b);
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)])
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])])
    }

    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().unwrap();
            for j in c..m.cols {
                m[(r, j)] *= inv;
            }
            for i in 0..m.rows {
                if i != r {
                    let f = m[(i, c)];
                    if !f.is_zero() {
                        for j in c..m.cols {
                            let v = m[(r, j)];
                            m[(i, j)] -= f * v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().pivots.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Columns spanning the kernel.
    pub fn kernel_matrix(&self) -> Self {
        Self::from_cols(self.cols, &self.nullspace())
    }

    /// Indices of a maximal set of independent columns.
    pub fn independent_cols(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Columns forming a basis of the column space.
    pub fn column_space(&self) -> Self {
        self.select_cols(&self.independent_cols())
    }

    /// Some `x` with `self * x = b`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let aug = self.hstack(&Self::from_cols(self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix[(r, self.cols)];
        }
        Some(x)
    }

    /// Some `X` with `self * X = b`.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = matrix[(r, self.cols + j)];
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_matrix(&Self::identity(self.rows))?;
        Some(x)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Extends independent columns of `sub` (ambient dimension `n`) by standard
/// vectors to a basis; returns the indices of the added standard vectors.
pub fn complement_indices<F: Field>(sub: &Matrix<F>, n: usize) -> Vec<usize> {
    let big = sub.hstack(&Matrix::identity(n));
    big.independent_cols()
        .into_iter()
        .filter(|&c| c >= sub.cols())
        .map(|c| c - sub.cols())
        .collect()
}

/// Dimension of the span of the given vectors.
pub fn span_rank<F: Field>(n: usize, vecs: &[Vec<F>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Matrix::from_cols(n, vecs).rank()
}

/// All subspaces of `F^d` of dimension at most `max_rank`, each as a list of
/// basis vectors in reduced row echelon form. `None` if more than `cap`.
pub fn subspaces<F: Field>(d: usize, max_rank: usize, cap: usize) -> Option<Vec<Vec<Vec<F>>>> {
    let q = F::order() as usize;
    let mut out: Vec<Vec<Vec<F>>> = vec![Vec::new()];
    for r in 1..=max_rank.min(d) {
        let mut pivots: Vec<usize> = (0..r).collect();
        loop {
            let free: Vec<(usize, usize)> = (0..r)
                .flat_map(|i| {
                    let pv = pivots.clone();
                    ((pivots[i] + 1)..d).filter(move |j| !pv.contains(j)).map(move |j| (i, j))
                })
                .collect();
            let count = q.checked_pow(free.len() as u32)?;
            if out.len() + count > cap {
                return None;
            }
            for code in 0..count {
                let mut rows = vec![vec![F::zero(); d]; r];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = F::one();
                }
                let mut c = code;
                for &(i, j) in &free {
                    rows[i][j] = F::from_index((c % q) as u64);
                    c /= q;
                }
                out.push(rows);
            }
            let Some(i) = (0..r).rev().find(|&i| pivots[i] < d - r + i) else {
                break;
            };
            pivots[i] += 1;
            for j in i + 1..r {
                pivots[j] = pivots[j - 1] + 1;
            }
        }
    }
    Some(out)
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}
