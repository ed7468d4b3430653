//! Dense matrices over a prime field.
//!
//! Vectors are rows and matrices act on the right: a linear map `k^m -> k^n`
//! is an `m x n` matrix and `x |-> x * A`. Subspaces of `k^n` are stored as
//! matrices whose rows form a basis, in reduced row echelon form whenever the
//! representation has to be canonical.

use std::fmt;

use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn scalar(field: PrimeField, n: usize, c: u32) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % field.characteristic());
            }
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j) % field.characteristic());
            }
        }
        m
    }

    /// A single row vector.
    pub fn row_vector(field: PrimeField, v: &[u32]) -> Self {
        Matrix::from_rows(field, v.len(), &[v.to_vec()])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v as u8;
    }

    pub fn row(&self, i: usize) -> Vec<u32> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.data.iter().map(|&x| x as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.field.characteristic() as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot += a * b as u64;
                }
            }
            for (j, a) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = (a % p) as u8;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        let f = self.field;
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(&other.data) {
            *o = f.add(*o as u32, b as u32) as u8;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        let c = c % f.characteristic();
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o = f.mul(*o as u32, c) as u8;
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.field.neg(1))
    }

    pub fn pow(&self, mut k: usize) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.rows == 0 || self.pow(self.rows).is_zero()
    }

    pub fn vstack(field: PrimeField, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            out.data[r0 * cols..(r0 + m.rows) * cols].copy_from_slice(&m.data);
            r0 += m.rows;
        }
        out
    }

    pub fn hstack(field: PrimeField, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, c0 + j, m.get(i, j));
                }
            }
            c0 += m.cols;
        }
        out
    }

    pub fn block_diag(field: PrimeField, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.paste(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, searching for pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c] as u32);
            for j in 0..cols {
                let v = self.data[r * cols + j] as u32;
                self.data[r * cols + j] = f.mul(v, inv) as u8;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c] as u32;
                if factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let v = self.data[i * cols + j] as u32;
                    let w = self.data[r * cols + j] as u32;
                    self.data[i * cols + j] = f.sub(v, f.mul(factor, w)) as u8;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis (RREF rows) of the row space.
    pub fn row_space(&self) -> Matrix {
        let (r, piv) = self.rref();
        r.block(0, piv.len(), 0, self.cols)
    }

    /// Basis (as rows) of `{ y : A y^T = 0 }`, i.e. the right null space.
    pub fn null_space(&self) -> Matrix {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut out = Matrix::zeros(self.field, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (pr, &pc) in piv.iter().enumerate() {
                out.set(k, pc, self.field.neg(r.get(pr, fc)));
            }
        }
        out
    }

    /// Basis (as rows) of `{ x : x A = 0 }`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().null_space()
    }

    /// Some `X` with `self * X = y`, if one exists.
    pub fn solve_right(&self, y: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, y.rows, "solve_right shape mismatch");
        let n = self.cols;
        let mut aug = Matrix::hstack(self.field, self.rows, &[self, y]);
        let piv = aug.rref_in_place(n);
        for i in piv.len()..aug.rows {
            if (n..aug.cols).any(|j| aug.get(i, j) != 0) {
                return None;
            }
        }
        let mut x = Matrix::zeros(self.field, n, y.cols);
        for (r, &c) in piv.iter().enumerate() {
            for j in 0..y.cols {
                x.set(c, j, aug.get(r, n + j));
            }
        }
        Some(x)
    }

    /// Some `X` with `X * self = y`, if one exists.
    pub fn solve_left(&self, y: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, y.cols, "solve_left shape mismatch");
        self.transpose()
            .solve_right(&y.transpose())
            .map(|x| x.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::hstack(self.field, n, &[self, &Matrix::identity(self.field, n)]);
        let piv = aug.rref_in_place(n);
        if piv.len() < n {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Row vector of all entries in row-major order.
    pub fn flatten(&self) -> Vec<u32> {
        self.entries().collect()
    }
}

/// Operations on subspaces given by row bases.
pub mod subspace {
    use super::Matrix;

    /// `true` if every row of `b` lies in the row space of `a`.
    pub fn contains(a: &Matrix, b: &Matrix) -> bool {
        if b.rows() == 0 {
            return true;
        }
        a.solve_left(b).is_some()
    }

    pub fn sum(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::vstack(a.field(), a.cols(), &[a, b]).row_space()
    }

    pub fn intersect(a: &Matrix, b: &Matrix) -> Matrix {
        let a = a.row_space();
        let b = b.row_space();
        let stacked = Matrix::vstack(a.field(), a.cols(), &[&a, &b.neg()]);
        let k = stacked.left_kernel();
        let coeffs = k.block(0, k.rows(), 0, a.rows());
        coeffs.mul(&a).row_space()
    }

    pub fn dim(a: &Matrix) -> usize {
        a.rank()
    }

    /// Coordinates of the rows of `v` modulo the row space of the RREF basis
    /// `basis` with pivots `pivots`: reduces each row and keeps the non-pivot
    /// entries.
    pub fn reduce_mod(basis: &Matrix, pivots: &[usize], v: &[u32]) -> Vec<u32> {
        let f = basis.field();
        let mut w = v.to_vec();
        for (r, &c) in pivots.iter().enumerate() {
            let factor = w[c];
            if factor == 0 {
                continue;
            }
            for j in 0..w.len() {
                w[j] = f.sub(w[j], f.mul(factor, basis.get(r, j)));
            }
        }
        (0..w.len())
            .filter(|c| !pivots.contains(c))
            .map(|c| w[c])
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn arb_matrix(p: u32, max: usize) -> impl Strategy<Value = Matrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            prop::collection::vec(0..p, r * c).prop_map(move |v| {
                Matrix::from_fn(f(p), r, c, |i, j| v[i * c + j])
            })
        })
    }

    #[test]
    fn rref_of_identity() {
        let m = Matrix::identity(f(5), 3);
        let (r, piv) = m.rref();
        assert_eq!(r, m);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(f(7), 2, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f(7), 2));
        let sing = Matrix::from_rows(f(7), 2, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn intersection_of_lines() {
        let a = Matrix::from_rows(f(2), 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Matrix::from_rows(f(2), 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = subspace::intersect(&a, &b);
        assert_eq!(i, Matrix::from_rows(f(2), 3, &[vec![0, 1, 0]]));
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(3, 5)) {
            prop_assert_eq!(m.rank() + m.null_space().rows(), m.cols());
            prop_assert!(m.mul(&m.null_space().transpose()).is_zero());
            prop_assert!(m.left_kernel().mul(&m).is_zero());
        }

        #[test]
        fn solve_left_finds_solutions(m in arb_matrix(5, 4), seed in prop::collection::vec(0u32..5, 16)) {
            let x = Matrix::from_fn(f(5), 2, m.rows(), |i, j| seed[(i * 7 + j) % 16]);
            let y = x.mul(&m);
            let sol = m.solve_left(&y).expect("consistent system");
            prop_assert_eq!(sol.mul(&m), y);
        }
    }
}
