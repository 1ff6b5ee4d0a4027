//! Dense matrices over an exact field.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use crate::error::{Error, Result};

/// Row-major dense matrix. Arithmetic takes the field context explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
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
    pub fn data(&self) -> &[E] {
        &self.data
    }
    pub fn into_data(self) -> Vec<E> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_vec(&self, i: usize) -> Vec<E> {
        self.row(i).to_vec()
    }
    pub fn col_vec(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn row_iter(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn push_row(&mut self, row: Vec<E>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    /// Rows `r0..r1`.
    pub fn row_slice(&self, r0: usize, r1: usize) -> Self {
        Matrix { rows: r1 - r0, cols: self.cols, data: self.data[r0 * self.cols..r1 * self.cols].to_vec() }
    }

    /// Columns listed in `cols`, in that order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols, data }
    }

    /// The matrix flattened row by row into a vector of length `rows * cols`.
    pub fn to_flat(&self) -> Vec<E> {
        self.data.clone()
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    /// Matrix unit `E_{ij}`.
    pub fn unit<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(f, rows, cols);
        m.set(i, j, f.one());
        m
    }

    pub fn diag<F: Field<Elem = E>>(f: &F, d: &[E]) -> Self {
        let mut m = Matrix::zeros(f, d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_i64<F: Field<Elem = E>>(f: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
    }

    /// Column vector as an `n x 1` matrix.
    pub fn column<F: Field<Elem = E>>(_f: &F, v: &[E]) -> Self {
        Matrix::from_vec(v.len(), 1, v.to_vec())
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { f.is_one(self.get(i, j)) } else { f.is_zero(self.get(i, j)) })
            })
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sub shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.neg(a)).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.mul(a, c)).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled<F: Field<Elem = E>>(&mut self, f: &F, c: &E, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        if f.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            f.add_mul_assign(a, c, b);
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let slot = &mut out.data[i * other.cols + j];
                    f.add_mul_assign(slot, a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    f.add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix: `v^T M`.
    pub fn vec_mul<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = vec![f.zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                f.add_mul_assign(o, c, a);
            }
        }
        out
    }

    pub fn kron<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn direct_sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = Matrix::zeros(f, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.get(i, i));
        }
        acc
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        let mut m = self.clone();
        f.rref(&mut m).len()
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> E {
        f.det(self)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(f, n));
        let piv = f.rref(&mut aug);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_cols(&cols))
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Matrix::identity(f, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    /// Commutator `AB - BA`.
    pub fn commutator<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.mul(f, other).sub(f, &other.mul(f, self))
    }

    /// Reshapes a flat vector of length `rows * cols` into a matrix.
    pub fn from_flat(rows: usize, cols: usize, v: &[E]) -> Self {
        Matrix::from_vec(rows, cols, v.to_vec())
    }

    pub fn check_shape(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        if self.rows != rows || self.cols != cols {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{what}: expected {rows}x{cols}, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

/// Dense vector helpers.
pub mod vecops {
    use super::*;

    pub fn zero<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
        vec![f.zero(); n]
    }
    pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
        let mut v = zero(f, n);
        v[i] = f.one();
        v
    }
    pub fn is_zero<F: Field>(f: &F, v: &[F::Elem]) -> bool {
        v.iter().all(|x| f.is_zero(x))
    }
    pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(a.len(), b.len(), "vector length mismatch");
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }
    pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(a.len(), b.len(), "vector length mismatch");
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }
    pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| f.mul(c, x)).collect()
    }
    pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], c: &F::Elem, a: &[F::Elem]) {
        if f.is_zero(c) {
            return;
        }
        for (o, x) in acc.iter_mut().zip(a) {
            f.add_mul_assign(o, c, x);
        }
    }
    pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
        let mut acc = f.zero();
        for (x, y) in a.iter().zip(b) {
            f.add_mul_assign(&mut acc, x, y);
        }
        acc
    }
    /// Tensor product of coordinate vectors, index `i * b.len() + j`.
    pub fn kron<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(if f.is_zero(x) { f.zero() } else { f.mul(x, y) });
            }
        }
        out
    }
    pub fn from_i64<F: Field>(f: &F, v: &[i64]) -> Vec<F::Elem> {
        v.iter().map(|&x| f.from_i64(x)).collect()
    }
}
