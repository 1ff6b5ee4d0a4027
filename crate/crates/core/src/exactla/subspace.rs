//! Subspaces in canonical reduced row echelon form, kernels and affine solving.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::matrix::{vecops, Matrix};
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored as the nonzero rows of its RREF basis.
///
/// Two subspaces are equal exactly when their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Matrix<E>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }
    pub fn is_full(&self) -> bool {
        self.basis.rows() == self.ambient
    }
    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vectors(&self) -> Vec<Vec<E>> {
        self.basis.row_iter().map(|r| r.to_vec()).collect()
    }
    pub fn vector(&self, i: usize) -> &[E] {
        self.basis.row(i)
    }

    /// Columns that are not pivots; they index coordinates of the quotient.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut p = self.pivots.iter().peekable();
        for j in 0..self.ambient {
            if p.peek() == Some(&&j) {
                p.next();
            } else {
                out.push(j);
            }
        }
        out
    }
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(f, 0, ambient), pivots: Vec::new() }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(f, ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `m`.
    pub fn row_space<F: Field<Elem = E>>(f: &F, m: &Matrix<E>) -> Self {
        let mut m = m.clone();
        let pivots = f.rref(&mut m);
        let basis = m.row_slice(0, pivots.len());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: &[Vec<E>]) -> Self {
        let vs: Vec<Vec<E>> = vectors.iter().filter(|v| !vecops::is_zero(f, v)).cloned().collect();
        if vs.is_empty() {
            return Subspace::zero(f, ambient);
        }
        Subspace::row_space(f, &Matrix::from_rows(ambient, vs))
    }

    /// Reduces `v` modulo the subspace: the result vanishes on pivot columns.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&out[p]) {
                continue;
            }
            let c = f.neg(&out[p]);
            vecops::axpy(f, &mut out, &c, self.basis.row(i));
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        vecops::is_zero(f, &self.reduce(f, v))
    }

    pub fn contains_space<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        other.basis.row_iter().all(|r| self.contains(f, r))
    }

    /// Coordinates of a member with respect to the RREF basis, or `None`
    /// if `v` is not in the subspace.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(f, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine<F: Field<Elem = E>>(&self, f: &F, coeffs: &[E]) -> Vec<E> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        self.basis.vec_mul(f, coeffs)
    }

    /// Coordinates of the class of `v` in the quotient by this subspace,
    /// indexed by [`Subspace::non_pivots`].
    pub fn quotient_coords<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let r = self.reduce(f, v);
        self.non_pivots().into_iter().map(|j| r[j].clone()).collect()
    }

    /// Lifts quotient coordinates back to the canonical representative.
    pub fn quotient_lift<F: Field<Elem = E>>(&self, f: &F, coords: &[E]) -> Vec<E> {
        let mut v = vecops::zero(f, self.ambient);
        for (c, j) in coords.iter().zip(self.non_pivots()) {
            v[j] = c.clone();
        }
        v
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in subspace sum");
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        Subspace::row_space(f, &self.basis.vstack(&other.basis))
    }

    pub fn add_vectors<F: Field<Elem = E>>(&self, f: &F, vs: &[Vec<E>]) -> Self {
        let new: Vec<Vec<E>> = vs.iter().filter(|v| !self.contains(f, v)).cloned().collect();
        if new.is_empty() {
            return self.clone();
        }
        self.sum(f, &Subspace::span(f, self.ambient, &new))
    }

    /// Orthogonal complement under the standard pairing.
    pub fn annihilator<F: Field<Elem = E>>(&self, f: &F) -> Self {
        if self.is_zero() {
            return Subspace::full(f, self.ambient);
        }
        kernel_of_rref(f, &self.basis, &self.pivots)
    }

    pub fn intersection<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in intersection");
        if self.is_zero() || other.is_full() {
            return self.clone();
        }
        if other.is_zero() || self.is_full() {
            return other.clone();
        }
        // Parametrize self and impose the equations of other.
        let eqs = other.annihilator(f);
        if eqs.is_zero() {
            return self.clone();
        }
        let m = eqs.basis.mul(f, &self.basis.transpose());
        let k = linear_kernel(f, &m);
        let vs: Vec<Vec<E>> = k.basis.row_iter().map(|c| self.combine(f, c)).collect();
        Subspace::span(f, self.ambient, &vs)
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image<F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> Self {
        assert_eq!(m.cols(), self.ambient, "map domain mismatch");
        if self.is_zero() {
            return Subspace::zero(f, m.rows());
        }
        Subspace::row_space(f, &self.basis.mul(f, &m.transpose()))
    }

    /// `{v : m v ∈ self}`.
    pub fn preimage<F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> Self {
        assert_eq!(m.rows(), self.ambient, "map codomain mismatch");
        let eqs = self.annihilator(f);
        if eqs.is_zero() {
            return Subspace::full(f, m.cols());
        }
        linear_kernel(f, &eqs.basis.mul(f, m))
    }

    /// Tensor product of subspaces inside `F^a ⊗ F^b`.
    pub fn tensor<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut vs = Vec::with_capacity(self.dim() * other.dim());
        for a in self.basis.row_iter() {
            for b in other.basis.row_iter() {
                vs.push(vecops::kron(f, a, b));
            }
        }
        Subspace::span(f, self.ambient * other.ambient, &vs)
    }

    /// Complement spanned by standard basis vectors at non-pivot columns.
    pub fn standard_complement<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let vs: Vec<Vec<E>> = self.non_pivots().into_iter().map(|j| vecops::unit(f, self.ambient, j)).collect();
        Subspace::span(f, self.ambient, &vs)
    }
}

fn kernel_of_rref<F: Field>(f: &F, r: &Matrix<F::Elem>, pivots: &[usize]) -> Subspace<F::Elem> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&j| !is_pivot[j]).collect();
    if free.is_empty() {
        return Subspace::zero(f, cols);
    }
    // Basis vector for free column j: e_j - sum_i r[i][j] e_{pivot_i}.
    // Built directly in RREF: rows ordered by free column, pivot at j.
    let mut data = Vec::with_capacity(free.len() * cols);
    for &j in &free {
        let mut v = vecops::zero(f, cols);
        v[j] = f.one();
        for (i, &p) in pivots.iter().enumerate() {
            let x = r.get(i, j);
            if !f.is_zero(x) {
                v[p] = f.neg(x);
            }
        }
        data.extend(v);
    }
    let m = Matrix::from_vec(free.len(), cols, data);
    // The rows above are independent but not in RREF (entries at pivot
    // columns of r appear left of j); normalise.
    Subspace::row_space(f, &m)
}

/// `{v : m v = 0}`.
pub fn linear_kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let mut r = m.clone();
    let pivots = f.rref(&mut r);
    kernel_of_rref(f, &r, &pivots)
}

/// Some `v` with `m v = target` (and `v` in `constraints` when given).
///
/// Without constraints the solution has every free coordinate equal to zero.
/// With constraints, `v` is the combination of the constraint basis whose
/// free coefficients are zero.
pub fn solve_affine<F: Field>(
    f: &F,
    m: &Matrix<F::Elem>,
    target: &[F::Elem],
    constraints: Option<&Subspace<F::Elem>>,
) -> Result<Option<Vec<F::Elem>>> {
    if target.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "target has length {} but the matrix has {} rows",
            target.len(),
            m.rows()
        )));
    }
    if let Some(c) = constraints {
        if c.ambient_dim() != m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "constraint space lives in dimension {} but the matrix has {} columns",
                c.ambient_dim(),
                m.cols()
            )));
        }
        let reduced = m.mul(f, &c.basis().transpose());
        return Ok(solve_unconstrained(f, &reduced, target).map(|coef| c.combine(f, &coef)));
    }
    Ok(solve_unconstrained(f, m, target))
}

fn solve_unconstrained<F: Field>(f: &F, m: &Matrix<F::Elem>, target: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = m.cols();
    let aug = m.hstack(&Matrix::from_vec(target.len(), 1, target.to_vec()));
    let mut r = aug;
    let pivots = f.rref(&mut r);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut v = vecops::zero(f, n);
    for (i, &p) in pivots.iter().enumerate() {
        v[p] = r.get(i, n).clone();
    }
    debug_assert!(m.mul_vec(f, &v) == target.to_vec(), "affine solution failed verification");
    Some(v)
}

/// Incremental solver for homogeneous systems whose equations arrive in
/// batches. The solution space is kept parametrised by its current basis so
/// later batches act on fewer unknowns.
#[derive(Clone, Debug)]
pub struct KernelBuilder<E> {
    space: Subspace<E>,
}

impl<E: Clone + PartialEq> KernelBuilder<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, unknowns: usize) -> Self {
        KernelBuilder { space: Subspace::full(f, unknowns) }
    }

    pub fn from_space(space: Subspace<E>) -> Self {
        KernelBuilder { space }
    }

    pub fn space(&self) -> &Subspace<E> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<E> {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Imposes `eqs · v = 0` for the rows of `eqs`.
    pub fn impose<F: Field<Elem = E>>(&mut self, f: &F, eqs: &Matrix<E>) {
        if self.space.is_zero() || eqs.rows() == 0 {
            return;
        }
        let restricted = eqs.mul(f, &self.space.basis().transpose());
        if restricted.is_zero(f) {
            return;
        }
        let k = linear_kernel(f, &restricted);
        let vs: Vec<Vec<E>> = k.basis().row_iter().map(|c| self.space.combine(f, c)).collect();
        self.space = Subspace::span(f, self.space.ambient_dim(), &vs);
    }

    /// Imposes equations given as a linear map evaluated on the current
    /// basis: `apply(v)` must be linear in `v` and vanish on solutions.
    pub fn impose_map<F: Field<Elem = E>>(&mut self, f: &F, apply: impl Fn(&[E]) -> Vec<E>) {
        if self.space.is_zero() {
            return;
        }
        let images: Vec<Vec<E>> = self.space.basis().row_iter().map(&apply).collect();
        let len = images[0].len();
        if images.iter().all(|v| vecops::is_zero(f, v)) {
            return;
        }
        // Column j of `m` is the image of basis vector j.
        let m = Matrix::from_rows(len, images).transpose();
        let k = linear_kernel(f, &m);
        let vs: Vec<Vec<E>> = k.basis().row_iter().map(|c| self.space.combine(f, c)).collect();
        self.space = Subspace::span(f, self.space.ambient_dim(), &vs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::{GaloisField, Rationals};

    #[test]
    fn kernel_examples() {
        let q = Rationals;
        assert!(linear_kernel(&q, &Matrix::identity(&q, 3)).is_zero());
        assert_eq!(linear_kernel(&q, &Matrix::zeros(&q, 2, 3)).dim(), 3);
        let k = linear_kernel(&q, &Matrix::from_i64(&q, &[&[1, 1], &[2, 2]]));
        assert_eq!(k, Subspace::span(&q, 2, &[vecops::from_i64(&q, &[1, -1])]));
    }

    #[test]
    fn solve_examples() {
        let q = Rationals;
        let t = vecops::from_i64(&q, &[3, -4]);
        assert_eq!(solve_affine(&q, &Matrix::identity(&q, 2), &t, None).unwrap(), Some(t.clone()));
        assert_eq!(solve_affine(&q, &Matrix::zeros(&q, 2, 2), &t, None).unwrap(), None);
        let f3 = GaloisField::prime(3).unwrap();
        let m = Matrix::from_i64(&f3, &[&[1, 1]]);
        assert_eq!(solve_affine(&f3, &m, &[2], None).unwrap(), Some(vec![2, 0]));
        assert!(solve_affine(&f3, &m, &[1, 2], None).is_err());
    }

    #[test]
    fn constrained_solve_stays_inside() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[1, 1, 0]]);
        let c = Subspace::span(&q, 3, &[vecops::from_i64(&q, &[0, 1, 1])]);
        let v = solve_affine(&q, &m, &vecops::from_i64(&q, &[5]), Some(&c)).unwrap().unwrap();
        assert_eq!(v, vecops::from_i64(&q, &[0, 5, 5]));
    }

    #[test]
    fn intersection_and_sum() {
        let q = Rationals;
        let a = Subspace::span(&q, 3, &[vecops::from_i64(&q, &[1, 0, 0]), vecops::from_i64(&q, &[0, 1, 0])]);
        let b = Subspace::span(&q, 3, &[vecops::from_i64(&q, &[0, 1, 0]), vecops::from_i64(&q, &[0, 0, 1])]);
        let i = a.intersection(&q, &b);
        assert_eq!(i, Subspace::span(&q, 3, &[vecops::from_i64(&q, &[0, 1, 0])]));
        assert!(a.sum(&q, &b).is_full());
        assert_eq!(a.annihilator(&q), Subspace::span(&q, 3, &[vecops::from_i64(&q, &[0, 0, 1])]));
    }

    #[test]
    fn quotient_coordinates_round_trip() {
        let q = Rationals;
        let s = Subspace::span(&q, 3, &[vecops::from_i64(&q, &[1, 2, 3])]);
        let v = vecops::from_i64(&q, &[4, 5, 6]);
        let c = s.quotient_coords(&q, &v);
        let lift = s.quotient_lift(&q, &c);
        assert!(s.contains(&q, &vecops::sub(&q, &v, &lift)));
    }

    #[test]
    fn kernel_builder_matches_direct_kernel() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[1, 2, 3, 4], &[0, 1, 1, 0], &[1, 3, 4, 4]]);
        let mut kb = KernelBuilder::new(&q, 4);
        kb.impose(&q, &m.row_slice(0, 1));
        kb.impose(&q, &m.row_slice(1, 3));
        assert_eq!(kb.into_space(), linear_kernel(&q, &m));
    }
}
