//! Comodules given by their coaction matrix.
//!
//! A left comodule `λ: M → C ⊗ M` is stored as a `(dim C · dim M) x dim M`
//! matrix with row index `c * dim M + m`; a right comodule
//! `ρ: M → M ⊗ C` uses row index `m * dim C + c`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Coalgebra;
use crate::algebra::Side;
use crate::error::{Error, Result};
use crate::exactla::{Field, KernelBuilder, Matrix, Subspace};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<E> {
    side: Side,
    dim: usize,
    cdim: usize,
    coaction: Matrix<E>,
}

impl<E: Clone + PartialEq> Comodule<E> {
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn coalgebra_dim(&self) -> usize {
        self.cdim
    }
    pub fn coaction(&self) -> &Matrix<E> {
        &self.coaction
    }
}

impl<E: Clone + PartialEq> Comodule<E> {
    pub fn new(side: Side, dim: usize, cdim: usize, coaction: Matrix<E>) -> Result<Self> {
        coaction.check_shape(dim * cdim, dim, "coaction")?;
        Ok(Comodule { side, dim, cdim, coaction })
    }

    /// `C` over itself via `Δ`.
    pub fn regular<F: Field<Elem = E>>(c: &Coalgebra<F>, side: Side) -> Self {
        Comodule { side, dim: c.dim(), cdim: c.dim(), coaction: c.comult_matrix() }
    }

    pub fn zero<F: Field<Elem = E>>(f: &F, side: Side, cdim: usize) -> Self {
        Comodule { side, dim: 0, cdim, coaction: Matrix::zeros(f, 0, 0) }
    }

    /// Coaction of a vector.
    pub fn coact<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        self.coaction.mul_vec(f, v)
    }

    pub fn validate<F: Field<Elem = E>>(&self, c: &Coalgebra<F>) -> ValidationReport {
        let f = c.field();
        let mut report = ValidationReport::new();
        if c.dim() != self.cdim {
            report.push("shape", vec![], format!("comodule over a {}-dimensional coalgebra, given {}", self.cdim, c.dim()));
            return report;
        }
        let idm = Matrix::identity(f, self.dim);
        let idc = Matrix::identity(f, self.cdim);
        let delta = c.comult_matrix();
        let eps = c.counit_matrix();
        let (lhs, rhs, counit) = match self.side {
            Side::Left => (
                delta.kron(f, &idm).mul(f, &self.coaction),
                idc.kron(f, &self.coaction).mul(f, &self.coaction),
                eps.kron(f, &idm).mul(f, &self.coaction),
            ),
            Side::Right => (
                self.coaction.kron(f, &idc).mul(f, &self.coaction),
                idm.kron(f, &delta).mul(f, &self.coaction),
                idm.kron(f, &eps).mul(f, &self.coaction),
            ),
        };
        for m in 0..self.dim {
            if lhs.col_vec(m) != rhs.col_vec(m) {
                report.push("coassociativity", vec![m], format!("coaction is not coassociative on basis vector {m}"));
            }
            if counit.col_vec(m) != idm.col_vec(m) {
                report.push("counit", vec![m], format!("counit law fails on basis vector {m}"));
            }
        }
        report
    }

    /// Push forward along a coalgebra map `pi: C → D` (`d_dim = dim D`).
    pub fn along<F: Field<Elem = E>>(&self, f: &F, pi: &Matrix<E>) -> Self {
        let idm = Matrix::identity(f, self.dim);
        let map = match self.side {
            Side::Left => pi.kron(f, &idm),
            Side::Right => idm.kron(f, pi),
        };
        Comodule { side: self.side, dim: self.dim, cdim: pi.rows(), coaction: map.mul(f, &self.coaction) }
    }

    pub fn direct_sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cdim, other.cdim, "direct sum of comodules over different coalgebras");
        assert_eq!(self.side, other.side, "direct sum of comodules on different sides");
        let d = self.dim + other.dim;
        let c = self.cdim;
        let mut m = Matrix::zeros(f, d * c, d);
        let place = |m: &mut Matrix<E>, src: &Comodule<E>, off: usize| {
            for col in 0..src.dim {
                for row in 0..src.dim * c {
                    let x = src.coaction.get(row, col);
                    if f.is_zero(x) {
                        continue;
                    }
                    let (mi, ci) = split(src.side, row, src.dim, c);
                    m.set(join(src.side, mi + off, ci, d, c), col + off, x.clone());
                }
            }
        };
        place(&mut m, self, 0);
        place(&mut m, other, self.dim);
        Comodule { side: self.side, dim: d, cdim: c, coaction: m }
    }

    pub fn power<F: Field<Elem = E>>(&self, f: &F, n: usize) -> Self {
        let mut out = Comodule::zero(f, self.side, self.cdim);
        for _ in 0..n {
            out = out.direct_sum(f, self);
        }
        out
    }

    /// The `C ⊗ M` (or `M ⊗ C`) subspace in which a subcomodule's coaction
    /// must land.
    fn tensor_with<F: Field<Elem = E>>(&self, f: &F, cs: &Subspace<E>, ms: &Subspace<E>) -> Subspace<E> {
        match self.side {
            Side::Left => cs.tensor(f, ms),
            Side::Right => ms.tensor(f, cs),
        }
    }

    pub fn is_subcomodule<F: Field<Elem = E>>(&self, f: &F, sub: &Subspace<E>) -> bool {
        let target = self.tensor_with(f, &Subspace::full(f, self.cdim), sub);
        sub.basis().row_iter().all(|v| target.contains(f, &self.coact(f, v)))
    }

    /// Coaction restricted to a subcomodule, in coordinates of its basis.
    pub fn restrict<F: Field<Elem = E>>(&self, f: &F, sub: &Subspace<E>) -> Result<Self> {
        if !self.is_subcomodule(f, sub) {
            return Err(Error::Input("subspace is not a subcomodule".into()));
        }
        let k = sub.dim();
        let c = self.cdim;
        let mut m = Matrix::zeros(f, k * c, k);
        for (col, v) in sub.basis().row_iter().enumerate() {
            let t = self.coact(f, v);
            // Read off coordinates slice by slice along the coalgebra index.
            for ci in 0..c {
                let slice: Vec<E> = (0..self.dim).map(|mi| t[join(self.side, mi, ci, self.dim, c)].clone()).collect();
                let coords = sub.coordinates(f, &slice).expect("subcomodule");
                for (r, x) in coords.into_iter().enumerate() {
                    m.set(join(self.side, r, ci, k, c), col, x);
                }
            }
        }
        Ok(Comodule { side: self.side, dim: k, cdim: c, coaction: m })
    }

    /// Quotient by a subcomodule, on the non-pivot coordinates.
    pub fn quotient<F: Field<Elem = E>>(&self, f: &F, sub: &Subspace<E>) -> Result<Self> {
        if !self.is_subcomodule(f, sub) {
            return Err(Error::Input("subspace is not a subcomodule".into()));
        }
        let np = sub.non_pivots();
        let k = np.len();
        let c = self.cdim;
        let mut m = Matrix::zeros(f, k * c, k);
        for (col, &j) in np.iter().enumerate() {
            let t = self.coaction.col_vec(j);
            for ci in 0..c {
                let slice: Vec<E> = (0..self.dim).map(|mi| t[join(self.side, mi, ci, self.dim, c)].clone()).collect();
                for (r, x) in sub.quotient_coords(f, &slice).into_iter().enumerate() {
                    m.set(join(self.side, r, ci, k, c), col, x);
                }
            }
        }
        Ok(Comodule { side: self.side, dim: k, cdim: c, coaction: m })
    }

    /// Whether `phi: self → other` (a `dim other x dim self` matrix) is a
    /// comodule map.
    pub fn is_map_to<F: Field<Elem = E>>(&self, f: &F, other: &Self, phi: &Matrix<E>) -> bool {
        let idc = Matrix::identity(f, self.cdim);
        let lifted = match self.side {
            Side::Left => idc.kron(f, phi),
            Side::Right => phi.kron(f, &idc),
        };
        lifted.mul(f, &self.coaction) == other.coaction.mul(f, phi)
    }
}

/// `(module index, coalgebra index)` of a tensor index.
fn split(side: Side, t: usize, dim: usize, cdim: usize) -> (usize, usize) {
    match side {
        Side::Left => (t % dim, t / dim),
        Side::Right => (t / cdim, t % cdim),
    }
}

fn join(side: Side, m: usize, c: usize, dim: usize, cdim: usize) -> usize {
    match side {
        Side::Left => c * dim + m,
        Side::Right => m * cdim + c,
    }
}

/// Space of comodule maps `v → w` as flattened `dim w x dim v` matrices.
pub fn comodule_hom_space<F: Field>(f: &F, v: &Comodule<F::Elem>, w: &Comodule<F::Elem>) -> Result<Subspace<F::Elem>> {
    if v.side != w.side || v.cdim != w.cdim {
        return Err(Error::Input("comodule maps need the same side and coalgebra".into()));
    }
    let (dv, dw) = (v.dim, w.dim);
    let mut kb = KernelBuilder::new(f, dw * dv);
    kb.impose_map(f, |x| {
        let phi = Matrix::from_flat(dw, dv, x);
        let idc = Matrix::identity(f, v.cdim);
        let lifted = match v.side {
            Side::Left => idc.kron(f, &phi),
            Side::Right => phi.kron(f, &idc),
        };
        lifted.mul(f, &v.coaction).sub(f, &w.coaction.mul(f, &phi)).into_data()
    });
    Ok(kb.into_space())
}

/// `V □_D W = ker(ρ_V ⊗ id − id ⊗ λ_W) ⊆ V ⊗ W` (index `i * dim W + j`).
pub fn cotensor<F: Field>(f: &F, v: &Comodule<F::Elem>, w: &Comodule<F::Elem>) -> Result<Subspace<F::Elem>> {
    if v.side != Side::Right || w.side != Side::Left {
        return Err(Error::Input("cotensor needs a right comodule and a left comodule".into()));
    }
    if v.cdim != w.cdim {
        return Err(Error::DimensionMismatch(format!("comodules over coalgebras of dimensions {} and {}", v.cdim, w.cdim)));
    }
    if v.dim == 0 || w.dim == 0 {
        return Ok(Subspace::zero(f, v.dim * w.dim));
    }
    // Both maps land in V ⊗ D ⊗ W with index (i * dD + d) * dW + j.
    let a = v.coaction.kron(f, &Matrix::identity(f, w.dim));
    let b = Matrix::identity(f, v.dim).kron(f, &w.coaction);
    Ok(crate::exactla::linear_kernel(f, &a.sub(f, &b)))
}

/// `M_C = {m : λ(m) ∈ C ⊗ M}` for a left comodule and a subcoalgebra `C`.
pub fn comodule_part<F: Field>(c: &Coalgebra<F>, m: &Comodule<F::Elem>, sub: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
    let f = c.field();
    if m.side != Side::Left {
        return Err(Error::Input("comodule_part expects a left comodule".into()));
    }
    if let Some(v) = c.subcoalgebra_violation(sub) {
        return Err(Error::Input(format!("not a subcoalgebra: {v}")));
    }
    let target = sub.tensor(f, &Subspace::full(f, m.dim));
    Ok(target.preimage(f, &m.coaction))
}
