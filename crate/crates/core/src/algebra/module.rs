//! One-sided modules given by action matrices on column vectors.
//!
//! For a left module `action[i]` is the matrix of `m ↦ b_i m`; for a right
//! module it is the matrix of `m ↦ m b_i`. Hence `L_{ab} = L_a L_b` and
//! `R_{ab} = R_b R_a`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, KernelBuilder, Matrix, Subspace};
use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module<E> {
    side: Side,
    dim: usize,
    action: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> Module<E> {
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self, i: usize) -> &Matrix<E> {
        &self.action[i]
    }
    pub fn actions(&self) -> &[Matrix<E>] {
        &self.action
    }
}

impl<E: Clone + PartialEq> Module<E> {
    /// Builds a module from action matrices. Only shapes are checked; use
    /// [`Module::validate`] for the module axioms.
    pub fn new<F: Field<Elem = E>>(alg: &Algebra<F>, side: Side, dim: usize, action: Vec<Matrix<E>>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "module has {} action matrices for an algebra of dimension {}",
                action.len(),
                alg.dim()
            )));
        }
        for (i, m) in action.iter().enumerate() {
            m.check_shape(dim, dim, &format!("action of basis element {i}"))?;
        }
        Ok(Module { side, dim, action })
    }

    /// Like [`Module::new`] but also checks the axioms.
    pub fn new_validated<F: Field<Elem = E>>(alg: &Algebra<F>, side: Side, dim: usize, action: Vec<Matrix<E>>) -> Result<Self> {
        let m = Module::new(alg, side, dim, action)?;
        let r = m.validate(alg);
        if !r.is_valid() {
            return Err(Error::Input(format!("module axioms fail: {}", r.violations[0].detail)));
        }
        Ok(m)
    }

    pub fn regular<F: Field<Elem = E>>(alg: &Algebra<F>, side: Side) -> Self {
        let action = (0..alg.dim())
            .map(|i| match side {
                Side::Left => alg.left_regular(i),
                Side::Right => alg.right_regular(i),
            })
            .collect();
        Module { side, dim: alg.dim(), action }
    }

    pub fn zero<F: Field<Elem = E>>(alg: &Algebra<F>, side: Side) -> Self {
        Module { side, dim: 0, action: vec![Matrix::zeros(alg.field(), 0, 0); alg.dim()] }
    }

    /// Matrix of the action of an arbitrary element.
    pub fn action_of<F: Field<Elem = E>>(&self, f: &F, a: &[E]) -> Matrix<E> {
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (c, x) in a.iter().zip(&self.action) {
            m.add_scaled(f, c, x);
        }
        m
    }

    /// `v · b_i` or `b_i · v` depending on the side.
    pub fn act_basis<F: Field<Elem = E>>(&self, f: &F, i: usize, v: &[E]) -> Vec<E> {
        self.action[i].mul_vec(f, v)
    }

    pub fn act<F: Field<Elem = E>>(&self, f: &F, a: &[E], v: &[E]) -> Vec<E> {
        let mut out = vecops::zero(f, self.dim);
        for (c, x) in a.iter().zip(&self.action) {
            if !f.is_zero(c) {
                vecops::axpy(f, &mut out, c, &x.mul_vec(f, v));
            }
        }
        out
    }

    pub fn validate<F: Field<Elem = E>>(&self, alg: &Algebra<F>) -> ValidationReport {
        let f = alg.field();
        let mut report = ValidationReport::new();
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                let mut prod = vec![f.zero(); d];
                for (k, c) in alg.basis_product(i, j) {
                    prod[*k] = c.clone();
                }
                let lhs = self.action_of(f, &prod);
                let rhs = match self.side {
                    Side::Left => self.action[i].mul(f, &self.action[j]),
                    Side::Right => self.action[j].mul(f, &self.action[i]),
                };
                if lhs != rhs {
                    report.push(
                        "module associativity",
                        vec![i, j],
                        format!("action of {}*{} differs from the composite action", alg.label(i), alg.label(j)),
                    );
                }
            }
        }
        if !self.action_of(f, alg.unit()).is_identity(f) {
            report.push("module unit", vec![], "1 does not act as the identity".into());
        }
        report
    }

    /// Submodule generated by `vectors`.
    pub fn submodule<F: Field<Elem = E>>(&self, alg: &Algebra<F>, vectors: &[Vec<E>]) -> Subspace<E> {
        let f = alg.field();
        let mut space = Subspace::span(f, self.dim, vectors);
        let gens = alg.generator_indices();
        let mut frontier = space.basis_vectors();
        while !frontier.is_empty() {
            let mut new = Vec::new();
            for v in &frontier {
                for &g in gens {
                    let w = self.action[g].mul_vec(f, v);
                    if !space.contains(f, &w) {
                        space = space.add_vectors(f, core::slice::from_ref(&w));
                        new.push(w);
                    }
                }
            }
            frontier = new;
        }
        space
    }

    pub fn is_submodule<F: Field<Elem = E>>(&self, alg: &Algebra<F>, sub: &Subspace<E>) -> bool {
        let f = alg.field();
        sub.basis().row_iter().all(|v| self.action.iter().all(|m| sub.contains(f, &m.mul_vec(f, v))))
    }

    /// The submodule as a module in its RREF basis.
    pub fn restrict<F: Field<Elem = E>>(&self, f: &F, sub: &Subspace<E>) -> Self {
        let basis = sub.basis_vectors();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<E>> = basis
                    .iter()
                    .map(|v| sub.coordinates(f, &m.mul_vec(f, v)).expect("subspace is a submodule"))
                    .collect();
                Matrix::from_rows(sub.dim(), cols).transpose()
            })
            .collect();
        Module { side: self.side, dim: sub.dim(), action }
    }

    /// Quotient module on the non-pivot coordinates of `sub`.
    pub fn quotient<F: Field<Elem = E>>(&self, f: &F, sub: &Subspace<E>) -> Self {
        let np = sub.non_pivots();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<E>> = np.iter().map(|&j| sub.quotient_coords(f, &m.col_vec(j))).collect();
                Matrix::from_rows(np.len(), cols).transpose()
            })
            .collect();
        Module { side: self.side, dim: np.len(), action }
    }

    pub fn direct_sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.side, other.side, "direct sum of modules on different sides");
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(f, b)).collect();
        Module { side: self.side, dim: self.dim + other.dim, action }
    }

    pub fn power<F: Field<Elem = E>>(&self, alg: &Algebra<F>, n: usize) -> Self {
        let f = alg.field();
        let mut acc = Module::zero(alg, self.side);
        for _ in 0..n {
            acc = acc.direct_sum(f, self);
        }
        acc
    }

    /// Linear dual on the dual basis: a right module becomes a left module
    /// via `(a·ξ)(m) = ξ(m·a)` and vice versa.
    pub fn dual(&self) -> Self {
        Module { side: self.side.flip(), dim: self.dim, action: self.action.iter().map(|m| m.transpose()).collect() }
    }

    /// `M·I` (right) or `I·M` (left) for a subspace `I` of the algebra.
    pub fn ideal_submodule<F: Field<Elem = E>>(&self, alg: &Algebra<F>, ideal: &Subspace<E>) -> Subspace<E> {
        let f = alg.field();
        let mut vs = Vec::new();
        for a in ideal.basis().row_iter() {
            let m = self.action_of(f, a);
            for j in 0..self.dim {
                vs.push(m.col_vec(j));
            }
        }
        Subspace::span(f, self.dim, &vs)
    }

    /// Restriction of scalars along an algebra map `B → A` whose matrix has
    /// the images of the basis of `B` as columns.
    pub fn pullback<F: Field<Elem = E>>(&self, f: &F, map: &Matrix<E>) -> Self {
        let action = (0..map.cols()).map(|j| self.action_of(f, &map.col_vec(j))).collect();
        Module { side: self.side, dim: self.dim, action }
    }

    /// The same vector space viewed as a module over the opposite algebra on
    /// the other side.
    pub fn to_opposite(&self) -> Self {
        Module { side: self.side.flip(), dim: self.dim, action: self.action.clone() }
    }
}

/// `Hom_A(M, N)` as a subspace of row-major flattened `dim N × dim M`
/// matrices.
pub fn hom_space<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, n: &Module<F::Elem>) -> Result<Subspace<F::Elem>> {
    if m.side != n.side {
        return Err(Error::Input(format!("hom between a {} and a {} module", m.side.name(), n.side.name())));
    }
    let f = alg.field();
    let (dm, dn) = (m.dim, n.dim);
    let mut kb = KernelBuilder::new(f, dm * dn);
    for &g in alg.generator_indices() {
        let (x, y) = (&m.action[g], &n.action[g]);
        kb.impose_map(f, |v| {
            let phi = Matrix::from_flat(dn, dm, v);
            phi.mul(f, x).sub(f, &y.mul(f, &phi)).into_data()
        });
        if kb.dim() == 0 {
            break;
        }
    }
    Ok(kb.into_space())
}

/// Basis of `Hom_A(M, N)` as matrices.
pub fn hom_basis<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, n: &Module<F::Elem>) -> Result<Vec<Matrix<F::Elem>>> {
    let s = hom_space(alg, m, n)?;
    Ok(s.basis().row_iter().map(|r| Matrix::from_flat(n.dim, m.dim, r)).collect())
}

/// Checks that `phi: M → N` commutes with every action matrix.
pub fn is_homomorphism<F: Field>(f: &F, m: &Module<F::Elem>, n: &Module<F::Elem>, phi: &Matrix<F::Elem>) -> bool {
    phi.rows() == n.dim
        && phi.cols() == m.dim
        && m.action.iter().zip(&n.action).all(|(x, y)| phi.mul(f, x) == y.mul(f, phi))
}
