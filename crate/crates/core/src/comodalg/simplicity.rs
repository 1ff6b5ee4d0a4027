//! Simplicity of `F^n` as a module over the algebra generated by a set of
//! operators.
//!
//! With `E` the generated algebra: a nonzero radical gives the proper
//! submodule `rad(E)·F^n`. Otherwise `F^n` is semisimple and is simple iff
//! the commutant `End_E(F^n)` is a division algebra; a nontrivial
//! idempotent of the commutant gives a proper submodule as its image.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::matalg::MatrixAlgebra;
use crate::error::Result;
use crate::exactla::{Field, KernelBuilder, Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity<E> {
    /// No proper nonzero invariant subspace; `end_dim` is the dimension of
    /// the commutant.
    Simple { end_dim: usize },
    /// `witness` is a proper nonzero invariant subspace, verified.
    NotSimple { witness: Subspace<E> },
    Inconclusive { reason: String },
}

impl<E> Simplicity<E> {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple { .. })
    }
}

/// Matrices commuting with every operator.
pub fn commutant<F: Field>(f: &F, n: usize, ops: &[Matrix<F::Elem>]) -> Subspace<F::Elem> {
    let mut kb = KernelBuilder::new(f, n * n);
    for g in ops {
        kb.impose_map(f, |x| {
            let x = Matrix::from_flat(n, n, x);
            x.mul(f, g).sub(f, &g.mul(f, &x)).to_flat()
        });
    }
    kb.into_space()
}

fn is_invariant<F: Field>(f: &F, ops: &[Matrix<F::Elem>], s: &Subspace<F::Elem>) -> bool {
    s.basis().row_iter().all(|v| ops.iter().all(|g| s.contains(f, &g.mul_vec(f, v))))
}

fn image<F: Field>(f: &F, n: usize, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|j| m.col_vec(j)).collect();
    Subspace::span(f, n, &cols)
}

pub fn operator_simplicity<F: Field>(f: &F, n: usize, ops: &[Matrix<F::Elem>]) -> Result<Simplicity<F::Elem>> {
    if n == 0 {
        return Ok(Simplicity::Inconclusive { reason: "the zero space is not simple by convention".into() });
    }
    let e = MatrixAlgebra::generated_by(f, n, ops)?;
    let rad = e.radical()?;
    if !rad.is_zero() {
        let mut vs = Vec::new();
        for r in rad.basis().row_iter() {
            let m = e.matrix_of(f, r);
            vs.extend((0..n).map(|j| m.col_vec(j)));
        }
        let witness = Subspace::span(f, n, &vs);
        debug_assert!(!witness.is_zero() && !witness.is_full() && is_invariant(f, ops, &witness));
        return Ok(Simplicity::NotSimple { witness });
    }
    let comm = commutant(f, n, ops);
    if comm.dim() == 1 {
        return Ok(Simplicity::Simple { end_dim: 1 });
    }
    let end = MatrixAlgebra::from_span(f, n, comm)?;
    let w = match end.algebra.wedderburn() {
        Ok(w) => w,
        Err(err) => return Ok(Simplicity::Inconclusive { reason: format!("commutant decomposition failed: {err}") }),
    };
    debug_assert!(w.is_semisimple());
    if !w.is_local() {
        let idem = if w.block_count() > 1 { &w.central_idempotents[0] } else { &w.primitive_idempotents[0] };
        // The radical is zero, so the quotient coordinates are those of `end`.
        let witness = image(f, n, &end.matrix_of(f, idem));
        if witness.is_zero() || witness.is_full() || !is_invariant(f, ops, &witness) {
            return Ok(Simplicity::Inconclusive { reason: "commutant idempotent did not give a proper submodule".into() });
        }
        return Ok(Simplicity::NotSimple { witness });
    }
    let end_dim = end.algebra.dim();
    if f.order().is_some() || end.algebra.is_commutative() {
        // Finite division rings are fields; a commutative semisimple local
        // algebra is a field.
        Ok(Simplicity::Simple { end_dim })
    } else {
        Ok(Simplicity::Inconclusive { reason: format!("commutant of dimension {end_dim} is a noncommutative division candidate over Q") })
    }
}
