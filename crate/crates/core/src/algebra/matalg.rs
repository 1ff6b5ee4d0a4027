//! Algebras of matrices: the unital subalgebra of `M_n` generated by a set
//! of operators, converted to structure constants while keeping the
//! defining (faithful) representation.

use alloc::format;
use alloc::vec::Vec;

use super::Algebra;
use crate::error::Result;
use crate::exactla::{Field, Matrix, Subspace};

pub struct MatrixAlgebra<F: Field> {
    pub n: usize,
    /// Span of the algebra inside flattened `n x n` matrices.
    pub span: Subspace<F::Elem>,
    /// The algebra on the RREF basis of `span`.
    pub algebra: Algebra<F>,
    /// `rep[i]` is basis element `i` as a matrix.
    pub rep: Vec<Matrix<F::Elem>>,
}

impl<F: Field> MatrixAlgebra<F> {
    /// Unital subalgebra of `M_n` generated by `gens`.
    pub fn generated_by(f: &F, n: usize, gens: &[Matrix<F::Elem>]) -> Result<Self> {
        let id = Matrix::identity(f, n);
        let mut span = Subspace::span(f, n * n, &[id.to_flat()]);
        let mut frontier = alloc::vec![id];
        while !frontier.is_empty() && !span.is_full() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.mul(f, g);
                    let flat = y.to_flat();
                    if !span.contains(f, &flat) {
                        span = span.add_vectors(f, core::slice::from_ref(&flat));
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Self::from_span(f, n, span)
    }

    /// Algebra on a span of matrices that is already closed under products.
    pub fn from_span(f: &F, n: usize, span: Subspace<F::Elem>) -> Result<Self> {
        let rep: Vec<Matrix<F::Elem>> = span.basis().row_iter().map(|r| Matrix::from_flat(n, n, r)).collect();
        let d = rep.len();
        let mut table = Vec::with_capacity(d * d);
        for a in &rep {
            for b in &rep {
                let c = span.coordinates(f, &a.mul(f, b).to_flat()).ok_or_else(|| {
                    crate::error::Error::Input("matrix span is not closed under multiplication".into())
                })?;
                table.push(c.into_iter().enumerate().filter(|(_, x)| !f.is_zero(x)).collect());
            }
        }
        let unit = span
            .coordinates(f, &Matrix::identity(f, n).to_flat())
            .ok_or_else(|| crate::error::Error::Input("matrix span does not contain the identity".into()))?;
        let labels = (0..d).map(|i| format!("e{i}")).collect();
        let algebra = Algebra::new(f.clone(), labels, table, unit)?;
        Ok(MatrixAlgebra { n, span, algebra, rep })
    }

    /// Matrix of an element given in algebra coordinates.
    pub fn matrix_of(&self, f: &F, coords: &[F::Elem]) -> Matrix<F::Elem> {
        let mut m = Matrix::zeros(f, self.n, self.n);
        for (c, r) in coords.iter().zip(&self.rep) {
            m.add_scaled(f, c, r);
        }
        m
    }

    /// Radical via the defining representation.
    pub fn radical(&self) -> Result<Subspace<F::Elem>> {
        super::radical::radical_with_rep(&self.algebra, &self.rep)
    }
}
