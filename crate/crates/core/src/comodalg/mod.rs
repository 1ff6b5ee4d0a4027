//! Comodule algebras `ρ: A → A ⊗ H`, costable ideals and `H`-simplicity.
//!
//! The coaction is stored as a `(dim A · dim H) x dim A` matrix with row
//! index `a * dim H + h`, the right comodule convention of
//! [`crate::coalgebra::Comodule`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::ideal::closure;
use crate::algebra::Algebra;
use crate::coalgebra::Comodule;
use crate::algebra::Side;
use crate::error::{Error, Result};
use crate::exactla::{linear_kernel, vecops, Field, Matrix, Subspace};
use crate::hopf::{tensor_mul, HopfAlgebra};
use crate::report::ValidationReport;

pub mod catalog;
pub mod drivers;
pub mod hopfmod;
pub mod simplicity;
#[cfg(test)]
mod tests;

pub use catalog::{builtin_comodule_algebra, COMODALG_CATALOG};
pub use drivers::{verify_comodalg_theorem, ComodalgInputs, COMODALG_THEOREMS};
pub use hopfmod::HopfModule;
pub use simplicity::{operator_simplicity, Simplicity};

#[derive(Clone, Debug)]
pub struct ComoduleAlgebra<F: Field> {
    name: String,
    algebra: Algebra<F>,
    hopf: HopfAlgebra<F>,
    rho: Matrix<F::Elem>,
}

/// An ideal together with the result of checking `ρ(I) ⊆ I ⊗ H` directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostableIdeal<E> {
    pub space: Subspace<E>,
    pub costable: bool,
    /// Rounds of operator application until the fixpoint (closures only).
    pub rounds: usize,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(name: impl Into<String>, algebra: Algebra<F>, hopf: HopfAlgebra<F>, rho: Matrix<F::Elem>) -> Result<Self> {
        if algebra.field().spec() != hopf.field().spec() {
            return Err(Error::FieldMismatch(format!("{}", algebra.field().spec()), format!("{}", hopf.field().spec())));
        }
        rho.check_shape(algebra.dim() * hopf.dim(), algebra.dim(), "coaction")?;
        Ok(ComoduleAlgebra { name: name.into(), algebra, hopf, rho })
    }

    /// `H` over itself via `Δ`.
    pub fn regular(h: &HopfAlgebra<F>) -> Self {
        let rho = h.coalgebra().comult_matrix();
        ComoduleAlgebra { name: format!("{}-regular", h.name()), algebra: h.algebra().clone(), hopf: h.clone(), rho }
    }

    /// `a ↦ a ⊗ 1`.
    pub fn trivial(algebra: &Algebra<F>, h: &HopfAlgebra<F>) -> Result<Self> {
        let f = algebra.field();
        let (da, dh) = (algebra.dim(), h.dim());
        let one = h.one();
        let mut rho = Matrix::zeros(f, da * dh, da);
        for a in 0..da {
            for (k, c) in one.iter().enumerate() {
                rho.set(a * dh + k, a, c.clone());
            }
        }
        Self::new("trivial", algebra.clone(), h.clone(), rho)
    }

    /// A right coideal subalgebra `A ⊆ H` with `ρ = Δ|_A`. Also returns the
    /// inclusion `A → H` (columns are the basis of `A` in `H`).
    pub fn coideal_subalgebra(h: &HopfAlgebra<F>, span: &Subspace<F::Elem>) -> Result<(Self, Matrix<F::Elem>)> {
        let f = h.field();
        let (alg, incl) = h.algebra().subalgebra(span)?;
        let (da, dh) = (alg.dim(), h.dim());
        let mut rho = Matrix::zeros(f, da * dh, da);
        for j in 0..da {
            let d = h.comult(&incl.col_vec(j));
            // Δ(a) = Σ_y x_y ⊗ y with x_y ∈ A.
            for y in 0..dh {
                let x: Vec<F::Elem> = (0..dh).map(|xi| d[xi * dh + y].clone()).collect();
                let c = span.coordinates(f, &x).ok_or_else(|| {
                    Error::Input(format!("Δ({}) is not in A ⊗ H", alg.label(j)))
                })?;
                for (i, ci) in c.into_iter().enumerate() {
                    rho.set(i * dh + y, j, ci);
                }
            }
        }
        Ok((Self::new(format!("{}-coideal", h.name()), alg, h.clone(), rho)?, incl))
    }

    /// `R ⊗ A` with coaction `id ⊗ ρ`; basis `(r, a)` at index `r·dim A + a`.
    pub fn tensor_left(&self, r: &Algebra<F>) -> Result<Self> {
        let f = self.field();
        let b = r.tensor(&self.algebra)?;
        let (dr, da, dh) = (r.dim(), self.algebra.dim(), self.hopf.dim());
        let mut rho = Matrix::zeros(f, dr * da * dh, dr * da);
        for ri in 0..dr {
            for a in 0..da {
                for a2 in 0..da {
                    for h in 0..dh {
                        let c = self.rho.get(a2 * dh + h, a);
                        if !f.is_zero(c) {
                            rho.set((ri * da + a2) * dh + h, ri * da + a, c.clone());
                        }
                    }
                }
            }
        }
        Self::new(format!("R⊗{}", self.name), b, self.hopf.clone(), rho)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }
    pub fn rho(&self) -> &Matrix<F::Elem> {
        &self.rho
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(A, Δ)` for some Hopf algebra `H`: the algebra is `H` and `ρ = Δ`.
    pub fn is_regular(&self) -> bool {
        self.algebra == *self.hopf.algebra() && self.rho == self.hopf.coalgebra().comult_matrix()
    }

    pub fn coact(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.rho.mul_vec(self.field(), a)
    }

    pub fn as_comodule(&self) -> Comodule<F::Elem> {
        Comodule::new(Side::Right, self.dim(), self.hopf.dim(), self.rho.clone()).expect("shape checked")
    }

    /// Product in `A ⊗ H`.
    pub fn tensor_mul(&self, s: &[F::Elem], t: &[F::Elem]) -> Vec<F::Elem> {
        tensor_mul(&self.algebra, self.hopf.algebra(), s, t)
    }

    /// Algebra axioms, comodule axioms, `ρ(ab) = ρ(a)ρ(b)` and `ρ(1) = 1⊗1`.
    /// The Hopf algebra itself is validated separately.
    pub fn validate(&self) -> ValidationReport {
        let f = self.field();
        let mut r = self.algebra.validate().prefixed("algebra");
        r.extend(self.as_comodule().validate(self.hopf.coalgebra()).prefixed("coaction"));
        let da = self.dim();
        let images: Vec<Vec<F::Elem>> = (0..da).map(|i| self.rho.col_vec(i)).collect();
        for i in 0..da {
            for j in 0..da {
                let lhs = self.coact(&self.algebra.mul(&self.algebra.basis_vector(i), &self.algebra.basis_vector(j)));
                let rhs = self.tensor_mul(&images[i], &images[j]);
                if lhs != rhs {
                    r.push(
                        "coaction multiplicativity",
                        alloc::vec![i, j],
                        format!("ρ({}·{}) ≠ ρ({})ρ({})", self.algebra.label(i), self.algebra.label(j), self.algebra.label(i), self.algebra.label(j)),
                    );
                }
            }
        }
        let one = vecops::kron(f, self.algebra.unit(), &self.hopf.one());
        if self.coact(self.algebra.unit()) != one {
            r.push("coaction unit", Vec::new(), "ρ(1) ≠ 1⊗1".into());
        }
        r
    }

    /// `(id ⊗ ξ_k) ∘ ρ` for the dual basis functional `ξ_k` of `H`.
    pub fn coefficient_operator(&self, k: usize) -> Matrix<F::Elem> {
        let f = self.field();
        let (da, dh) = (self.dim(), self.hopf.dim());
        let mut t = Matrix::zeros(f, da, da);
        for a in 0..da {
            for a2 in 0..da {
                t.set(a2, a, self.rho.get(a2 * dh + k, a).clone());
            }
        }
        t
    }

    pub fn coefficient_operators(&self) -> Vec<Matrix<F::Elem>> {
        (0..self.hopf.dim()).map(|k| self.coefficient_operator(k)).collect()
    }

    /// Left and right multiplications by basis elements and the coefficient
    /// operators: the subspaces they preserve are the costable ideals.
    pub fn ideal_operators(&self) -> Vec<Matrix<F::Elem>> {
        let mut ops: Vec<Matrix<F::Elem>> = (0..self.dim()).map(|i| self.algebra.left_regular(i)).collect();
        ops.extend((0..self.dim()).map(|i| self.algebra.right_regular(i)));
        ops.extend(self.coefficient_operators());
        ops
    }

    /// `A^H = {a : ρ(a) = a ⊗ 1}`.
    pub fn invariants(&self) -> Subspace<F::Elem> {
        let f = self.field();
        let triv = Self::trivial(&self.algebra, &self.hopf).expect("same field").rho;
        linear_kernel(f, &self.rho.sub(f, &triv))
    }

    /// `A^H` as an algebra, with its inclusion into `A`.
    pub fn invariants_subalgebra(&self) -> Result<(Algebra<F>, Matrix<F::Elem>)> {
        self.algebra.subalgebra(&self.invariants())
    }

    /// `ρ(I) ⊆ I ⊗ H`.
    pub fn is_costable(&self, space: &Subspace<F::Elem>) -> bool {
        let f = self.field();
        let ih = space.tensor(f, &Subspace::full(f, self.hopf.dim()));
        space.basis().row_iter().all(|v| ih.contains(f, &self.coact(v)))
    }

    /// Least costable ideal containing `seeds`.
    pub fn costable_closure(&self, seeds: &[Vec<F::Elem>]) -> CostableIdeal<F::Elem> {
        let (space, rounds) = operator_closure(self.field(), self.dim(), &self.ideal_operators(), seeds);
        let costable = self.is_costable(&space);
        CostableIdeal { space, costable, rounds }
    }

    /// `K = ρ⁻¹(I ⊗ H)`, the largest costable ideal inside the ideal `I`.
    pub fn largest_costable_inside(&self, ideal: &Subspace<F::Elem>) -> CostableIdeal<F::Elem> {
        let f = self.field();
        let ih = ideal.tensor(f, &Subspace::full(f, self.hopf.dim()));
        let k = ih.preimage(f, &self.rho);
        debug_assert!(ideal.contains_space(f, &k));
        let costable = self.is_costable(&k);
        CostableIdeal { space: k, costable, rounds: 1 }
    }

    /// Checks maximality of `K` inside `I`: the costable closure of every
    /// basis vector of `I` outside `K` leaves `I`.
    pub fn is_maximal_costable_inside(&self, k: &Subspace<F::Elem>, ideal: &Subspace<F::Elem>) -> bool {
        let f = self.field();
        ideal.basis().row_iter().filter(|v| !k.contains(f, v)).all(|v| {
            let c = self.costable_closure(&[v.to_vec()]);
            !ideal.contains_space(f, &c.space)
        })
    }

    pub fn is_h_simple(&self) -> Result<Simplicity<F::Elem>> {
        operator_simplicity(self.field(), self.dim(), &self.ideal_operators())
    }

    /// `(A/P ⊗ H)`-valued map `(π ⊗ id) ∘ ρ` whose kernel is the largest
    /// costable ideal inside `P`; returned as a matrix on `A`.
    pub fn reduced_coaction(&self, p: &Subspace<F::Elem>) -> Matrix<F::Elem> {
        let f = self.field();
        let np = p.non_pivots();
        let (da, dh) = (self.dim(), self.hopf.dim());
        let mut out = Matrix::zeros(f, np.len() * dh, da);
        for a in 0..da {
            let r = self.coact(&vecops::unit(f, da, a));
            for h in 0..dh {
                let x: Vec<F::Elem> = (0..da).map(|a2| r[a2 * dh + h].clone()).collect();
                for (i, c) in p.quotient_coords(f, &x).into_iter().enumerate() {
                    out.set(i * dh + h, a, c);
                }
            }
        }
        out
    }
}

/// Least subspace of `F^n` containing `seeds` and stable under `ops`, with
/// the number of rounds needed.
pub fn operator_closure<F: Field>(f: &F, n: usize, ops: &[Matrix<F::Elem>], seeds: &[Vec<F::Elem>]) -> (Subspace<F::Elem>, usize) {
    let mut space = Subspace::span(f, n, seeds);
    let mut frontier: Vec<Vec<F::Elem>> = space.basis_vectors();
    let mut rounds = 0;
    while !frontier.is_empty() && !space.is_full() {
        rounds += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for op in ops {
                let w = op.mul_vec(f, v);
                if !space.contains(f, &w) {
                    space = space.add_vectors(f, core::slice::from_ref(&w));
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    (space, rounds)
}

/// The ordinary two-sided ideal generated by `seeds`; used to compare with
/// costable closures under a trivial coaction.
pub fn plain_ideal<F: Field>(alg: &Algebra<F>, seeds: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
    closure(alg, seeds, true, true)
}
