//! Finite-dimensional Hopf algebras: an algebra and a coalgebra on the same
//! basis with an antipode.

pub mod catalog;
pub mod ni89b;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Matrix};
use crate::report::ValidationReport;

pub use catalog::{builtin, Group, CATALOG};

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra<F: Field> {
    name: String,
    algebra: Algebra<F>,
    coalgebra: Coalgebra<F>,
    antipode: Matrix<F::Elem>,
    antipode_inverse: Option<Matrix<F::Elem>>,
    notes: Vec<String>,
}

impl<F: Field> HopfAlgebra<F> {
    /// Assembles a Hopf algebra. Shapes are checked; the axioms are not
    /// (see [`HopfAlgebra::validate`]).
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra<F>,
        coalgebra: Coalgebra<F>,
        antipode: Matrix<F::Elem>,
        antipode_inverse: Option<Matrix<F::Elem>>,
    ) -> Result<Self> {
        let d = algebra.dim();
        if coalgebra.dim() != d {
            return Err(Error::DimensionMismatch(format!("algebra has dimension {d}, coalgebra {}", coalgebra.dim())));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch(algebra.field().spec().to_string(), coalgebra.field().spec().to_string()));
        }
        antipode.check_shape(d, d, "antipode")?;
        if let Some(s) = &antipode_inverse {
            s.check_shape(d, d, "antipode inverse")?;
        }
        Ok(HopfAlgebra { name: name.into(), algebra, coalgebra, antipode, antipode_inverse, notes: Vec::new() })
    }

    /// Fills in the antipode inverse by inverting the antipode matrix, if
    /// it is invertible.
    pub fn with_antipode_inverse(mut self) -> Self {
        if self.antipode_inverse.is_none() {
            self.antipode_inverse = self.antipode.inverse(self.field());
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn notes(&self) -> &[String] {
        &self.notes
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.coalgebra
    }
    pub fn antipode(&self) -> &Matrix<F::Elem> {
        &self.antipode
    }
    pub fn antipode_inverse(&self) -> Option<&Matrix<F::Elem>> {
        self.antipode_inverse.as_ref()
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.algebra.mul(a, b)
    }
    pub fn comult(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.coalgebra.comult(v)
    }
    pub fn counit(&self, v: &[F::Elem]) -> F::Elem {
        self.coalgebra.apply_counit(v)
    }
    pub fn apply_antipode(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.antipode.mul_vec(self.field(), v)
    }
    pub fn one(&self) -> Vec<F::Elem> {
        self.algebra.unit().to_vec()
    }

    /// Product in `H ⊗ H` of dense tensors.
    pub fn tensor_mul(&self, s: &[F::Elem], t: &[F::Elem]) -> Vec<F::Elem> {
        tensor_mul(&self.algebra, &self.algebra, s, t)
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|k| {
            let t = self.comult(&vecops::unit(self.field(), d, k));
            (0..d).all(|i| (0..d).all(|j| t[i * d + j] == t[j * d + i]))
        })
    }

    /// Every axiom instance that fails: algebra and coalgebra axioms,
    /// multiplicativity of `Δ` and `ε`, the antipode laws, and (as a derived
    /// check) anti-multiplicativity of the antipode.
    pub fn validate(&self) -> ValidationReport {
        let f = self.field();
        let d = self.dim();
        let mut report = self.algebra.validate().prefixed("algebra");
        report.extend(self.coalgebra.validate().prefixed("coalgebra"));
        let label = |i: usize| self.labels()[i].clone();
        let basis: Vec<Vec<F::Elem>> = (0..d).map(|i| vecops::unit(f, d, i)).collect();
        let deltas: Vec<Vec<F::Elem>> = basis.iter().map(|b| self.comult(b)).collect();
        let eps: Vec<F::Elem> = self.coalgebra.counit().to_vec();
        let s_basis: Vec<Vec<F::Elem>> = (0..d).map(|i| self.antipode.col_vec(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul(&basis[i], &basis[j]);
                if self.comult(&prod) != self.tensor_mul(&deltas[i], &deltas[j]) {
                    report.push("comultiplicativity", vec![i, j], format!("Δ({0}{1}) != Δ({0})Δ({1})", label(i), label(j)));
                }
                if self.counit(&prod) != f.mul(&eps[i], &eps[j]) {
                    report.push("counit multiplicativity", vec![i, j], format!("ε({0}{1}) != ε({0})ε({1})", label(i), label(j)));
                }
                let lhs = self.apply_antipode(&prod);
                let rhs = self.mul(&s_basis[j], &s_basis[i]);
                if lhs != rhs {
                    report.push("antipode anti-multiplicativity", vec![i, j], format!("s({0}{1}) != s({1})s({0})", label(i), label(j)));
                }
            }
        }
        let one = self.one();
        let one_one = vecops::kron(f, &one, &one);
        if self.comult(&one) != one_one {
            report.push("comultiplication unit", vec![], "Δ(1) != 1⊗1".into());
        }
        if !f.is_one(&self.counit(&one)) {
            report.push("counit unit", vec![], "ε(1) != 1".into());
        }
        for k in 0..d {
            let mut left = vecops::zero(f, d);
            let mut right = vecops::zero(f, d);
            for (i, j, c) in self.coalgebra.coproduct(k) {
                vecops::axpy(f, &mut left, c, &self.mul(&s_basis[*i], &basis[*j]));
                vecops::axpy(f, &mut right, c, &self.mul(&basis[*i], &s_basis[*j]));
            }
            let target = vecops::scale(f, &eps[k], &one);
            if left != target {
                report.push("antipode left", vec![k], format!("Σ s(h1)h2 != ε(h)1 for h = {}", label(k)));
            }
            if right != target {
                report.push("antipode right", vec![k], format!("Σ h1 s(h2) != ε(h)1 for h = {}", label(k)));
            }
        }
        if let Some(si) = &self.antipode_inverse {
            if !si.mul(f, &self.antipode).is_identity(f) || !self.antipode.mul(f, si).is_identity(f) {
                report.push("antipode inverse", vec![], "antipode inverse is not a two-sided inverse".into());
            }
        }
        report
    }

    /// The dual Hopf algebra `H*` on the dual basis.
    pub fn dual(&self) -> Result<Self> {
        let algebra = self.coalgebra.dual_algebra()?;
        let coalgebra = Coalgebra::dual_of_algebra(&self.algebra)?;
        let s = self.antipode.transpose();
        let si = self.antipode_inverse.as_ref().map(|m| m.transpose());
        let name = match self.name.strip_suffix('*') {
            Some(b) => String::from(b),
            None => format!("{}*", self.name),
        };
        HopfAlgebra::new(name, algebra, coalgebra, s, si)
    }

    /// Same coalgebra, opposite multiplication, antipode `s⁻¹`. Used for
    /// the anti-Hopf variant of the coideal suite.
    pub fn opposite_algebra(&self) -> Result<Self> {
        let si = self
            .antipode_inverse
            .clone()
            .or_else(|| self.antipode.inverse(self.field()))
            .ok_or_else(|| Error::Input("antipode is not bijective".into()))?;
        HopfAlgebra::new(format!("{}^op", self.name), self.algebra.opposite(), self.coalgebra.clone(), si, Some(self.antipode.clone()))
    }

    /// Order of the antipode as a linear map, if at most `limit`.
    pub fn antipode_order(&self, limit: u64) -> Option<u64> {
        let f = self.field();
        let mut p = self.antipode.clone();
        for k in 1..=limit {
            if p.is_identity(f) {
                return Some(k);
            }
            p = p.mul(f, &self.antipode);
        }
        None
    }

    /// Copy with a single field replaced; used by mutation tests.
    pub fn with_parts(&self, algebra: Algebra<F>, coalgebra: Coalgebra<F>, antipode: Matrix<F::Elem>) -> Result<Self> {
        HopfAlgebra::new(self.name.clone(), algebra, coalgebra, antipode, self.antipode_inverse.clone())
    }
}

/// Product in `A ⊗ B` of dense tensors (index `i * dim B + j`).
pub fn tensor_mul<F: Field>(a: &Algebra<F>, b: &Algebra<F>, s: &[F::Elem], t: &[F::Elem]) -> Vec<F::Elem> {
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let mut out = vec![f.zero(); da * db];
    for (x, cx) in s.iter().enumerate() {
        if f.is_zero(cx) {
            continue;
        }
        let (i, j) = (x / db, x % db);
        for (y, cy) in t.iter().enumerate() {
            if f.is_zero(cy) {
                continue;
            }
            let (k, l) = (y / db, y % db);
            let c = f.mul(cx, cy);
            for (p, u) in a.basis_product(i, k) {
                let cu = f.mul(&c, u);
                for (q, v) in b.basis_product(j, l) {
                    f.add_mul_assign(&mut out[p * db + q], &cu, v);
                }
            }
        }
    }
    out
}

/// All single-entry mutations of the structure constants (multiplication,
/// comultiplication, counit, unit, antipode), each entry increased by one.
pub fn single_constant_mutations<F: Field>(h: &HopfAlgebra<F>) -> Vec<(String, HopfAlgebra<F>)> {
    let f = h.field();
    let d = h.dim();
    let one = f.one();
    let mut out = Vec::new();
    let alg = h.algebra();
    let dense_table: Vec<Vec<F::Elem>> = (0..d * d)
        .map(|t| {
            let mut v = vecops::zero(f, d);
            for (k, c) in alg.basis_product(t / d, t % d) {
                v[*k] = c.clone();
            }
            v
        })
        .collect();
    let build_alg = |table: &[Vec<F::Elem>], unit: &[F::Elem]| {
        Algebra::from_fn(f.clone(), alg.labels().to_vec(), unit.to_vec(), |i, j| table[i * d + j].clone()).expect("shape")
    };
    for t in 0..d * d {
        for k in 0..d {
            let mut table = dense_table.clone();
            table[t][k] = f.add(&table[t][k], &one);
            let a = build_alg(&table, alg.unit());
            out.push((format!("mult[{},{}][{k}]", t / d, t % d), h.with_parts(a, h.coalgebra().clone(), h.antipode().clone()).expect("shape")));
        }
    }
    for k in 0..d {
        let mut unit = alg.unit().to_vec();
        unit[k] = f.add(&unit[k], &one);
        let a = build_alg(&dense_table, &unit);
        out.push((format!("unit[{k}]"), h.with_parts(a, h.coalgebra().clone(), h.antipode().clone()).expect("shape")));
    }
    let delta = h.coalgebra().comult_matrix();
    for r in 0..d * d {
        for k in 0..d {
            let mut m = delta.clone();
            m.set(r, k, f.add(delta.get(r, k), &one));
            let c = Coalgebra::from_matrix(f.clone(), h.labels().to_vec(), &m, h.coalgebra().counit().to_vec()).expect("shape");
            out.push((format!("comult[{k}][{},{}]", r / d, r % d), h.with_parts(alg.clone(), c, h.antipode().clone()).expect("shape")));
        }
    }
    for k in 0..d {
        let mut eps = h.coalgebra().counit().to_vec();
        eps[k] = f.add(&eps[k], &one);
        let c = Coalgebra::from_matrix(f.clone(), h.labels().to_vec(), &delta, eps).expect("shape");
        out.push((format!("counit[{k}]"), h.with_parts(alg.clone(), c, h.antipode().clone()).expect("shape")));
    }
    for r in 0..d {
        for c in 0..d {
            let mut s = h.antipode().clone();
            s.set(r, c, f.add(s.get(r, c), &one));
            out.push((format!("antipode[{r},{c}]"), h.with_parts(alg.clone(), h.coalgebra().clone(), s).expect("shape")));
        }
    }
    out
}

#[cfg(test)]
mod tests;
