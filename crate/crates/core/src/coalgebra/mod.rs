//! Finite-dimensional coalgebras, their duals, coradical, coideals and
//! quotient coalgebras.
//!
//! Tensors `C ⊗ C` use the index `i * dim + j` for `b_i ⊗ b_j`, and all
//! maps act on column vectors, so `Δ` is a `dim² x dim` matrix.

pub mod comodule;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Matrix, Subspace};
use crate::report::ValidationReport;

pub use comodule::{comodule_part, cotensor, Comodule};

/// Sparse coproduct of a basis element: `(i, j, c)` stands for `c b_i ⊗ b_j`.
pub type Coproduct<E> = Vec<(usize, usize, E)>;

#[derive(Clone, Debug)]
pub struct Coalgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    comult: Vec<Coproduct<F::Elem>>,
    counit: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Coalgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.comult == other.comult && self.counit == other.counit
    }
}

fn canonical_coproduct<F: Field>(f: &F, d: usize, entries: &[(usize, usize, F::Elem)]) -> Result<Coproduct<F::Elem>> {
    let mut dense: Vec<F::Elem> = vec![f.zero(); d * d];
    for (i, j, c) in entries {
        if *i >= d || *j >= d {
            return Err(Error::Input("coproduct index out of range".into()));
        }
        let slot = &mut dense[i * d + j];
        *slot = f.add(slot, c);
    }
    Ok(dense_to_coproduct(f, d, &dense))
}

fn dense_to_coproduct<F: Field>(f: &F, d: usize, dense: &[F::Elem]) -> Coproduct<F::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(t, c)| (t / d, t % d, c.clone()))
        .collect()
}

impl<F: Field> Coalgebra<F> {
    pub fn new(field: F, labels: Vec<String>, comult: Vec<Coproduct<F::Elem>>, counit: Vec<F::Elem>) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Input("a coalgebra needs dimension at least 1".into()));
        }
        if comult.len() != d || counit.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "coalgebra of dimension {d} given {} coproducts and a counit of length {}",
                comult.len(),
                counit.len()
            )));
        }
        let comult = comult.iter().map(|e| canonical_coproduct(&field, d, e)).collect::<Result<Vec<_>>>()?;
        Ok(Coalgebra { field, labels, comult, counit })
    }

    /// Builds a coalgebra from `Δ` as a `dim² x dim` matrix.
    pub fn from_matrix(field: F, labels: Vec<String>, delta: &Matrix<F::Elem>, counit: Vec<F::Elem>) -> Result<Self> {
        let d = labels.len();
        delta.check_shape(d * d, d, "comultiplication")?;
        let comult = (0..d).map(|k| dense_to_coproduct(&field, d, &delta.col_vec(k))).collect();
        Coalgebra::new(field, labels, comult, counit)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn counit(&self) -> &[F::Elem] {
        &self.counit
    }
    pub fn coproduct(&self, k: usize) -> &[(usize, usize, F::Elem)] {
        &self.comult[k]
    }

    /// `Δ` as a `dim² x dim` matrix.
    pub fn comult_matrix(&self) -> Matrix<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut m = Matrix::zeros(f, d * d, d);
        for (k, cp) in self.comult.iter().enumerate() {
            for (i, j, c) in cp {
                m.set(i * d + j, k, c.clone());
            }
        }
        m
    }

    /// `ε` as a `1 x dim` matrix.
    pub fn counit_matrix(&self) -> Matrix<F::Elem> {
        Matrix::from_vec(1, self.dim(), self.counit.clone())
    }

    pub fn comult(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![f.zero(); d * d];
        for (k, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, j, c) in &self.comult[k] {
                f.add_mul_assign(&mut out[i * d + j], x, c);
            }
        }
        out
    }

    pub fn apply_counit(&self, v: &[F::Elem]) -> F::Elem {
        vecops::dot(&self.field, &self.counit, v)
    }

    pub fn describe_tensor(&self, t: &[F::Elem]) -> String {
        let f = &self.field;
        let d = self.dim();
        let mut terms = Vec::new();
        for (idx, c) in t.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let name = format!("{}⊗{}", self.labels[idx / d], self.labels[idx % d]);
            terms.push(if f.is_one(c) { name } else { format!("{}*{}", f.format(c), name) });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Coassociativity and both counit laws on every basis element.
    pub fn validate(&self) -> ValidationReport {
        let f = &self.field;
        let d = self.dim();
        let mut report = ValidationReport::new();
        let delta = self.comult_matrix();
        let id = Matrix::identity(f, d);
        let lhs = delta.kron(f, &id).mul(f, &delta);
        let rhs = id.kron(f, &delta).mul(f, &delta);
        let left = self.counit_matrix().kron(f, &id).mul(f, &delta);
        let right = id.kron(f, &self.counit_matrix()).mul(f, &delta);
        for k in 0..d {
            if lhs.col_vec(k) != rhs.col_vec(k) {
                report.push("coassociativity", vec![k], format!("(Δ⊗id)Δ({0}) != (id⊗Δ)Δ({0})", self.labels[k]));
            }
            for (name, m) in [("left counit", &left), ("right counit", &right)] {
                let ok = (0..d).all(|r| if r == k { f.is_one(m.get(r, k)) } else { f.is_zero(m.get(r, k)) });
                if !ok {
                    report.push(name, vec![k], format!("{name} law fails on {}", self.labels[k]));
                }
            }
        }
        report
    }

    /// The dual algebra `C*` on the dual basis: `(ξη)(c) = Σ ξ(c₁)η(c₂)`.
    pub fn dual_algebra(&self) -> Result<Algebra<F>> {
        let f = &self.field;
        let d = self.dim();
        let mut table: Vec<SparseVec<F::Elem>> = vec![Vec::new(); d * d];
        for (k, cp) in self.comult.iter().enumerate() {
            for (i, j, c) in cp {
                table[i * d + j].push((k, c.clone()));
            }
        }
        let labels = self.labels.iter().map(|l| dual_label(l)).collect();
        let _ = f;
        Algebra::new(self.field.clone(), labels, table, self.counit.clone())
    }

    /// The dual coalgebra `A*` of an algebra: `Δ(ξ)(a ⊗ b) = ξ(ab)`.
    pub fn dual_of_algebra(alg: &Algebra<F>) -> Result<Self> {
        let d = alg.dim();
        let mut comult: Vec<Coproduct<F::Elem>> = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in alg.basis_product(i, j) {
                    comult[*k].push((i, j, c.clone()));
                }
            }
        }
        let labels = alg.labels().iter().map(|l| dual_label(l)).collect();
        Coalgebra::new(alg.field().clone(), labels, comult, alg.unit().to_vec())
    }

    /// Whether `(m ⊗ m) Δ = Δ' m` and `ε' m = ε` for `m: self → other`.
    pub fn is_coalgebra_map(&self, other: &Coalgebra<F>, m: &Matrix<F::Elem>) -> bool {
        let f = &self.field;
        if m.rows() != other.dim() || m.cols() != self.dim() {
            return false;
        }
        let lhs = m.kron(f, m).mul(f, &self.comult_matrix());
        let rhs = other.comult_matrix().mul(f, m);
        lhs == rhs && other.counit_matrix().mul(f, m).data() == self.counit.as_slice()
    }

    /// `None` if `Δ(s) ⊆ s ⊗ s`, else the first offending basis vector.
    pub fn subcoalgebra_violation(&self, s: &Subspace<F::Elem>) -> Option<String> {
        let f = &self.field;
        let ss = s.tensor(f, s);
        for (r, v) in s.basis().row_iter().enumerate() {
            let dv = self.comult(v);
            if !ss.contains(f, &dv) {
                return Some(format!("Δ of basis vector {r} ({}) is not in S⊗S", crate::algebra::describe_vector(f, &self.labels, v)));
            }
        }
        None
    }

    pub fn is_subcoalgebra(&self, s: &Subspace<F::Elem>) -> bool {
        self.subcoalgebra_violation(s).is_none()
    }

    /// `None` if `ε(I) = 0` and `Δ(I) ⊆ I⊗C + C⊗I`, else the violated
    /// inclusion.
    pub fn coideal_violation(&self, i: &Subspace<F::Elem>) -> Option<String> {
        let f = &self.field;
        let d = self.dim();
        let full = Subspace::full(f, d);
        for v in i.basis().row_iter() {
            if !f.is_zero(&self.apply_counit(v)) {
                return Some(format!("ε({}) != 0", crate::algebra::describe_vector(f, &self.labels, v)));
            }
        }
        let sum = i.tensor(f, &full).sum(f, &full.tensor(f, i));
        for v in i.basis().row_iter() {
            if !sum.contains(f, &self.comult(v)) {
                return Some(format!("Δ({}) is not in I⊗C + C⊗I", crate::algebra::describe_vector(f, &self.labels, v)));
            }
        }
        None
    }

    pub fn is_coideal(&self, i: &Subspace<F::Elem>) -> bool {
        self.coideal_violation(i).is_none()
    }

    /// `C/I` on the images of the non-pivot basis vectors of `I`, with the
    /// projection `C → C/I`.
    pub fn quotient(&self, i: &Subspace<F::Elem>) -> Result<(Coalgebra<F>, Matrix<F::Elem>)> {
        if let Some(v) = self.coideal_violation(i) {
            return Err(Error::NotCoideal(v));
        }
        let f = &self.field;
        let d = self.dim();
        let np = i.non_pivots();
        let q = np.len();
        let mut proj = Matrix::zeros(f, q, d);
        for k in 0..d {
            let c = i.quotient_coords(f, &vecops::unit(f, d, k));
            for (r, x) in c.into_iter().enumerate() {
                proj.set(r, k, x);
            }
        }
        let pp = proj.kron(f, &proj);
        let mut comult = Vec::with_capacity(q);
        let mut counit = Vec::with_capacity(q);
        for &k in &np {
            let t = pp.mul_vec(f, &self.comult(&vecops::unit(f, d, k)));
            comult.push(dense_to_coproduct(f, q, &t));
            counit.push(self.counit[k].clone());
        }
        let labels = np.iter().map(|&k| format!("[{}]", self.labels[k])).collect();
        let quot = Coalgebra::new(f.clone(), labels, comult, counit)?;
        if !self.is_coalgebra_map(&quot, &proj) {
            return Err(Error::Inconclusive("quotient projection is not a coalgebra map".into()));
        }
        Ok((quot, proj))
    }

    /// Coradical (annihilator of the radical of `C*`) and the simple
    /// subcoalgebras (annihilators of the maximal ideals of `C*`).
    pub fn coradical_and_simples(&self) -> Result<Coradical<F::Elem>> {
        let f = &self.field;
        let dual = self.dual_algebra()?;
        let w = dual.wedderburn()?;
        let coradical = w.radical.annihilator(f);
        let simples: Vec<Subspace<F::Elem>> = w.max_ideals.iter().map(|m| m.annihilator(f)).collect();
        let total = simples.iter().fold(Subspace::zero(f, self.dim()), |acc, s| acc.sum(f, s));
        if total != coradical {
            return Err(Error::Inconclusive("simple subcoalgebras do not sum to the coradical".into()));
        }
        for s in &simples {
            if !self.is_subcoalgebra(s) {
                return Err(Error::Inconclusive("annihilator of a maximal ideal is not a subcoalgebra".into()));
            }
        }
        Ok(Coradical { coradical, simples })
    }

    /// Sums of simple subcoalgebras over all subsets, plus the whole
    /// coalgebra, without duplicates. Capped at 2^10 subsets.
    pub fn subcoalgebra_lattice(&self) -> Result<Vec<Subspace<F::Elem>>> {
        let f = &self.field;
        let cr = self.coradical_and_simples()?;
        let k = cr.simples.len().min(10);
        let mut out: Vec<Subspace<F::Elem>> = Vec::new();
        for mask in 0u32..(1 << k) {
            let s = (0..k).filter(|i| mask >> i & 1 == 1).fold(Subspace::zero(f, self.dim()), |acc, i| acc.sum(f, &cr.simples[i]));
            if !out.contains(&s) {
                out.push(s);
            }
        }
        let full = Subspace::full(f, self.dim());
        if !out.contains(&full) {
            out.push(full);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coradical<E> {
    pub coradical: Subspace<E>,
    pub simples: Vec<Subspace<E>>,
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.into(),
        None => format!("{l}*"),
    }
}

/// The group-like coalgebra on `n` points: `Δ(g) = g⊗g`, `ε(g) = 1`.
pub fn grouplike<F: Field>(f: &F, labels: Vec<String>) -> Result<Coalgebra<F>> {
    let n = labels.len();
    let comult = (0..n).map(|i| vec![(i, i, f.one())]).collect();
    Coalgebra::new(f.clone(), labels, comult, vec![f.one(); n])
}

/// The `n x n` matrix coalgebra: `Δ(c_ij) = Σ_l c_il ⊗ c_lj`, `ε(c_ij) = δ_ij`.
pub fn matrix_coalgebra<F: Field>(f: &F, n: usize) -> Result<Coalgebra<F>> {
    let idx = |i: usize, j: usize| i * n + j;
    let mut comult = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            comult.push((0..n).map(|l| (idx(i, l), idx(l, j), f.one())).collect());
            counit.push(if i == j { f.one() } else { f.zero() });
            labels.push(format!("c{}{}", i + 1, j + 1));
        }
    }
    Coalgebra::new(f.clone(), labels, comult, counit)
}

#[cfg(test)]
mod tests;
