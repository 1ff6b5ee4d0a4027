//! Finite-dimensional associative unital algebras given by structure
//! constants, together with their modules, ideals, radical and Wedderburn
//! data, and the projectivity/freeness/Frobenius decision procedures.

pub mod ideal;
pub mod matalg;
pub mod module;
pub mod oracles;
pub mod probe;
pub mod radical;
pub mod wedderburn;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Matrix, Subspace};
use crate::report::ValidationReport;

pub use ideal::{ideal_closure, Ideal};
pub use module::{Module, Side};
pub use wedderburn::WedderburnData;

/// Sparse product of two basis elements: `(index, coefficient)` pairs.
pub type SparseVec<E> = Vec<(usize, E)>;

/// A finite-dimensional unital algebra `b_i b_j = Σ_k c_{ij}^k b_k`.
pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    table: Vec<SparseVec<F::Elem>>,
    unit: Vec<F::Elem>,
    generators: OnceBox<Vec<usize>>,
    wedderburn: OnceBox<Result<WedderburnData<F>>>,
}

impl<F: Field> Clone for Algebra<F> {
    fn clone(&self) -> Self {
        Algebra {
            field: self.field.clone(),
            labels: self.labels.clone(),
            table: self.table.clone(),
            unit: self.unit.clone(),
            generators: OnceBox::new(),
            wedderburn: OnceBox::new(),
        }
    }
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("field", &self.field.spec()).field("labels", &self.labels).finish()
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.table == other.table && self.unit == other.unit
    }
}

/// Default basis labels `b0, b1, ...`.
pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn sparse<F: Field>(f: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (i, c.clone())).collect()
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from a sparse multiplication table indexed by
    /// `i * dim + j`. Axioms are not checked; see [`Algebra::validate`].
    pub fn new(
        field: F,
        labels: Vec<String>,
        table: Vec<SparseVec<F::Elem>>,
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Input("an algebra needs dimension at least 1".into()));
        }
        if table.len() != d * d {
            return Err(Error::DimensionMismatch(format!("multiplication table has {} entries, expected {}", table.len(), d * d)));
        }
        if unit.len() != d {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {d}", unit.len())));
        }
        let mut table = table;
        for entry in &mut table {
            if entry.iter().any(|(k, _)| *k >= d) {
                return Err(Error::Input("structure constant index out of range".into()));
            }
            // Merge duplicate indices and drop zeros so equality is canonical.
            let mut dense = vec![field.zero(); d];
            for (k, c) in entry.iter() {
                dense[*k] = field.add(&dense[*k], c);
            }
            *entry = sparse(&field, &dense);
        }
        Ok(Algebra { field, labels, table, unit, generators: OnceBox::new(), wedderburn: OnceBox::new() })
    }

    /// Builds an algebra from a function giving the product of basis
    /// elements as a dense coordinate vector.
    pub fn from_fn(
        field: F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        product: impl Fn(usize, usize) -> Vec<F::Elem>,
    ) -> Result<Self> {
        let d = labels.len();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let p = product(i, j);
                if p.len() != d {
                    return Err(Error::DimensionMismatch(format!("product b{i}*b{j} has length {}", p.len())));
                }
                table.push(sparse(&field, &p));
            }
        }
        Algebra::new(field, labels, table, unit)
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
    pub fn index_of_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }
    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        vecops::unit(&self.field, self.dim(), i)
    }
    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vecops::zero(&self.field, self.dim())
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in &self.table[i * d + j] {
                    f.add_mul_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    /// `a * b_j` for a basis element `b_j`.
    pub fn mul_basis_right(&self, a: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (k, c) in &self.table[i * d + j] {
                f.add_mul_assign(&mut out[*k], x, c);
            }
        }
        out
    }

    /// `b_i * a` for a basis element `b_i`.
    pub fn mul_basis_left(&self, i: usize, a: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (j, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (k, c) in &self.table[i * d + j] {
                f.add_mul_assign(&mut out[*k], x, c);
            }
        }
        out
    }

    pub fn pow(&self, a: &[F::Elem], e: u64) -> Vec<F::Elem> {
        let mut acc = self.unit.clone();
        let mut base = a.to_vec();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of `x ↦ a x` on column coordinate vectors.
    pub fn left_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let d = self.dim();
        let cols: Vec<Vec<F::Elem>> = (0..d).map(|k| self.mul_basis_right(a, k)).collect();
        Matrix::from_rows(d, cols).transpose()
    }

    /// Matrix of `x ↦ x a` on column coordinate vectors.
    pub fn right_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let d = self.dim();
        let cols: Vec<Vec<F::Elem>> = (0..d).map(|k| self.mul_basis_left(k, a)).collect();
        Matrix::from_rows(d, cols).transpose()
    }

    pub fn left_regular(&self, i: usize) -> Matrix<F::Elem> {
        self.left_mul_matrix(&self.basis_vector(i))
    }

    pub fn right_regular(&self, i: usize) -> Matrix<F::Elem> {
        self.right_mul_matrix(&self.basis_vector(i))
    }

    /// Checks associativity on all basis triples and the unit laws.
    pub fn validate(&self) -> ValidationReport {
        let f = &self.field;
        let d = self.dim();
        let mut report = ValidationReport::new();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let mut lhs = vec![f.zero(); d];
                    for (l, c) in ij {
                        for (m, e) in self.basis_product(*l, k) {
                            f.add_mul_assign(&mut lhs[*m], c, e);
                        }
                    }
                    let mut rhs = vec![f.zero(); d];
                    for (l, c) in self.basis_product(j, k) {
                        for (m, e) in self.basis_product(i, *l) {
                            f.add_mul_assign(&mut rhs[*m], c, e);
                        }
                    }
                    if lhs != rhs {
                        report.push(
                            "associativity",
                            vec![i, j, k],
                            format!("({}*{})*{} != {}*({}*{})", self.labels[i], self.labels[j], self.labels[k], self.labels[i], self.labels[j], self.labels[k]),
                        );
                    }
                }
            }
        }
        for i in 0..d {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b {
                report.push("left unit", vec![i], format!("1*{} != {}", self.labels[i], self.labels[i]));
            }
            if self.mul(&b, &self.unit) != b {
                report.push("right unit", vec![i], format!("{}*1 != {}", self.labels[i], self.labels[i]));
            }
        }
        report
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.table[i * d + j] == self.table[j * d + i]))
    }

    /// The opposite algebra (same basis, reversed products).
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        let table = (0..d * d).map(|ij| self.table[(ij % d) * d + ij / d].clone()).collect();
        Algebra::new(self.field.clone(), self.labels.clone(), table, self.unit.clone()).expect("valid shape")
    }

    /// `A ⊗ B` on the basis `a_i ⊗ b_j` with index `i * dim(B) + j`.
    pub fn tensor(&self, other: &Algebra<F>) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{}", self.field.spec()), format!("{}", other.field.spec())));
        }
        let f = &self.field;
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let mut labels = Vec::with_capacity(d);
        for i in 0..da {
            for j in 0..db {
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
            }
        }
        let mut table = Vec::with_capacity(d * d);
        for x in 0..d {
            let (i, j) = (x / db, x % db);
            for y in 0..d {
                let (k, l) = (y / db, y % db);
                let mut entry = Vec::new();
                for (p, c) in self.basis_product(i, k) {
                    for (q, e) in other.basis_product(j, l) {
                        entry.push((p * db + q, f.mul(c, e)));
                    }
                }
                table.push(entry);
            }
        }
        let unit = vecops::kron(f, &self.unit, &other.unit);
        Algebra::new(f.clone(), labels, table, unit)
    }

    /// Closure of `gens ∪ {1}` under multiplication.
    pub fn subalgebra_closure(&self, gens: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut vs = vec![self.unit.clone()];
        vs.extend(gens.iter().cloned());
        let mut space = Subspace::span(f, d, &vs);
        loop {
            let mut new = Vec::new();
            for v in space.basis().row_iter() {
                for g in gens {
                    let p = self.mul(v, g);
                    if !space.contains(f, &p) {
                        new.push(p);
                    }
                }
            }
            if new.is_empty() {
                return space;
            }
            space = space.add_vectors(f, &new);
        }
    }

    /// Indices of basis elements that generate the algebra, chosen greedily
    /// in index order.
    pub fn generator_indices(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut chosen: Vec<usize> = Vec::new();
            let mut span = self.subalgebra_closure(&[]);
            for i in 0..self.dim() {
                if span.is_full() {
                    break;
                }
                let b = self.basis_vector(i);
                if !span.contains(&self.field, &b) {
                    chosen.push(i);
                    let gens: Vec<Vec<F::Elem>> = chosen.iter().map(|&k| self.basis_vector(k)).collect();
                    span = self.subalgebra_closure(&gens);
                }
            }
            Box::new(chosen)
        })
    }

    /// Subalgebra on the span of `basis` (which must contain 1 and be
    /// multiplicatively closed). Returns the algebra on the RREF basis of the
    /// span and the inclusion matrix (columns = new basis in old coordinates).
    pub fn subalgebra(&self, span: &Subspace<F::Elem>) -> Result<(Algebra<F>, Matrix<F::Elem>)> {
        let f = &self.field;
        if !span.contains(f, &self.unit) {
            return Err(Error::Input("subalgebra span does not contain 1".into()));
        }
        let m = span.dim();
        let basis = span.basis_vectors();
        let mut table = Vec::with_capacity(m * m);
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let p = self.mul(u, v);
                let c = span.coordinates(f, &p).ok_or_else(|| {
                    Error::Input(format!("span is not closed under multiplication (basis {i} * basis {j})"))
                })?;
                table.push(sparse(f, &c));
            }
        }
        let unit = span.coordinates(f, &self.unit).expect("checked");
        let labels = (0..m).map(|i| self.describe(&basis[i])).collect();
        let alg = Algebra::new(f.clone(), labels, table, unit)?;
        Ok((alg, span.basis().transpose()))
    }

    /// Quotient by a two-sided ideal on the basis of non-pivot coordinates.
    pub fn quotient(&self, ideal: &Subspace<F::Elem>) -> Result<Algebra<F>> {
        let f = &self.field;
        if ideal.contains(f, &self.unit) {
            return Err(Error::Input("quotient by the whole algebra".into()));
        }
        let np = ideal.non_pivots();
        let m = np.len();
        let mut table = Vec::with_capacity(m * m);
        for &i in &np {
            for &j in &np {
                let p: Vec<F::Elem> = {
                    let mut v = self.zero_vector();
                    for (k, c) in self.basis_product(i, j) {
                        v[*k] = c.clone();
                    }
                    v
                };
                table.push(sparse(f, &ideal.quotient_coords(f, &p)));
            }
        }
        let unit = ideal.quotient_coords(f, &self.unit);
        let labels = np.iter().map(|&i| format!("[{}]", self.labels[i])).collect();
        Algebra::new(f.clone(), labels, table, unit)
    }

    /// Centre `{z : z b = b z for all basis b}`.
    pub fn center(&self) -> Subspace<F::Elem> {
        let f = &self.field;
        let mut kb = crate::exactla::KernelBuilder::new(f, self.dim());
        for &g in self.generator_indices() {
            kb.impose_map(f, |z| vecops::sub(f, &self.mul_basis_right(z, g), &self.mul_basis_left(g, z)));
        }
        kb.into_space()
    }

    /// Minimal polynomial of `x` inside the corner `eAe` whose unit is the
    /// idempotent `e` (pass the unit of `A` for the ordinary minimal
    /// polynomial). Monic, low degree first.
    pub fn min_poly_in(&self, x: &[F::Elem], e: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut powers: Vec<Vec<F::Elem>> = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            // Solve next = Σ c_i powers[i].
            let m = Matrix::from_rows(self.dim(), powers.clone()).transpose();
            if let Some(c) = crate::exactla::solve_affine(f, &m, &next, None).expect("shapes agree") {
                let mut p: Vec<F::Elem> = c.iter().map(|x| f.neg(x)).collect();
                p.push(f.one());
                return p;
            }
            powers.push(next);
        }
    }

    /// Evaluates a polynomial at `x`, with constant term times `e`.
    pub fn eval_poly_in(&self, p: &[F::Elem], x: &[F::Elem], e: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut acc = self.zero_vector();
        for c in p.iter().rev() {
            acc = self.mul(&acc, x);
            vecops::axpy(f, &mut acc, c, e);
        }
        acc
    }

    /// Readable rendering of an element as a combination of basis labels.
    pub fn describe(&self, v: &[F::Elem]) -> String {
        describe_vector(&self.field, &self.labels, v)
    }

    /// Parses a sum of `coefficient*label` terms, e.g. `1 + 2*g - gx`.
    pub fn parse_element(&self, s: &str) -> Result<Vec<F::Elem>> {
        parse_combination(&self.field, &self.labels, s)
    }

    /// Memoised Wedderburn data.
    pub fn wedderburn(&self) -> Result<&WedderburnData<F>> {
        self.wedderburn
            .get_or_init(|| Box::new(wedderburn::compute(self)))
            .as_ref()
            .map_err(|e| e.clone())
    }
}

/// Renders `Σ v_i label_i`, e.g. `1 - 2*g + gx`. The output parses back
/// with [`parse_combination`].
pub fn describe_vector<F: Field>(f: &F, labels: &[String], v: &[F::Elem]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let s = f.format(c);
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, s.as_str()),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let label = labels[i].as_str();
        if mag == "1" {
            out.push_str(label);
        } else if label == "1" {
            out.push_str(mag);
        } else {
            out.push_str(&format!("{mag}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `c1*l1 + c2*l2 - l3 + c` style combinations of labels. A bare
/// scalar is read as a multiple of the label `1` if present.
pub fn parse_combination<F: Field>(f: &F, labels: &[String], s: &str) -> Result<Vec<F::Elem>> {
    let mut v = vecops::zero(f, labels.len());
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(v);
    }
    // Split on + and - at the top level, keeping signs.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.trim().is_empty() && !cur.trim_end().ends_with('*') && !cur.trim_end().ends_with('/') => {
                terms.push((neg, core::mem::take(&mut cur)));
                neg = ch == '-';
            }
            '-' if depth == 0 && cur.trim().is_empty() => neg = !neg,
            '+' if depth == 0 && cur.trim().is_empty() => {}
            _ => cur.push(ch),
        }
    }
    terms.push((neg, cur));
    for (neg, t) in terms {
        let t = t.trim();
        let (coef, label) = match t.rsplit_once('*') {
            Some((c, l)) => (f.parse(c)?, l.trim()),
            None => match labels.iter().position(|l| l == t) {
                Some(_) => (f.one(), t),
                None => (f.parse(t)?, "1"),
            },
        };
        let idx = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))?;
        let coef = if neg { f.neg(&coef) } else { coef };
        v[idx] = f.add(&v[idx], &coef);
    }
    Ok(v)
}

#[cfg(test)]
mod tests;
