//! Fitting ideals of finitely generated modules over commutative
//! finite-dimensional algebras.
//!
//! For a presentation `π: A^n → M` with kernel generated by `x_1, …, x_K`,
//! `Fitt_i(M)` is generated by the `(n-i)`-minors of the `n x K` matrix of
//! the `x_l` in the standard coordinates of `A^n` (coordinate functionals
//! suffice for a free `F`).

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::oracles::top_generators;
use crate::algebra::{Algebra, Module};
use crate::error::{Error, Result};
use crate::exactla::{linear_kernel, vecops, Field, Matrix, Subspace};

pub mod drivers;

pub use drivers::{verify_fitting_property, FittingInputs, FITTING_PROPERTIES};

/// Largest minor size enumerated.
pub const MAX_MINOR: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingLedger<E> {
    /// Images in `M` of the standard basis of `A^n`.
    pub generators: Vec<Vec<E>>,
    /// `A`-generators of `Ker π`, each of length `n · dim A` with block `i`
    /// the `i`th coordinate.
    pub relations: Vec<Vec<E>>,
    /// `Fitt_{-1}, Fitt_0, …, Fitt_n`.
    ideals: Vec<Subspace<E>>,
}

impl<E: Clone + PartialEq> FittingLedger<E> {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `Fitt_i` for any `i ≥ -1`; `A` beyond the presentation rank.
    pub fn fitt(&self, i: isize) -> &Subspace<E> {
        assert!(i >= -1, "Fitting ideals start at index -1");
        let k = ((i + 1) as usize).min(self.ideals.len() - 1);
        &self.ideals[k]
    }

    /// The ideals `Fitt_{-1}, …, Fitt_n` in order.
    pub fn ideals(&self) -> &[Subspace<E>] {
        &self.ideals
    }

    /// `r` with `Fitt_r = A` and `Fitt_{r-1} = 0`, if any.
    pub fn constant_rank(&self) -> Option<usize> {
        (0..self.ideals.len() - 1).find(|&r| self.ideals[r].is_zero() && self.ideals[r + 1].is_full())
    }

    /// Equality of all ideals, padding the shorter ledger with `A`.
    pub fn same_ideals(&self, other: &Self) -> bool {
        let n = self.ideals.len().max(other.ideals.len());
        (0..n).all(|k| self.fitt(k as isize - 1) == other.fitt(k as isize - 1))
    }
}

fn require_commutative<F: Field>(alg: &Algebra<F>) -> Result<()> {
    if alg.is_commutative() {
        Ok(())
    } else {
        Err(Error::Input("Fitting ideals need a commutative algebra".into()))
    }
}

/// `A`-linear action on `A^n` by a basis element, coordinatewise.
fn act_on_free<F: Field>(alg: &Algebra<F>, n: usize, b: usize, x: &[F::Elem]) -> Vec<F::Elem> {
    let da = alg.dim();
    let mut out = Vec::with_capacity(x.len());
    for i in 0..n {
        out.extend(alg.mul_basis_right(&x[i * da..(i + 1) * da], b));
    }
    out
}

/// A small set of `A`-generators of a submodule of `A^n` given by a basis.
fn module_generators<F: Field>(alg: &Algebra<F>, n: usize, space: &Subspace<F::Elem>) -> Vec<Vec<F::Elem>> {
    let f = alg.field();
    let mut gens = Vec::new();
    let mut span = Subspace::zero(f, space.ambient_dim());
    for v in space.basis().row_iter() {
        if span.contains(f, v) {
            continue;
        }
        gens.push(v.to_vec());
        let orbit: Vec<Vec<F::Elem>> = (0..alg.dim()).map(|b| act_on_free(alg, n, b, v)).collect();
        span = span.add_vectors(f, &orbit);
        if span.dim() == space.dim() {
            break;
        }
    }
    gens
}

/// Determinant over a commutative algebra by expansion along the first row.
fn det<F: Field>(alg: &Algebra<F>, m: &[Vec<Vec<F::Elem>>], rows: &[usize], cols: &[usize]) -> Vec<F::Elem> {
    let f = alg.field();
    if rows.is_empty() {
        return alg.unit().to_vec();
    }
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc = alg.zero_vector();
    let r0 = rows[0];
    for (k, &c) in cols.iter().enumerate() {
        if vecops::is_zero(f, &m[r0][c]) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = det(alg, m, &rows[1..], &rest);
        let term = alg.mul(&m[r0][c], &sub);
        acc = if k % 2 == 0 { vecops::add(f, &acc, &term) } else { vecops::sub(f, &acc, &term) };
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Ideal generated by the `k`-minors of `entries` (`n` rows, `K` columns).
fn minor_ideal<F: Field>(alg: &Algebra<F>, entries: &[Vec<Vec<F::Elem>>], k: usize) -> Result<Subspace<F::Elem>> {
    let f = alg.field();
    let da = alg.dim();
    let n = entries.len();
    let cols = entries.first().map_or(0, |r| r.len());
    if k == 0 {
        return Ok(Subspace::full(f, da));
    }
    if k > n || k > cols {
        return Ok(Subspace::zero(f, da));
    }
    if k > MAX_MINOR {
        return Err(Error::Refused(format!("{k}x{k} minors exceed the enumeration cap of {MAX_MINOR}")));
    }
    let mut ideal = Subspace::zero(f, da);
    let col_sets = subsets(cols, k);
    for rows in subsets(n, k) {
        for cs in &col_sets {
            let d = det(alg, entries, &rows, cs);
            if ideal.contains(f, &d) {
                continue;
            }
            let orbit: Vec<Vec<F::Elem>> = (0..da).map(|b| alg.mul_basis_right(&d, b)).collect();
            ideal = ideal.add_vectors(f, &orbit);
            if ideal.is_full() {
                return Ok(ideal);
            }
        }
    }
    Ok(ideal)
}

/// Map `A^n → M`, `(x_i) ↦ Σ g_i x_i`; column `(i, b)` at `i · dim A + b`.
pub fn presentation_map<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, gens: &[Vec<F::Elem>]) -> Matrix<F::Elem> {
    let f = alg.field();
    let cols: Vec<Vec<F::Elem>> = gens.iter().flat_map(|g| (0..alg.dim()).map(move |b| m.action(b).mul_vec(f, g))).collect();
    Matrix::from_rows(m.dim(), cols).transpose()
}

/// Fitting ledger from the given generators of `m`.
pub fn fitting_ledger_with<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, gens: &[Vec<F::Elem>]) -> Result<FittingLedger<F::Elem>> {
    require_commutative(alg)?;
    let f = alg.field();
    let da = alg.dim();
    let n = gens.len();
    let map = presentation_map(alg, m, gens);
    if map.rank(f) != m.dim() {
        return Err(Error::Input(format!("{n} elements do not generate the module")));
    }
    let kernel = linear_kernel(f, &map);
    let relations = module_generators(alg, n, &kernel);
    let entries: Vec<Vec<Vec<F::Elem>>> =
        (0..n).map(|i| relations.iter().map(|x| x[i * da..(i + 1) * da].to_vec()).collect()).collect();
    let mut ideals = Vec::with_capacity(n + 2);
    ideals.push(Subspace::zero(f, da));
    for i in 0..n {
        ideals.push(minor_ideal(alg, &entries, n - i)?);
    }
    ideals.push(Subspace::full(f, da));
    debug_assert!(ideals.windows(2).all(|w| w[1].contains_space(f, &w[0])), "Fitting chain not monotone");
    Ok(FittingLedger { generators: gens.to_vec(), relations, ideals })
}

/// Fitting ledger from a minimal generating set of `m`.
pub fn fitting_ledger<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<FittingLedger<F::Elem>> {
    require_commutative(alg)?;
    let gens = top_generators(alg, m)?;
    fitting_ledger_with(alg, m, &gens)
}

pub fn fitting_ideal<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, i: isize) -> Result<Subspace<F::Elem>> {
    if i < -1 {
        return Err(Error::Input(format!("Fitting index {i} below -1")));
    }
    Ok(fitting_ledger(alg, m)?.fitt(i).clone())
}

/// `B ⊗_A M = M / MI` over `B = A/I`, on the quotient bases.
pub fn base_change<F: Field>(alg: &Algebra<F>, ideal: &Subspace<F::Elem>, m: &Module<F::Elem>) -> Result<(Algebra<F>, Module<F::Elem>)> {
    let f = alg.field();
    let b = alg.quotient(ideal)?;
    let mi = m.ideal_submodule(alg, ideal);
    let q = m.quotient(f, &mi);
    let actions = ideal.non_pivots().into_iter().map(|j| q.action(j).clone()).collect();
    let bm = Module::new(&b, m.side(), q.dim(), actions)?;
    Ok((b, bm))
}

/// Image of an ideal of `A` in `A/I`, on the quotient basis.
pub fn image_in_quotient<F: Field>(f: &F, ideal: &Subspace<F::Elem>, j: &Subspace<F::Elem>) -> Subspace<F::Elem> {
    let vs: Vec<Vec<F::Elem>> = j.basis().row_iter().map(|v| ideal.quotient_coords(f, v)).collect();
    Subspace::span(f, ideal.ambient_dim() - ideal.dim(), &vs)
}
