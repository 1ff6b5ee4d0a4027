//! Decision procedures for projectivity, freeness, isomorphism, and the
//! Frobenius / quasi-Frobenius properties.
//!
//! Tops `M/MJ` are compared through multiplicities of simple modules, read
//! off from `dim Hom(top, V_i) = m_i · dim End(V_i)`. Over a semisimple top
//! this determines the module up to isomorphism.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::module::{hom_basis, hom_space, is_homomorphism, Module, Side};
use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{generic_determinant_nonzero, solve_affine, vecops, DetSearch, Field, Matrix, MissBound, Subspace};

/// Default number of random trials for witness searches.
pub const DEFAULT_TRIALS: u64 = 64;

/// `M·J` for right modules, `J·M` for left modules.
pub fn radical_submodule<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<Subspace<F::Elem>> {
    let w = alg.wedderburn()?;
    Ok(m.ideal_submodule(alg, &w.radical))
}

/// The top `M/MJ` and the subspace `MJ`.
pub fn top<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<(Module<F::Elem>, Subspace<F::Elem>)> {
    let mj = radical_submodule(alg, m)?;
    Ok((m.quotient(alg.field(), &mj), mj))
}

/// Multiplicity of each simple module (by block index) in a semisimple
/// module.
pub fn semisimple_multiplicities<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<Vec<usize>> {
    let w = alg.wedderburn()?;
    let mut out = Vec::with_capacity(w.block_count());
    for i in 0..w.block_count() {
        let h = hom_space(alg, m, w.simple(m.side(), i))?.dim();
        if h % w.division_dims[i] != 0 {
            return Err(Error::Inconclusive("hom dimension is not a multiple of the endomorphism dimension".into()));
        }
        out.push(h / w.division_dims[i]);
    }
    Ok(out)
}

/// Multiplicities of the simple modules in the top of `m`.
pub fn top_multiplicities<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<Vec<usize>> {
    let (t, _) = top(alg, m)?;
    semisimple_multiplicities(alg, &t)
}

// ---------------------------------------------------------------------------
// Projectivity
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projectivity<E> {
    /// `pi: A^g → M` and an `A`-linear section `sigma` with `pi ∘ sigma = id`.
    Yes { generators: Vec<Vec<E>>, pi: Matrix<E>, sigma: Matrix<E> },
    /// The affine system `pi ∘ sigma = id` has no `A`-linear solution.
    No { generators: Vec<Vec<E>>, reason: String },
}

impl<E> Projectivity<E> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Projectivity::Yes { .. })
    }
}

/// Generators of `M` chosen greedily among the standard lifts of a basis
/// of the top (lowest coordinate index first).
pub fn top_generators<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<Vec<Vec<F::Elem>>> {
    let f = alg.field();
    let mj = radical_submodule(alg, m)?;
    let mut gens: Vec<Vec<F::Elem>> = Vec::new();
    let mut span = Subspace::zero(f, m.dim());
    for j in mj.non_pivots() {
        if span.is_full() {
            break;
        }
        let v = vecops::unit(f, m.dim(), j);
        if !span.contains(f, &v) {
            gens.push(v);
            span = m.submodule(alg, &gens);
        }
    }
    debug_assert!(span.is_full() || m.dim() == 0);
    Ok(gens)
}

/// The map `A^g → M`, `(a_i) ↦ Σ m_i · a_i` (or `a_i · m_i`).
pub fn generator_map<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, gens: &[Vec<F::Elem>]) -> Matrix<F::Elem> {
    let f = alg.field();
    let d = alg.dim();
    let mut cols = Vec::with_capacity(gens.len() * d);
    for g in gens {
        for j in 0..d {
            cols.push(m.act_basis(f, j, g));
        }
    }
    if cols.is_empty() {
        return Matrix::zeros(f, m.dim(), 0);
    }
    Matrix::from_rows(m.dim(), cols).transpose()
}

pub fn is_projective<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<Projectivity<F::Elem>> {
    let f = alg.field();
    let gens = top_generators(alg, m)?;
    let g = gens.len();
    let pi = generator_map(alg, m, &gens);
    let free = Module::regular(alg, m.side()).power(alg, g);
    let homs = hom_basis(alg, m, &free)?;
    let n = m.dim();
    // Solve Σ c_t (pi ∘ phi_t) = id.
    let cols: Vec<Vec<F::Elem>> = homs.iter().map(|phi| pi.mul(f, phi).into_data()).collect();
    let target = Matrix::identity(f, n).into_data();
    let sol = if cols.is_empty() {
        if n == 0 {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        let mat = Matrix::from_rows(n * n, cols).transpose();
        solve_affine(f, &mat, &target, None)?
    };
    Ok(match sol {
        Some(c) => {
            let mut sigma = Matrix::zeros(f, g * alg.dim(), n);
            for (ct, phi) in c.iter().zip(&homs) {
                sigma.add_scaled(f, ct, phi);
            }
            if !pi.mul(f, &sigma).is_identity(f) || !is_homomorphism(f, m, &free, &sigma) {
                return Err(Error::Inconclusive("splitting map failed verification".into()));
            }
            Projectivity::Yes { generators: gens, pi, sigma }
        }
        None => Projectivity::No {
            generators: gens,
            reason: format!("no A-linear section of the surjection from A^{g}"),
        },
    })
}

// ---------------------------------------------------------------------------
// Freeness
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeObstruction {
    /// `dim M` is not a multiple of `dim A`.
    Dimension,
    /// `M/MJ` differs from `(A/J)^n`.
    Top,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness<E> {
    /// `basis` are elements `m_1..m_n` with `A^n → M` bijective.
    Free { rank: usize, basis: Vec<Vec<E>> },
    NotFree { stage: FreeObstruction, detail: String },
}

impl<E> Freeness<E> {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free { .. })
    }
    pub fn rank(&self) -> Option<usize> {
        match self {
            Freeness::Free { rank, .. } => Some(*rank),
            _ => None,
        }
    }
}

/// Checks that `A^n → M` defined by `basis` is bijective.
pub fn verify_free_basis<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, basis: &[Vec<F::Elem>]) -> bool {
    basis.len() * alg.dim() == m.dim() && {
        let map = generator_map(alg, m, basis);
        map.rank(alg.field()) == m.dim()
    }
}

pub fn is_free<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, trials: u64, seed: u64) -> Result<Freeness<F::Elem>> {
    let f = alg.field();
    let da = alg.dim();
    if m.dim() % da != 0 {
        return Ok(Freeness::NotFree {
            stage: FreeObstruction::Dimension,
            detail: format!("dim M = {} is not a multiple of dim A = {da}", m.dim()),
        });
    }
    let n = m.dim() / da;
    if n == 0 {
        return Ok(Freeness::Free { rank: 0, basis: Vec::new() });
    }
    let w = alg.wedderburn()?;
    let (t, mj) = top(alg, m)?;
    let mults = semisimple_multiplicities(alg, &t)?;
    let expected: Vec<usize> = w.block_lengths.iter().map(|l| l * n).collect();
    if mults != expected {
        return Ok(Freeness::NotFree {
            stage: FreeObstruction::Top,
            detail: format!("top multiplicities {mults:?} differ from those of A^{n}, {expected:?}"),
        });
    }
    // Tops agree, so M is free; find a basis by searching maps S^n → top.
    let np = mj.non_pivots();
    let lift = |c: &[F::Elem]| -> Vec<F::Elem> {
        let mut v = vecops::zero(f, m.dim());
        for (x, &j) in c.iter().zip(&np) {
            v[j] = x.clone();
        }
        v
    };
    let basis = find_top_basis(alg, &t, n, trials, seed)?
        .map(|cs| cs.iter().map(|c| lift(c)).collect::<Vec<_>>())
        .ok_or_else(|| Error::Inconclusive(format!("M is free of rank {n} (tops agree) but no basis was found in {trials} trials")))?;
    if !verify_free_basis(alg, m, &basis) {
        return Err(Error::Inconclusive("lifted top basis failed verification".into()));
    }
    Ok(Freeness::Free { rank: n, basis })
}

/// Elements `t_1..t_n` of a semisimple module `T ≅ (A/J)^n` such that
/// `A^n → T` is surjective, in coordinates of `T`.
fn find_top_basis<F: Field>(alg: &Algebra<F>, t: &Module<F::Elem>, n: usize, trials: u64, seed: u64) -> Result<Option<Vec<Vec<F::Elem>>>> {
    let f = alg.field();
    let w = alg.wedderburn()?;
    let ds = w.quotient.dim();
    let td = t.dim();
    // Lifts of the basis of S to A act on T.
    let s_lifts: Vec<Vec<F::Elem>> = (0..ds).map(|j| w.radical.quotient_lift(f, &vecops::unit(f, ds, j))).collect();
    let s_action: Vec<Matrix<F::Elem>> = s_lifts.iter().map(|a| t.action_of(f, a)).collect();
    // Basis matrices: choosing t_i = e_l contributes columns (i, j) = s_j e_l.
    let mut basis = Vec::with_capacity(n * td);
    for i in 0..n {
        for l in 0..td {
            let mut mat = Matrix::zeros(f, td, n * ds);
            for (j, sa) in s_action.iter().enumerate() {
                for r in 0..td {
                    mat.set(r, i * ds + j, sa.get(r, l).clone());
                }
            }
            basis.push(mat);
        }
    }
    let coords_to_elems = |coords: &[F::Elem]| -> Vec<Vec<F::Elem>> { (0..n).map(|i| coords[i * td..(i + 1) * td].to_vec()).collect() };
    match generic_determinant_nonzero(f, td, &basis, trials, seed)? {
        DetSearch::Witness { coords, .. } => return Ok(Some(coords_to_elems(&coords))),
        DetSearch::NotFound { exact: true, nonzero_over_extension: false, .. } => return Ok(None),
        _ => {}
    }
    // Greedy completion: add one free generator of rank one at a time.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut chosen: Vec<Vec<F::Elem>> = Vec::new();
    let span_of = |gs: &[Vec<F::Elem>]| -> usize {
        let mut vs = Vec::new();
        for g in gs {
            for sa in &s_action {
                vs.push(sa.mul_vec(f, g));
            }
        }
        Subspace::span(f, td, &vs).dim()
    };
    for i in 0..n {
        let target = (i + 1) * ds;
        let mut found = None;
        let exhaustive = f.order().and_then(|q| u32::try_from(td).ok().and_then(|d| q.checked_pow(d))).filter(|&c| c <= crate::exactla::pit::EXHAUSTIVE_LIMIT);
        let try_one = |x: Vec<F::Elem>, chosen: &Vec<Vec<F::Elem>>| -> Option<Vec<F::Elem>> {
            let mut gs = chosen.clone();
            gs.push(x.clone());
            (span_of(&gs) == target).then_some(x)
        };
        if let (Some(total), Some(q)) = (exhaustive, f.order()) {
            for idx in 0..total {
                let mut k = idx;
                let x: Vec<F::Elem> = (0..td)
                    .map(|_| {
                        let e = f.elem_at(k % q);
                        k /= q;
                        e
                    })
                    .collect();
                if let Some(x) = try_one(x, &chosen) {
                    found = Some(x);
                    break;
                }
            }
        } else {
            for _ in 0..trials.max(1) * 4 {
                let x: Vec<F::Elem> = (0..td).map(|_| f.sample(&mut rng, 2 * td as u64)).collect();
                if let Some(x) = try_one(x, &chosen) {
                    found = Some(x);
                    break;
                }
            }
        }
        match found {
            Some(x) => chosen.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(chosen))
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult<E> {
    /// Isomorphic. The witness is an exactly verified invertible
    /// homomorphism; it is absent only when isomorphism follows from equal
    /// multiplicities over a semisimple algebra.
    Iso { witness: Option<Matrix<E>> },
    No { reason: String },
    Unknown { bound: Option<MissBound>, trials: u64 },
}

impl<E> IsoResult<E> {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso { .. })
    }
}

pub fn module_iso<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, n: &Module<F::Elem>, trials: u64, seed: u64) -> Result<IsoResult<F::Elem>> {
    let f = alg.field();
    if m.side() != n.side() {
        return Err(Error::Input("isomorphism test between modules on different sides".into()));
    }
    if m.dim() != n.dim() {
        return Ok(IsoResult::No { reason: format!("dimensions differ: {} vs {}", m.dim(), n.dim()) });
    }
    let tm = top_multiplicities(alg, m)?;
    let tn = top_multiplicities(alg, n)?;
    if tm != tn {
        return Ok(IsoResult::No { reason: format!("top multiplicities differ: {tm:?} vs {tn:?}") });
    }
    let hmn = hom_basis(alg, m, n)?;
    let emm = hom_space(alg, m, m)?.dim();
    let enn = hom_space(alg, n, n)?.dim();
    if hmn.len() != emm || emm != enn {
        return Ok(IsoResult::No {
            reason: format!("dim Hom(M,N) = {}, dim End(M) = {emm}, dim End(N) = {enn}", hmn.len()),
        });
    }
    let semisimple = alg.wedderburn()?.is_semisimple();
    match generic_determinant_nonzero(f, m.dim(), &hmn, trials, seed)? {
        DetSearch::Witness { matrix, .. } => {
            if !is_homomorphism(f, m, n, &matrix) || matrix.inverse(f).is_none() {
                return Err(Error::Inconclusive("isomorphism witness failed verification".into()));
            }
            Ok(IsoResult::Iso { witness: Some(matrix) })
        }
        _ if semisimple => Ok(IsoResult::Iso { witness: None }),
        DetSearch::NotFound { exact: true, .. } => Ok(IsoResult::No { reason: "no invertible homomorphism exists (exhaustive)".into() }),
        DetSearch::NotFound { bound, trials, .. } => Ok(IsoResult::Unknown { bound, trials }),
    }
}

// ---------------------------------------------------------------------------
// Frobenius and quasi-Frobenius
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frobenius<E> {
    /// `λ` in dual-basis coordinates; the form `λ(b_i b_j)` is nondegenerate.
    Yes { functional: Vec<E> },
    No { reason: String },
}

impl<E> Frobenius<E> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Frobenius::Yes { .. })
    }
}

/// `A*` as a right module: `(ξ·a)(b) = ξ(ab)`.
pub fn dual_right_regular<F: Field>(alg: &Algebra<F>) -> Module<F::Elem> {
    Module::regular(alg, Side::Left).dual()
}

/// `A*` as a left module: `(a·ξ)(b) = ξ(ba)`.
pub fn dual_left_regular<F: Field>(alg: &Algebra<F>) -> Module<F::Elem> {
    Module::regular(alg, Side::Right).dual()
}

/// Gram matrix `λ(b_i b_j)`.
pub fn gram_matrix<F: Field>(alg: &Algebra<F>, lambda: &[F::Elem]) -> Matrix<F::Elem> {
    let f = alg.field();
    let d = alg.dim();
    let mut g = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let mut acc = f.zero();
            for (k, c) in alg.basis_product(i, j) {
                f.add_mul_assign(&mut acc, c, &lambda[*k]);
            }
            g.set(i, j, acc);
        }
    }
    g
}

pub fn is_frobenius<F: Field>(alg: &Algebra<F>, trials: u64, seed: u64) -> Result<Frobenius<F::Elem>> {
    let f = alg.field();
    let dual = dual_right_regular(alg);
    match is_free(alg, &dual, trials, seed)? {
        Freeness::Free { basis, .. } => {
            let lambda = basis.into_iter().next().expect("rank one");
            if f.is_zero(&gram_matrix(alg, &lambda).det(f)) {
                return Err(Error::Inconclusive("Frobenius functional has a degenerate Gram matrix".into()));
            }
            Ok(Frobenius::Yes { functional: lambda })
        }
        Freeness::NotFree { detail, .. } => Ok(Frobenius::No { reason: format!("A* is not free of rank 1: {detail}") }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiFrobenius {
    Yes,
    /// Sides on which `A` fails to be self-injective.
    No { failing: Vec<Side>, reason: String },
}

/// `A` is right self-injective iff the left module `(A_A)*` is projective,
/// and left self-injective iff the right module `(_A A)*` is projective.
pub fn is_quasi_frobenius<F: Field>(alg: &Algebra<F>) -> Result<QuasiFrobenius> {
    let mut failing = Vec::new();
    let mut reasons = Vec::new();
    if let Projectivity::No { reason, .. } = is_projective(alg, &dual_left_regular(alg))? {
        failing.push(Side::Right);
        reasons.push(format!("not right self-injective ({reason})"));
    }
    if let Projectivity::No { reason, .. } = is_projective(alg, &dual_right_regular(alg))? {
        failing.push(Side::Left);
        reasons.push(format!("not left self-injective ({reason})"));
    }
    Ok(if failing.is_empty() { QuasiFrobenius::Yes } else { QuasiFrobenius::No { failing, reason: reasons.join("; ") } })
}

/// Helper for tests and drivers: the standard basis vector list of `A^n`.
pub fn free_module<F: Field>(alg: &Algebra<F>, side: Side, n: usize) -> Module<F::Elem> {
    Module::regular(alg, side).power(alg, n)
}
