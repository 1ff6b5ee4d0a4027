//! Right coideal subalgebras `A ⊆ H`, the quotient coalgebras
//! `D = H/HA⁺` and `D′ = H/A⁺H`, the functors `Φ: M ↦ M/MA⁺` and
//! `Ψ: V ↦ V □ H`, and normal basis searches `D ⊗ A ≅ H`.
//!
//! Everything is parametrised by [`Side`]: `Right` means right Hopf
//! modules, `D` and `D ⊗ A`; `Left` means left Hopf modules, `D′` and
//! `A ⊗ D′`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Module, Side};
use crate::coalgebra::comodule::comodule_hom_space;
use crate::coalgebra::{comodule_part, Coalgebra, Comodule};
use crate::comodalg::{ComoduleAlgebra, HopfModule, Simplicity};
use crate::error::{Error, Result};
use crate::exactla::pit::{generic_determinant_nonzero, DetSearch};
use crate::exactla::{linear_kernel, vecops, Field, KernelBuilder, Matrix, Subspace};
use crate::hopf::HopfAlgebra;
use crate::report::ValidationReport;

pub mod drivers;

pub use drivers::{verify_coideal_theorem, CoidealInputs, COIDEAL_THEOREMS};

#[derive(Clone, Debug)]
pub struct CoidealSubalgebra<F: Field> {
    span: Subspace<F::Elem>,
    inclusion: Matrix<F::Elem>,
    ca: ComoduleAlgebra<F>,
    aug: Subspace<F::Elem>,
    /// How `H`-simplicity was established.
    pub h_simple_note: String,
}

/// Checks that `span` is a right coideal subalgebra of `h` and names the
/// first violated condition otherwise.
pub fn coideal_violation<F: Field>(h: &HopfAlgebra<F>, span: &Subspace<F::Elem>) -> Option<String> {
    let f = h.field();
    let alg = h.algebra();
    if span.ambient_dim() != h.dim() {
        return Some(format!("span lives in dimension {}, H has dimension {}", span.ambient_dim(), h.dim()));
    }
    if !span.contains(f, &h.one()) {
        return Some("1 is not in A".into());
    }
    let basis = span.basis_vectors();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let p = h.mul(x, y);
            if !span.contains(f, &p) {
                return Some(format!("a{i}·a{j} = {} is not in A (a{i} = {}, a{j} = {})", alg.describe(&p), alg.describe(x), alg.describe(y)));
            }
        }
    }
    let ah = span.tensor(f, &Subspace::full(f, h.dim()));
    for (i, x) in basis.iter().enumerate() {
        let d = h.comult(x);
        if !ah.contains(f, &d) {
            return Some(format!("Δ(a{i}) = {} is not in A ⊗ H (a{i} = {})", h.coalgebra().describe_tensor(&d), alg.describe(x)));
        }
    }
    None
}

impl<F: Field> CoidealSubalgebra<F> {
    /// Accepts `span` if it is a right coideal subalgebra and certifies
    /// `H`-simplicity: `A⁺` contains no nonzero costable ideal, so the
    /// maximal ideal `A⁺` is clean.
    pub fn detect(h: &HopfAlgebra<F>, span: &Subspace<F::Elem>) -> Result<Self> {
        if let Some(v) = coideal_violation(h, span) {
            return Err(Error::NotCoideal(format!("not a right coideal subalgebra: {v}")));
        }
        let f = h.field();
        let (ca, inclusion) = ComoduleAlgebra::coideal_subalgebra(h, span)?;
        let eps = Matrix::from_rows(ca.dim(), alloc::vec![(0..ca.dim()).map(|j| h.counit(&inclusion.col_vec(j))).collect()]);
        let aug = linear_kernel(f, &eps);
        let k = ca.largest_costable_inside(&aug);
        if !k.space.is_zero() {
            return Err(Error::Inconclusive(format!("A⁺ contains a costable ideal of dimension {}", k.space.dim())));
        }
        let note = match ca.is_h_simple()? {
            Simplicity::Simple { end_dim } => {
                format!("ρ⁻¹(A⁺ ⊗ H) = 0, so the maximal ideal A⁺ is clean; operator check agrees (commutant dimension {end_dim})")
            }
            Simplicity::NotSimple { witness } => {
                return Err(Error::Inconclusive(format!("operator check found a costable ideal of dimension {}", witness.dim())))
            }
            Simplicity::Inconclusive { reason } => format!("ρ⁻¹(A⁺ ⊗ H) = 0, so the maximal ideal A⁺ is clean; operator check: {reason}"),
        };
        Ok(CoidealSubalgebra { span: span.clone(), inclusion, ca, aug, h_simple_note: note })
    }

    /// The subalgebra generated by `gens`, if it is a right coideal.
    pub fn generated_by(h: &HopfAlgebra<F>, gens: &[Vec<F::Elem>]) -> Result<Self> {
        let span = h.algebra().subalgebra_closure(gens);
        Self::detect(h, &span)
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        self.ca.hopf()
    }
    pub fn field(&self) -> &F {
        self.ca.field()
    }
    pub fn algebra(&self) -> &Algebra<F> {
        self.ca.algebra()
    }
    pub fn comodule_algebra(&self) -> &ComoduleAlgebra<F> {
        &self.ca
    }
    /// `A` as a subspace of `H`.
    pub fn span(&self) -> &Subspace<F::Elem> {
        &self.span
    }
    /// `dim H x dim A`; column `j` is the `j`th basis element of `A` in `H`.
    pub fn inclusion(&self) -> &Matrix<F::Elem> {
        &self.inclusion
    }
    /// `A⁺ = ker ε|_A` in the coordinates of `A`.
    pub fn augmentation(&self) -> &Subspace<F::Elem> {
        &self.aug
    }
    pub fn dim(&self) -> usize {
        self.ca.dim()
    }
    pub fn is_hopf_subalgebra(&self) -> bool {
        let f = self.field();
        self.span.basis().row_iter().all(|v| self.span.contains(f, &self.hopf().apply_antipode(v)))
    }

    /// `A⁺` as a subspace of `H`.
    pub fn augmentation_in_h(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field();
        self.aug.basis().row_iter().map(|v| self.inclusion.mul_vec(f, v)).collect()
    }

    /// `HA⁺` (`Right`) or `A⁺H` (`Left`).
    pub fn coideal_of(&self, side: Side) -> Subspace<F::Elem> {
        let h = self.hopf();
        let mut vs = Vec::new();
        for x in self.augmentation_in_h() {
            for k in 0..h.dim() {
                let e = vecops::unit(self.field(), h.dim(), k);
                vs.push(match side {
                    Side::Right => h.mul(&e, &x),
                    Side::Left => h.mul(&x, &e),
                });
            }
        }
        Subspace::span(self.field(), h.dim(), &vs)
    }

    pub fn quotient_pair(&self) -> Result<QuotientPair<F>> {
        let c = self.hopf().coalgebra();
        let ha = self.coideal_of(Side::Right);
        let ah = self.coideal_of(Side::Left);
        let (d, d_proj) = c.quotient(&ha)?;
        let (d_prime, d_prime_proj) = c.quotient(&ah)?;
        Ok(QuotientPair { d, d_proj, ha, d_prime, d_prime_proj, ah })
    }

    /// `H` in the Hopf module category on `side`: multiplication by `A` and `Δ`.
    pub fn hopf_as_module(&self, side: Side) -> HopfModule<F::Elem> {
        let f = self.field();
        let h = self.hopf();
        let actions = (0..self.dim())
            .map(|b| {
                let a = self.inclusion.col_vec(b);
                match side {
                    Side::Right => h.algebra().right_mul_matrix(&a),
                    Side::Left => h.algebra().left_mul_matrix(&a),
                }
            })
            .collect();
        let module = Module::new(self.algebra(), side, h.dim(), actions).expect("shapes agree");
        let coaction = Comodule::new(Side::Right, h.dim(), h.dim(), h.coalgebra().comult_matrix()).expect("shapes agree");
        let _ = f;
        HopfModule::new(&self.ca, module, coaction).expect("shapes agree")
    }
}

/// `D = H/HA⁺` and `D′ = H/A⁺H` with their projections and kernels.
#[derive(Clone, Debug)]
pub struct QuotientPair<F: Field> {
    pub d: Coalgebra<F>,
    pub d_proj: Matrix<F::Elem>,
    pub ha: Subspace<F::Elem>,
    pub d_prime: Coalgebra<F>,
    pub d_prime_proj: Matrix<F::Elem>,
    pub ah: Subspace<F::Elem>,
}

impl<F: Field> QuotientPair<F> {
    /// `D` for `Right`, `D′` for `Left`.
    pub fn coalgebra(&self, side: Side) -> &Coalgebra<F> {
        match side {
            Side::Right => &self.d,
            Side::Left => &self.d_prime,
        }
    }
    pub fn projection(&self, side: Side) -> &Matrix<F::Elem> {
        match side {
            Side::Right => &self.d_proj,
            Side::Left => &self.d_prime_proj,
        }
    }

    /// `H` as a left comodule over the quotient, `(π ⊗ id) ∘ Δ`.
    pub fn lambda(&self, h: &HopfAlgebra<F>, side: Side) -> Comodule<F::Elem> {
        let f = h.field();
        let map = self.projection(side).kron(f, &Matrix::identity(f, h.dim())).mul(f, &h.coalgebra().comult_matrix());
        Comodule::new(Side::Left, h.dim(), self.coalgebra(side).dim(), map).expect("shapes agree")
    }
}

// ---------------------------------------------------------------------------
// Φ and Ψ
// ---------------------------------------------------------------------------

/// Quotient coordinates `M → M/N` and the lift on non-pivot coordinates.
fn quotient_maps<F: Field>(f: &F, n: usize, sub: &Subspace<F::Elem>) -> (Matrix<F::Elem>, Matrix<F::Elem>) {
    let np = sub.non_pivots();
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|j| sub.quotient_coords(f, &vecops::unit(f, n, j))).collect();
    let q = Matrix::from_rows(np.len(), cols).transpose();
    let mut lift = Matrix::zeros(f, n, np.len());
    for (t, &j) in np.iter().enumerate() {
        lift.set(j, t, f.one());
    }
    (q, lift)
}

/// `Φ(M) = M/MA⁺` (or `M/A⁺M`) as a right comodule over `D` (or `D′`).
#[derive(Clone, Debug)]
pub struct PhiImage<E> {
    pub sub: Subspace<E>,
    pub comodule: Comodule<E>,
    /// `M → Φ(M)`.
    pub projection: Matrix<E>,
}

pub fn phi<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, m: &HopfModule<F::Elem>) -> Result<PhiImage<F::Elem>> {
    let f = cs.field();
    let side = m.side();
    let sub = m.module().ideal_submodule(cs.algebra(), &cs.aug);
    let (q, lift) = quotient_maps(f, m.dim(), &sub);
    let co = q.kron(f, qp.projection(side)).mul(f, m.coaction().coaction()).mul(f, &lift);
    let comodule = Comodule::new(Side::Right, q.rows(), qp.coalgebra(side).dim(), co)?;
    Ok(PhiImage { sub, comodule, projection: q })
}

/// `V ⊗ H` as a Hopf module on `side`, `A` and `Δ` acting on `H`.
pub fn tensor_with_h<F: Field>(cs: &CoidealSubalgebra<F>, dv: usize, side: Side) -> HopfModule<F::Elem> {
    let f = cs.field();
    let hm = cs.hopf_as_module(side);
    let idv = Matrix::identity(f, dv);
    let actions = hm.module().actions().iter().map(|a| idv.kron(f, a)).collect();
    let module = Module::new(cs.algebra(), side, dv * cs.hopf().dim(), actions).expect("shapes agree");
    let coaction = Comodule::new(Side::Right, dv * cs.hopf().dim(), cs.hopf().dim(), idv.kron(f, hm.coaction().coaction())).expect("shapes agree");
    HopfModule::new(cs.comodule_algebra(), module, coaction).expect("shapes agree")
}

/// `Ψ(V) = V □ H ⊆ V ⊗ H`.
#[derive(Clone, Debug)]
pub struct PsiImage<E> {
    /// The cotensor product inside `V ⊗ H` (index `v · dim H + h`).
    pub space: Subspace<E>,
    /// `Ψ(V)` on the basis of `space`.
    pub module: HopfModule<E>,
}

pub fn psi<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, side: Side, v: &Comodule<F::Elem>) -> Result<PsiImage<F::Elem>> {
    let f = cs.field();
    if v.side() != Side::Right || v.coalgebra_dim() != qp.coalgebra(side).dim() {
        return Err(Error::Input("Ψ takes a right comodule over the quotient coalgebra".into()));
    }
    let lam = qp.lambda(cs.hopf(), side);
    let space = crate::coalgebra::cotensor(f, v, &lam)?;
    let full = tensor_with_h(cs, v.dim(), side);
    if !full.is_subobject(cs.comodule_algebra(), &space) {
        return Err(Error::Inconclusive("the cotensor product is not a Hopf submodule".into()));
    }
    let module = full.restrict(cs.comodule_algebra(), &space)?;
    Ok(PsiImage { space, module })
}

/// Outcome of checking one natural map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalMapCheck {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    /// Compatible with every structure on source and target.
    pub is_morphism: bool,
}

impl NaturalMapCheck {
    pub fn is_iso(&self) -> bool {
        self.is_morphism && self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

fn intertwines<F: Field>(f: &F, x: &HopfModule<F::Elem>, y: &HopfModule<F::Elem>, map: &Matrix<F::Elem>, dh: usize) -> bool {
    let acts = x.module().actions().iter().zip(y.module().actions()).all(|(a, b)| map.mul(f, a) == b.mul(f, map));
    let co = map.kron(f, &Matrix::identity(f, dh)).mul(f, x.coaction().coaction()) == y.coaction().coaction().mul(f, map);
    acts && co
}

/// `Ξ_M: M → ΨΦ(M)`, `m ↦ Σ [m₀] ⊗ m₁`, in the coordinates of `ΨΦ(M)`.
pub fn xi<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, m: &HopfModule<F::Elem>) -> Result<(Matrix<F::Elem>, NaturalMapCheck)> {
    let f = cs.field();
    let dh = cs.hopf().dim();
    let ph = phi(cs, qp, m)?;
    let ps = psi(cs, qp, m.side(), &ph.comodule)?;
    let into_vh = ph.projection.kron(f, &Matrix::identity(f, dh)).mul(f, m.coaction().coaction());
    let mut cols = Vec::with_capacity(m.dim());
    let mut inside = true;
    for j in 0..m.dim() {
        let v = into_vh.col_vec(j);
        match ps.space.coordinates(f, &v) {
            Some(c) => cols.push(c),
            None => {
                inside = false;
                cols.push(vecops::zero(f, ps.space.dim()));
            }
        }
    }
    let map = Matrix::from_rows(ps.space.dim(), cols).transpose();
    let is_morphism = inside && intertwines(f, m, &ps.module, &map, dh);
    let check = NaturalMapCheck { source_dim: m.dim(), target_dim: ps.space.dim(), rank: map.rank(f), is_morphism };
    Ok((map, check))
}

/// `Θ_V: ΦΨ(V) → V` induced by `id ⊗ ε`.
pub fn theta<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, side: Side, v: &Comodule<F::Elem>) -> Result<(Matrix<F::Elem>, NaturalMapCheck)> {
    let f = cs.field();
    let h = cs.hopf();
    let dh = h.dim();
    let ps = psi(cs, qp, side, v)?;
    let ph = phi(cs, qp, &ps.module)?;
    let np = ph.sub.non_pivots();
    let eps: Vec<F::Elem> = (0..dh).map(|k| h.counit(&vecops::unit(f, dh, k))).collect();
    let mut cols = Vec::with_capacity(np.len());
    for &j in &np {
        let x = ps.space.basis().row(j);
        let out: Vec<F::Elem> = (0..v.dim())
            .map(|vi| (0..dh).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&x[vi * dh + k], &eps[k]))))
            .collect();
        cols.push(out);
    }
    let map = Matrix::from_rows(v.dim(), cols).transpose();
    let is_morphism = ph.comodule.is_map_to(f, v, &map);
    let check = NaturalMapCheck { source_dim: np.len(), target_dim: v.dim(), rank: map.rank(f), is_morphism };
    Ok((map, check))
}

// ---------------------------------------------------------------------------
// Comodules over D with a commuting Hopf module structure
// ---------------------------------------------------------------------------

/// A Hopf module on `side` with a commuting left comodule structure over
/// `D` (`Right`) or `D′` (`Left`).
#[derive(Clone, Debug)]
pub struct DHopfModule<E> {
    pub hopf_module: HopfModule<E>,
    pub lambda: Comodule<E>,
}

impl<E: Clone + PartialEq> DHopfModule<E> {
    pub fn side(&self) -> Side {
        self.hopf_module.side()
    }
    pub fn dim(&self) -> usize {
        self.hopf_module.dim()
    }

    /// `H` with `λ = (π ⊗ id) ∘ Δ`.
    pub fn hopf<F: Field<Elem = E>>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, side: Side) -> Self {
        DHopfModule { hopf_module: cs.hopf_as_module(side), lambda: qp.lambda(cs.hopf(), side) }
    }

    pub fn validate<F: Field<Elem = E>>(&self, cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>) -> ValidationReport {
        let f = cs.field();
        let side = self.side();
        let mut r = self.hopf_module.validate(cs.comodule_algebra()).prefixed("hopf module");
        r.extend(self.lambda.validate(qp.coalgebra(side)).prefixed("quotient comodule"));
        let dd = qp.coalgebra(side).dim();
        let idd = Matrix::identity(f, dd);
        for (b, a) in self.hopf_module.module().actions().iter().enumerate() {
            if self.lambda.coaction().mul(f, a) != idd.kron(f, a).mul(f, self.lambda.coaction()) {
                r.push("λ commutes with A", alloc::vec![b], format!("λ(m·a{b}) ≠ λ(m)·a{b}"));
            }
        }
        let dh = cs.hopf().dim();
        let lhs = self.lambda.coaction().kron(f, &Matrix::identity(f, dh)).mul(f, self.hopf_module.coaction().coaction());
        let rhs = idd.kron(f, self.hopf_module.coaction().coaction()).mul(f, self.lambda.coaction());
        if lhs != rhs {
            r.push("λ commutes with ρ", Vec::new(), "(λ ⊗ id)∘ρ ≠ (id ⊗ ρ)∘λ".into());
        }
        r
    }
}

/// `M/MA⁺` (or `M/A⁺M`) as a left comodule over the quotient.
pub fn top_comodule<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, m: &DHopfModule<F::Elem>) -> Result<Comodule<F::Elem>> {
    let f = cs.field();
    let dd = qp.coalgebra(m.side()).dim();
    let sub = m.hopf_module.module().ideal_submodule(cs.algebra(), &cs.aug);
    let (q, lift) = quotient_maps(f, m.dim(), &sub);
    let co = Matrix::identity(f, dd).kron(f, &q).mul(f, m.lambda.coaction()).mul(f, &lift);
    Comodule::new(Side::Left, q.rows(), dd, co)
}

/// Searches for an invertible map in a hom space given by flattened
/// `n x n` matrices.
pub fn search_iso<F: Field>(f: &F, n: usize, space: &Subspace<F::Elem>, trials: u64, seed: u64) -> Result<DetSearch<F::Elem>> {
    let basis: Vec<Matrix<F::Elem>> = space.basis().row_iter().map(|v| Matrix::from_flat(n, n, v)).collect();
    generic_determinant_nonzero(f, n, &basis, trials, seed)
}

/// Isomorphism search between two left comodules of equal dimension.
pub fn comodule_iso<F: Field>(f: &F, v: &Comodule<F::Elem>, w: &Comodule<F::Elem>, trials: u64, seed: u64) -> Result<DetSearch<F::Elem>> {
    if v.dim() != w.dim() {
        return Ok(DetSearch::NotFound { exact: true, bound: None, nonzero_over_extension: false, trials: 0 });
    }
    let hom = comodule_hom_space(f, v, w)?;
    search_iso(f, v.dim(), &hom, trials, seed)
}

/// Maps `D ⊗ A → M` (`Right`, index `d · dim A + a`) or `A ⊗ D′ → M`
/// (`Left`, index `a · dim D′ + d`) that are `A`-linear and colinear, as
/// flattened `dim M x (dim D · dim A)` matrices.
pub fn normal_basis_space<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, m: &DHopfModule<F::Elem>) -> Subspace<F::Elem> {
    let f = cs.field();
    let side = m.side();
    let d = qp.coalgebra(side);
    let (dd, da, dm) = (d.dim(), cs.dim(), m.dim());
    let n = dd * da;
    let idd = Matrix::identity(f, dd);
    let ida = Matrix::identity(f, da);
    let alg = cs.algebra();
    // A-action on the source.
    let src_act: Vec<Matrix<F::Elem>> = (0..da)
        .map(|b| match side {
            Side::Right => idd.kron(f, &alg.right_regular(b)),
            Side::Left => alg.left_regular(b).kron(f, &idd),
        })
        .collect();
    // Left comodule structure on the source, row c · n + x.
    let src_co = match side {
        Side::Right => d.comult_matrix().kron(f, &ida),
        Side::Left => {
            let mut m = Matrix::zeros(f, dd * n, n);
            for a in 0..da {
                for k in 0..dd {
                    for (d1, d2, c) in d.coproduct(k) {
                        m.set(d1 * n + a * dd + d2, a * dd + k, c.clone());
                    }
                }
            }
            m
        }
    };
    let mut kb = KernelBuilder::new(f, dm * n);
    for (b, sa) in src_act.iter().enumerate() {
        let ma = &m.hopf_module.module().actions()[b];
        kb.impose_map(f, |x| {
            let phi = Matrix::from_flat(dm, n, x);
            phi.mul(f, sa).sub(f, &ma.mul(f, &phi)).to_flat()
        });
    }
    kb.impose_map(f, |x| {
        let phi = Matrix::from_flat(dm, n, x);
        m.lambda.coaction().mul(f, &phi).sub(f, &idd.kron(f, &phi).mul(f, &src_co)).to_flat()
    });
    kb.into_space()
}

/// Normal basis witness for `m`, searched by random evaluation of the
/// determinant on the hom space and verified exactly.
pub fn normal_basis<F: Field>(cs: &CoidealSubalgebra<F>, qp: &QuotientPair<F>, m: &DHopfModule<F::Elem>, trials: u64, seed: u64) -> Result<DetSearch<F::Elem>> {
    let n = qp.coalgebra(m.side()).dim() * cs.dim();
    if n != m.dim() {
        return Ok(DetSearch::NotFound { exact: true, bound: None, nonzero_over_extension: false, trials: 0 });
    }
    let space = normal_basis_space(cs, qp, m);
    search_iso(cs.field(), n, &space, trials, seed)
}

// ---------------------------------------------------------------------------
// Subcoalgebra criterion for D^n
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SubcoalgebraCriterion<E> {
    /// `dim M / dim D` when it is an integer.
    pub n: Option<usize>,
    /// `(dim C, dim M_C)` over the generated subcoalgebra lattice.
    pub parts: Vec<(usize, usize)>,
    pub holds: bool,
    /// Comodule isomorphism `M → D^n` when found.
    pub reconstruction: Option<DetSearch<E>>,
}

/// `dim M_C = n dim C` on the lattice generated by the simple
/// subcoalgebras, and when it holds, a search for `M ≅ D^n`.
pub fn subcoalgebra_criterion<F: Field>(d: &Coalgebra<F>, m: &Comodule<F::Elem>, trials: u64, seed: u64) -> Result<SubcoalgebraCriterion<F::Elem>> {
    let f = d.field();
    if m.side() != Side::Left {
        return Err(Error::Input("the criterion is stated for left comodules".into()));
    }
    let n = (m.dim() % d.dim() == 0).then(|| m.dim() / d.dim());
    let mut parts = Vec::new();
    for c in d.subcoalgebra_lattice()? {
        parts.push((c.dim(), comodule_part(d, m, &c)?.dim()));
    }
    let holds = n.is_some_and(|n| parts.iter().all(|&(c, mc)| mc == n * c));
    let reconstruction = match n {
        Some(n) if holds => Some(comodule_iso(f, m, &Comodule::regular(d, Side::Left).power(f, n), trials, seed)?),
        _ => None,
    };
    Ok(SubcoalgebraCriterion { n, parts, holds, reconstruction })
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Right coideal subalgebras generated by subsets of the basis of `h`
/// (all subsets when `dim H ≤ max_bits`, otherwise singletons and pairs).
pub fn enumerate_coideal_subalgebras<F: Field>(h: &HopfAlgebra<F>, max_bits: usize) -> Result<Vec<CoidealSubalgebra<F>>> {
    let f = h.field();
    let d = h.dim();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    if d <= max_bits {
        for mask in 0u32..(1 << d) {
            subsets.push((0..d).filter(|i| mask >> i & 1 == 1).collect());
        }
    } else {
        subsets.push(Vec::new());
        for i in 0..d {
            subsets.push(alloc::vec![i]);
            for j in i + 1..d {
                subsets.push(alloc::vec![i, j]);
            }
        }
    }
    let mut seen: Vec<Subspace<F::Elem>> = Vec::new();
    let mut out = Vec::new();
    for s in subsets {
        let gens: Vec<Vec<F::Elem>> = s.iter().map(|&i| vecops::unit(f, d, i)).collect();
        let span = h.algebra().subalgebra_closure(&gens);
        if seen.contains(&span) {
            continue;
        }
        seen.push(span.clone());
        if coideal_violation(h, &span).is_none() {
            out.push(CoidealSubalgebra::detect(h, &span)?);
        }
    }
    Ok(out)
}
