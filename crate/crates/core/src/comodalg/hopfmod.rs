//! Hopf modules over a comodule algebra: an `A`-module `M` (right or left)
//! with a right `H`-coaction such that `ρ(ma) = ρ(m)ρ(a)` (right) or
//! `ρ(am) = ρ(a)ρ(m)` (left).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{operator_closure, ComoduleAlgebra};
use crate::algebra::ideal::ideal_closure;
use crate::algebra::{Module, Side};
use crate::coalgebra::Comodule;
use crate::error::{Error, Result};
use crate::exactla::{linear_kernel, vecops, Field, Matrix, Subspace};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule<E> {
    module: Module<E>,
    coaction: Comodule<E>,
}

/// Result of splitting a Hopf module over `(H, Δ)` as `M₀ ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalSplit<E> {
    /// `M₀ = {m : ρ(m) = m ⊗ 1}`.
    pub m0: Subspace<E>,
    /// Matrix of `M₀ ⊗ H → M`, `m ⊗ h ↦ m·h`, on the basis of `M₀`.
    pub map: Matrix<E>,
    pub bijective: bool,
}

/// Lemma-3.2-style sandwich `I_gens ⊆ K ⊆ I` with `K = ρ⁻¹(I ⊗ H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sandwich<E> {
    pub i_gens: Subspace<E>,
    pub ideal: Subspace<E>,
    pub k: Subspace<E>,
    pub k_costable: bool,
    pub holds: bool,
}

impl<E: Clone + PartialEq> HopfModule<E> {
    pub fn side(&self) -> Side {
        self.module.side()
    }
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
    pub fn module(&self) -> &Module<E> {
        &self.module
    }
    pub fn coaction(&self) -> &Comodule<E> {
        &self.coaction
    }
}

impl<E: Clone + PartialEq> HopfModule<E> {
    pub fn new<F: Field<Elem = E>>(ca: &ComoduleAlgebra<F>, module: Module<E>, coaction: Comodule<E>) -> Result<Self> {
        if coaction.side() != Side::Right || coaction.dim() != module.dim() || coaction.coalgebra_dim() != ca.hopf().dim() {
            return Err(Error::DimensionMismatch(format!(
                "coaction must be a right H-comodule of dimension {} (got {} side, dimension {}, coalgebra dimension {})",
                module.dim(),
                coaction.side().name(),
                coaction.dim(),
                coaction.coalgebra_dim()
            )));
        }
        if module.actions().len() != ca.dim() {
            return Err(Error::DimensionMismatch(format!("module has {} action matrices, algebra has dimension {}", module.actions().len(), ca.dim())));
        }
        Ok(HopfModule { module, coaction })
    }

    /// `A` itself with the regular action on `side` and `ρ_A`.
    pub fn regular<F: Field<Elem = E>>(ca: &ComoduleAlgebra<F>, side: Side) -> Self {
        HopfModule { module: Module::regular(ca.algebra(), side), coaction: ca.as_comodule() }
    }

    /// Product of `t ∈ M ⊗ H` with `s ∈ A ⊗ H` on the module's side.
    fn act_tensor<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, t: &[E], s: &[E]) -> Vec<E> {
        let f = ca.field();
        let hal = ca.hopf().algebra();
        let (dm, dh) = (self.dim(), ca.hopf().dim());
        let mut out = vecops::zero(f, dm * dh);
        for (si, sc) in s.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            let (a, h2) = (si / dh, si % dh);
            let act = self.module.action(a);
            for (ti, tc) in t.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                let (m, h) = (ti / dh, ti % dh);
                let coef = f.mul(sc, tc);
                let prod = match self.side() {
                    Side::Right => hal.basis_product(h, h2),
                    Side::Left => hal.basis_product(h2, h),
                };
                for m2 in 0..dm {
                    let am = act.get(m2, m);
                    if f.is_zero(am) {
                        continue;
                    }
                    let c1 = f.mul(&coef, am);
                    for (k, ck) in prod {
                        f.add_mul_assign(&mut out[m2 * dh + k], &c1, ck);
                    }
                }
            }
        }
        out
    }

    pub fn validate<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>) -> ValidationReport {
        let f = ca.field();
        let mut r = self.module.validate(ca.algebra()).prefixed("module");
        r.extend(self.coaction.validate(ca.hopf().coalgebra()).prefixed("comodule"));
        let dm = self.dim();
        for i in 0..dm {
            let rho_m = self.coaction.coaction().col_vec(i);
            for j in 0..ca.dim() {
                let lhs = self.coaction.coact(f, &self.module.action(j).col_vec(i));
                let rhs = self.act_tensor(ca, &rho_m, &ca.rho().col_vec(j));
                if lhs != rhs {
                    let what = match self.side() {
                        Side::Right => format!("ρ(m{i}·{0}) ≠ ρ(m{i})ρ({0})", ca.algebra().label(j)),
                        Side::Left => format!("ρ({0}·m{i}) ≠ ρ({0})ρ(m{i})", ca.algebra().label(j)),
                    };
                    r.push("hopf module compatibility", vec![i, j], what);
                }
            }
        }
        r
    }

    pub fn direct_sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        HopfModule { module: self.module.direct_sum(f, &other.module), coaction: self.coaction.direct_sum(f, &other.coaction) }
    }

    pub fn power<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, n: usize) -> Self {
        let f = ca.field();
        let mut out = HopfModule {
            module: Module::zero(ca.algebra(), self.side()),
            coaction: Comodule::zero(f, Side::Right, ca.hopf().dim()),
        };
        for _ in 0..n {
            out = out.direct_sum(f, self);
        }
        out
    }

    /// `(id ⊗ ξ_k) ∘ ρ_M` for the dual basis of `H`.
    pub fn coefficient_operators<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>) -> Vec<Matrix<E>> {
        let f = ca.field();
        let (dm, dh) = (self.dim(), ca.hopf().dim());
        (0..dh)
            .map(|k| {
                let mut t = Matrix::zeros(f, dm, dm);
                for m in 0..dm {
                    for m2 in 0..dm {
                        t.set(m2, m, self.coaction.coaction().get(m2 * dh + k, m).clone());
                    }
                }
                t
            })
            .collect()
    }

    /// Action matrices and coefficient operators: the subspaces they
    /// preserve are the Hopf submodules.
    pub fn subobject_operators<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>) -> Vec<Matrix<E>> {
        let mut ops = self.module.actions().to_vec();
        ops.extend(self.coefficient_operators(ca));
        ops
    }

    /// Least Hopf submodule containing `vectors`.
    pub fn generated_subobject<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, vectors: &[Vec<E>]) -> Subspace<E> {
        operator_closure(ca.field(), self.dim(), &self.subobject_operators(ca), vectors).0
    }

    pub fn is_subobject<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, sub: &Subspace<E>) -> bool {
        let f = ca.field();
        let ops = self.subobject_operators(ca);
        sub.basis().row_iter().all(|v| ops.iter().all(|g| sub.contains(f, &g.mul_vec(f, v))))
    }

    pub fn restrict<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, sub: &Subspace<E>) -> Result<Self> {
        if !self.is_subobject(ca, sub) {
            return Err(Error::Input("subspace is not a Hopf submodule".into()));
        }
        let f = ca.field();
        Ok(HopfModule { module: self.module.restrict(f, sub), coaction: self.coaction.restrict(f, sub)? })
    }

    pub fn quotient<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, sub: &Subspace<E>) -> Result<Self> {
        if !self.is_subobject(ca, sub) {
            return Err(Error::Input("subspace is not a Hopf submodule".into()));
        }
        let f = ca.field();
        Ok(HopfModule { module: self.module.quotient(f, sub), coaction: self.coaction.quotient(f, sub)? })
    }

    /// `V ⊗ H` with `A` acting through `ρ` and coaction `id ⊗ Δ`; basis
    /// `(v, h)` at index `v·dim H + h`.
    pub fn induced<F: Field<Elem = E>>(ca: &ComoduleAlgebra<F>, v: &Module<E>) -> Result<Self> {
        let f = ca.field();
        let hal = ca.hopf().algebra();
        let (dv, dh, da) = (v.dim(), ca.hopf().dim(), ca.dim());
        let n = dv * dh;
        let mut actions = Vec::with_capacity(da);
        for j in 0..da {
            let r = ca.rho().col_vec(j);
            let mut m = Matrix::zeros(f, n, n);
            for (ri, rc) in r.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                let (a2, h2) = (ri / dh, ri % dh);
                let act = v.action(a2);
                for vi in 0..dv {
                    for h in 0..dh {
                        let prod = match v.side() {
                            Side::Right => hal.basis_product(h, h2),
                            Side::Left => hal.basis_product(h2, h),
                        };
                        for v2 in 0..dv {
                            let x = act.get(v2, vi);
                            if f.is_zero(x) {
                                continue;
                            }
                            let c = f.mul(rc, x);
                            for (k, ck) in prod {
                                let e = m.get(v2 * dh + k, vi * dh + h).clone();
                                m.set(v2 * dh + k, vi * dh + h, f.add(&e, &f.mul(&c, ck)));
                            }
                        }
                    }
                }
            }
            actions.push(m);
        }
        let module = Module::new(ca.algebra(), v.side(), n, actions)?;
        let mut co = Matrix::zeros(f, n * dh, n);
        for vi in 0..dv {
            for h in 0..dh {
                for (h1, h2, c) in ca.hopf().coalgebra().coproduct(h) {
                    co.set((vi * dh + h1) * dh + h2, vi * dh + h, c.clone());
                }
            }
        }
        let coaction = Comodule::new(Side::Right, n, dh, co)?;
        let out = HopfModule::new(ca, module, coaction)?;
        debug_assert!(out.validate(ca).is_valid(), "induced Hopf module failed validation");
        Ok(out)
    }

    /// Linear dual with `(ξa)(m) = ξ(am)` (or `(aξ)(m) = ξ(ma)`) and
    /// right coaction obtained from `ξ ↦ (ξ ⊗ id)∘ρ` followed by
    /// `h ⊗ ξ ↦ ξ ⊗ s(h)` for left modules, `ξ ⊗ s⁻¹(h)` for right ones.
    pub fn dual<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>) -> Result<Self> {
        let f = ca.field();
        let s = match self.side() {
            Side::Left => ca.hopf().antipode().clone(),
            Side::Right => ca
                .hopf()
                .antipode_inverse()
                .cloned()
                .ok_or_else(|| Error::Input("dual of a right Hopf module needs the inverse antipode".into()))?,
        };
        let (dm, dh) = (self.dim(), ca.hopf().dim());
        let rho = self.coaction.coaction();
        let mut co = Matrix::zeros(f, dm * dh, dm);
        for j in 0..dm {
            for i in 0..dm {
                for h in 0..dh {
                    let c = rho.get(j * dh + h, i);
                    if f.is_zero(c) {
                        continue;
                    }
                    for h2 in 0..dh {
                        let sc = s.get(h2, h);
                        if !f.is_zero(sc) {
                            let e = co.get(i * dh + h2, j).clone();
                            co.set(i * dh + h2, j, f.add(&e, &f.mul(c, sc)));
                        }
                    }
                }
            }
        }
        let coaction = Comodule::new(Side::Right, dm, dh, co)?;
        HopfModule::new(ca, self.module.dual(), coaction)
    }

    /// For `ca = (H, Δ)` and a right Hopf module: `M₀ ⊗ H ≅ M`.
    pub fn fundamental_split<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>) -> Result<FundamentalSplit<E>> {
        if !ca.is_regular() || self.side() != Side::Right {
            return Err(Error::Input("the splitting applies to right Hopf modules over H with ρ = Δ".into()));
        }
        let f = ca.field();
        let (dm, dh) = (self.dim(), ca.hopf().dim());
        let one = ca.hopf().one();
        let mut triv = Matrix::zeros(f, dm * dh, dm);
        for m in 0..dm {
            for (k, c) in one.iter().enumerate() {
                triv.set(m * dh + k, m, c.clone());
            }
        }
        let m0 = linear_kernel(f, &self.coaction.coaction().sub(f, &triv));
        let mut cols = Vec::with_capacity(m0.dim() * dh);
        for v in m0.basis().row_iter() {
            for h in 0..dh {
                cols.push(self.module.action(h).mul_vec(f, v));
            }
        }
        let map = Matrix::from_rows(dm, cols).transpose();
        let bijective = map.rows() == map.cols() && map.rank(f) == dm;
        Ok(FundamentalSplit { m0, map, bijective })
    }

    /// Matrix of `A^n → M`, `(x_i) ↦ Σ e_i x_i` (or `Σ x_i e_i`); column
    /// `(i, b)` at index `i·dim A + b`.
    pub fn generator_map<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, gens: &[Vec<E>]) -> Matrix<E> {
        let f = ca.field();
        let mut cols = Vec::with_capacity(gens.len() * ca.dim());
        for g in gens {
            for b in 0..ca.dim() {
                cols.push(self.module.action(b).mul_vec(f, g));
            }
        }
        Matrix::from_rows(self.dim(), cols).transpose()
    }

    /// The ideal generated by all coefficients of relations among `gens`.
    pub fn relation_ideal<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, gens: &[Vec<E>]) -> Result<Subspace<E>> {
        let f = ca.field();
        let map = self.generator_map(ca, gens);
        if map.rank(f) != self.dim() {
            return Err(Error::Input(format!("{} elements do not generate the module", gens.len())));
        }
        let da = ca.dim();
        let kernel = linear_kernel(f, &map);
        let mut coeffs = Vec::new();
        for v in kernel.basis().row_iter() {
            for i in 0..gens.len() {
                coeffs.push(v[i * da..(i + 1) * da].to_vec());
            }
        }
        Ok(ideal_closure(ca.algebra(), &coeffs).space)
    }

    /// `I_gens ⊆ ρ⁻¹(I ⊗ H) ⊆ I` for an ideal `I ⊇ I_gens`.
    pub fn sandwich<F: Field<Elem = E>>(&self, ca: &ComoduleAlgebra<F>, gens: &[Vec<E>], ideal: &Subspace<E>) -> Result<Sandwich<E>> {
        let f = ca.field();
        let i_gens = self.relation_ideal(ca, gens)?;
        if !ideal.contains_space(f, &i_gens) {
            return Err(Error::Input("the ideal does not contain the relation ideal".into()));
        }
        let k = ca.largest_costable_inside(ideal);
        let holds = k.costable && k.space.contains_space(f, &i_gens) && ideal.contains_space(f, &k.space);
        Ok(Sandwich { i_gens, ideal: ideal.clone(), k: k.space, k_costable: k.costable, holds })
    }
}

/// Human-readable name used in battery listings.
pub fn describe_dims(m: &HopfModule<impl Clone + PartialEq>) -> String {
    format!("{} module of dimension {}", m.side().name(), m.dim())
}
