//! Left `H`-module algebras, smash products, `H`-stable ideals and the
//! category of right `A`-modules with a compatible left `H`-action.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::ideal::ideal_closure;
use crate::algebra::probe::convolution_algebra;
use crate::algebra::{Algebra, Module, Side};
use crate::comodalg::{operator_closure, operator_simplicity, Simplicity};
use crate::error::{Error, Result};
use crate::exactla::{linear_kernel, vecops, Field, Matrix, Subspace};
use crate::hopf::HopfAlgebra;
use crate::report::ValidationReport;

pub mod catalog;
pub mod drivers;
#[cfg(test)]
mod tests;

pub use catalog::{builtin_module_algebra, MODALG_CATALOG};
pub use drivers::{verify_modalg_theorem, ModalgInputs, MODALG_THEOREMS};

#[derive(Clone, Debug)]
pub struct HModuleAlgebra<F: Field> {
    name: String,
    algebra: Algebra<F>,
    hopf: HopfAlgebra<F>,
    /// `action[k]` is `a ↦ h_k · a`.
    action: Vec<Matrix<F::Elem>>,
}

/// Which smash product to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashVariant {
    /// `(a#h)(b#g) = Σ a(h₁·b) # h₂g`.
    AH,
    /// `A^op # H^cop`, whose left modules are the objects of the module
    /// category: `(a#h)(b#g) = Σ (h₂·b)a # h₁g`.
    OpCop,
}

impl<F: Field> HModuleAlgebra<F> {
    pub fn new(name: impl Into<String>, algebra: Algebra<F>, hopf: HopfAlgebra<F>, action: Vec<Matrix<F::Elem>>) -> Result<Self> {
        if algebra.field().spec() != hopf.field().spec() {
            return Err(Error::FieldMismatch(format!("{}", algebra.field().spec()), format!("{}", hopf.field().spec())));
        }
        if action.len() != hopf.dim() {
            return Err(Error::DimensionMismatch(format!("{} action matrices for a Hopf algebra of dimension {}", action.len(), hopf.dim())));
        }
        for (k, m) in action.iter().enumerate() {
            m.check_shape(algebra.dim(), algebra.dim(), &format!("action of {}", hopf.labels()[k]))?;
        }
        Ok(HModuleAlgebra { name: name.into(), algebra, hopf, action })
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(algebra: &Algebra<F>, h: &HopfAlgebra<F>) -> Result<Self> {
        let f = h.field();
        let id = Matrix::identity(f, algebra.dim());
        let action = (0..h.dim()).map(|k| id.scale(f, &h.counit(&vecops::unit(f, h.dim(), k)))).collect();
        Self::new(format!("trivial({})", h.name()), algebra.clone(), h.clone(), action)
    }

    /// `h · b = Σ φ(h₁) b φ(s(h₂))` for an algebra map `φ: H → B` given by
    /// the images of the basis of `H`.
    pub fn inner(name: impl Into<String>, h: &HopfAlgebra<F>, b: &Algebra<F>, phi: &[Vec<F::Elem>]) -> Result<Self> {
        let f = h.field();
        let d = h.dim();
        if phi.len() != d {
            return Err(Error::DimensionMismatch(format!("{} images for a Hopf algebra of dimension {d}", phi.len())));
        }
        let phi_of = |v: &[F::Elem]| -> Vec<F::Elem> {
            let mut out = b.zero_vector();
            for (k, c) in v.iter().enumerate() {
                if !f.is_zero(c) {
                    vecops::axpy(f, &mut out, c, &phi[k]);
                }
            }
            out
        };
        let mut action = Vec::with_capacity(d);
        for k in 0..d {
            let mut m = Matrix::zeros(f, b.dim(), b.dim());
            for (p, q, c) in h.coalgebra().coproduct(k) {
                let left = b.left_mul_matrix(&phi[*p]);
                let right = b.right_mul_matrix(&phi_of(&h.apply_antipode(&vecops::unit(f, d, *q))));
                m.add_scaled(f, c, &left.mul(f, &right));
            }
            action.push(m);
        }
        Self::new(name, b.clone(), h.clone(), action)
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
    pub fn action(&self) -> &[Matrix<F::Elem>] {
        &self.action
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Matrix of `a ↦ h · a` for an arbitrary `h`.
    pub fn action_of(&self, h: &[F::Elem]) -> Matrix<F::Elem> {
        let f = self.field();
        let mut m = Matrix::zeros(f, self.dim(), self.dim());
        for (k, c) in h.iter().enumerate() {
            if !f.is_zero(c) {
                m.add_scaled(f, c, &self.action[k]);
            }
        }
        m
    }

    pub fn act(&self, h: &[F::Elem], a: &[F::Elem]) -> Vec<F::Elem> {
        self.action_of(h).mul_vec(self.field(), a)
    }

    /// Module axioms, measuring `h·(ab) = Σ (h₁·a)(h₂·b)` and `h·1 = ε(h)1`
    /// on basis elements.
    pub fn validate(&self) -> ValidationReport {
        let f = self.field();
        let (h, a) = (&self.hopf, &self.algebra);
        let (dh, da) = (h.dim(), a.dim());
        let mut r = ValidationReport::new();
        if self.action_of(&h.one()) != Matrix::identity(f, da) {
            r.push("unit acts as identity", Vec::new(), "1_H · a ≠ a".into());
        }
        for k in 0..dh {
            for l in 0..dh {
                let prod = h.mul(&vecops::unit(f, dh, k), &vecops::unit(f, dh, l));
                if self.action[k].mul(f, &self.action[l]) != self.action_of(&prod) {
                    r.push("module", alloc::vec![k, l], format!("{}·({}·a) ≠ ({}{})·a", h.labels()[k], h.labels()[l], h.labels()[k], h.labels()[l]));
                }
            }
        }
        let one = a.unit().to_vec();
        for k in 0..dh {
            let eps = h.counit(&vecops::unit(f, dh, k));
            if self.action[k].mul_vec(f, &one) != vecops::scale(f, &eps, &one) {
                r.push("unit measuring", alloc::vec![k], format!("{}·1 ≠ ε({})1", h.labels()[k], h.labels()[k]));
            }
        }
        for k in 0..dh {
            for i in 0..da {
                for j in 0..da {
                    let (ei, ej) = (a.basis_vector(i), a.basis_vector(j));
                    let lhs = self.action[k].mul_vec(f, &a.mul(&ei, &ej));
                    let mut rhs = a.zero_vector();
                    for (p, q, c) in h.coalgebra().coproduct(k) {
                        let t = a.mul(&self.action[*p].mul_vec(f, &ei), &self.action[*q].mul_vec(f, &ej));
                        vecops::axpy(f, &mut rhs, c, &t);
                    }
                    if lhs != rhs {
                        r.push(
                            "measuring",
                            alloc::vec![k, i, j],
                            format!("{}·({}{}) ≠ Σ ({}₁·{})({}₂·{})", h.labels()[k], a.label(i), a.label(j), h.labels()[k], a.label(i), h.labels()[k], a.label(j)),
                        );
                    }
                }
            }
        }
        r
    }

    /// Smash product on `a_i # h_k` at index `i · dim H + k`.
    pub fn smash_product(&self, variant: SmashVariant) -> Result<SmashProduct<F>> {
        let f = self.field();
        let (h, a) = (&self.hopf, &self.algebra);
        let (dh, da) = (h.dim(), a.dim());
        let d = da * dh;
        let labels: Vec<String> = (0..d).map(|t| format!("{}#{}", a.label(t / dh), h.labels()[t % dh])).collect();
        let unit = vecops::kron(f, a.unit(), &h.one());
        let alg = Algebra::from_fn(f.clone(), labels, unit, |s, t| {
            let (i, k) = (s / dh, s % dh);
            let (j, l) = (t / dh, t % dh);
            let ej = a.basis_vector(j);
            let ei = a.basis_vector(i);
            let el = vecops::unit(f, dh, l);
            let mut out = vecops::zero(f, d);
            for (p, q, c) in h.coalgebra().coproduct(k) {
                let (left, hp) = match variant {
                    SmashVariant::AH => (a.mul(&ei, &self.action[*p].mul_vec(f, &ej)), *q),
                    SmashVariant::OpCop => (a.mul(&self.action[*q].mul_vec(f, &ej), &ei), *p),
                };
                let right = h.mul(&vecops::unit(f, dh, hp), &el);
                vecops::axpy(f, &mut out, c, &vecops::kron(f, &left, &right));
            }
            out
        })?;
        let a_embed = Matrix::identity(f, da).kron(f, &Matrix::from_rows(dh, alloc::vec![h.one()]).transpose());
        let h_embed = Matrix::from_rows(da, alloc::vec![a.unit().to_vec()]).transpose().kron(f, &Matrix::identity(f, dh));
        Ok(SmashProduct { algebra: alg, variant, a_embed, h_embed })
    }

    /// Operators whose joint invariant subspaces are the `H`-stable ideals.
    pub fn ideal_operators(&self) -> Vec<Matrix<F::Elem>> {
        let a = &self.algebra;
        let mut ops: Vec<Matrix<F::Elem>> = (0..a.dim()).map(|i| a.left_regular(i)).collect();
        ops.extend((0..a.dim()).map(|i| a.right_regular(i)));
        ops.extend(self.action.iter().cloned());
        ops
    }

    pub fn is_stable(&self, space: &Subspace<F::Elem>) -> bool {
        let f = self.field();
        space.basis().row_iter().all(|v| self.action.iter().all(|m| space.contains(f, &m.mul_vec(f, v))))
    }

    /// Least `H`-stable ideal containing `seeds`.
    pub fn stable_closure(&self, seeds: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
        operator_closure(self.field(), self.dim(), &self.ideal_operators(), seeds).0
    }

    /// `K = {a : H·a ⊆ I}`, the largest `H`-stable ideal inside the ideal `I`.
    pub fn stable_inside(&self, ideal: &Subspace<F::Elem>) -> Subspace<F::Elem> {
        let f = self.field();
        let mut k = Subspace::full(f, self.dim());
        for m in &self.action {
            k = k.intersection(f, &ideal.preimage(f, m));
        }
        k
    }

    pub fn is_h_simple(&self) -> Result<Simplicity<F::Elem>> {
        operator_simplicity(self.field(), self.dim(), &self.ideal_operators())
    }

    /// `A` as an object of the module category.
    pub fn regular_object(&self) -> HAModule<F::Elem> {
        HAModule { module: Module::regular(&self.algebra, Side::Right), haction: self.action.clone() }
    }

    /// `τ_A: A → Hom(H, A)` into the convolution algebra, as a
    /// `(dim A · dim H) x dim A` matrix.
    pub fn tau(&self) -> Matrix<F::Elem> {
        tau_matrix(self.field(), self.dim(), &self.action)
    }
}

fn tau_matrix<F: Field>(f: &F, dm: usize, haction: &[Matrix<F::Elem>]) -> Matrix<F::Elem> {
    let dh = haction.len();
    let mut t = Matrix::zeros(f, dm * dh, dm);
    for (k, m) in haction.iter().enumerate() {
        for j in 0..dm {
            for i in 0..dm {
                t.set(i * dh + k, j, m.get(i, j).clone());
            }
        }
    }
    t
}

#[derive(Clone, Debug)]
pub struct SmashProduct<F: Field> {
    pub algebra: Algebra<F>,
    pub variant: SmashVariant,
    /// `a ↦ a # 1`.
    pub a_embed: Matrix<F::Elem>,
    /// `h ↦ 1 # h`.
    pub h_embed: Matrix<F::Elem>,
}

/// A right `A`-module with a compatible left `H`-action,
/// `h(ma) = Σ (h₁m)(h₂·a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HAModule<E> {
    pub module: Module<E>,
    pub haction: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> HAModule<E> {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn validate<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>) -> ValidationReport {
        let f = ma.field();
        let (h, a) = (ma.hopf(), ma.algebra());
        let mut r = ValidationReport::new();
        if self.module.side() != Side::Right {
            r.push("side", Vec::new(), "objects are right A-modules".into());
            return r;
        }
        r.extend(self.module.validate(a).prefixed("A-module"));
        if self.haction.len() != h.dim() || self.haction.iter().any(|m| m.rows() != self.dim() || m.cols() != self.dim()) {
            r.push("shape", Vec::new(), "H-action matrices have the wrong shape".into());
            return r;
        }
        let hof = |v: &[E]| -> Matrix<E> {
            let mut m = Matrix::zeros(f, self.dim(), self.dim());
            for (k, c) in v.iter().enumerate() {
                if !f.is_zero(c) {
                    m.add_scaled(f, c, &self.haction[k]);
                }
            }
            m
        };
        if hof(&h.one()) != Matrix::identity(f, self.dim()) {
            r.push("H-module", Vec::new(), "1_H does not act as the identity".into());
        }
        for k in 0..h.dim() {
            for l in 0..h.dim() {
                let prod = h.mul(&vecops::unit(f, h.dim(), k), &vecops::unit(f, h.dim(), l));
                if self.haction[k].mul(f, &self.haction[l]) != hof(&prod) {
                    r.push("H-module", alloc::vec![k, l], format!("action of {}{} is not the composite", h.labels()[k], h.labels()[l]));
                }
            }
        }
        for k in 0..h.dim() {
            for j in 0..a.dim() {
                let lhs = self.haction[k].mul(f, self.module.action(j));
                let mut rhs = Matrix::zeros(f, self.dim(), self.dim());
                for (p, q, c) in h.coalgebra().coproduct(k) {
                    let ra = self.module.action_of(f, &ma.action()[*q].col_vec(j));
                    rhs.add_scaled(f, c, &ra.mul(f, &self.haction[*p]));
                }
                if lhs != rhs {
                    r.push("compatibility", alloc::vec![k, j], format!("{}(m{}) ≠ Σ ({}₁m)({}₂·{})", h.labels()[k], a.label(j), h.labels()[k], h.labels()[k], a.label(j)));
                }
            }
        }
        r
    }

    pub fn direct_sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let haction = self.haction.iter().zip(&other.haction).map(|(x, y)| x.direct_sum(f, y)).collect();
        HAModule { module: self.module.direct_sum(f, &other.module), haction }
    }

    /// Left module over `A^op # H^cop`: `a # h` acts as `m ↦ (hm)a`.
    pub fn to_smash<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>, sp: &SmashProduct<F>) -> Result<Module<E>> {
        let f = ma.field();
        if sp.variant != SmashVariant::OpCop {
            return Err(Error::Input("objects correspond to modules over A^op # H^cop".into()));
        }
        let dh = ma.hopf().dim();
        let actions = (0..sp.algebra.dim()).map(|t| self.module.action(t / dh).mul(f, &self.haction[t % dh])).collect();
        Module::new(&sp.algebra, Side::Left, self.dim(), actions)
    }

    /// Inverse of [`HAModule::to_smash`].
    pub fn from_smash<F: Field<Elem = E>>(ma: &HModuleAlgebra<F>, sp: &SmashProduct<F>, m: &Module<E>) -> Result<Self> {
        let f = ma.field();
        if sp.variant != SmashVariant::OpCop || m.side() != Side::Left {
            return Err(Error::Input("expected a left module over A^op # H^cop".into()));
        }
        let (a, h) = (ma.algebra(), ma.hopf());
        let ra = (0..a.dim()).map(|i| m.action_of(f, &sp.a_embed.col_vec(i))).collect();
        let haction = (0..h.dim()).map(|k| m.action_of(f, &sp.h_embed.col_vec(k))).collect();
        Ok(HAModule { module: Module::new(a, Side::Right, m.dim(), ra)?, haction })
    }

    /// Subspaces closed under both structures.
    pub fn is_subobject<F: Field<Elem = E>>(&self, f: &F, sub: &Subspace<E>) -> bool {
        sub.basis().row_iter().all(|v| {
            self.module.actions().iter().chain(&self.haction).all(|m| sub.contains(f, &m.mul_vec(f, v)))
        })
    }

    /// The ideal generated by all coefficients of relations `Σ e_i x_i = 0`.
    pub fn relation_ideal<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>, gens: &[Vec<E>]) -> Result<Subspace<E>> {
        let f = ma.field();
        let a = ma.algebra();
        let map = crate::fitting::presentation_map(a, &self.module, gens);
        if map.rank(f) != self.dim() {
            return Err(Error::Input(format!("{} elements do not generate the module", gens.len())));
        }
        let da = a.dim();
        let kernel = linear_kernel(f, &map);
        let mut coeffs = Vec::new();
        for v in kernel.basis().row_iter() {
            for i in 0..gens.len() {
                coeffs.push(v[i * da..(i + 1) * da].to_vec());
            }
        }
        Ok(ideal_closure(a, &coeffs).space)
    }

    /// `I_gens ⊆ K ⊆ I` with `K = {a : H·a ⊆ I}` for an ideal `I ⊇ I_gens`.
    pub fn sandwich<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>, gens: &[Vec<E>], ideal: &Subspace<E>) -> Result<StableSandwich<E>> {
        let f = ma.field();
        let i_gens = self.relation_ideal(ma, gens)?;
        if !ideal.contains_space(f, &i_gens) {
            return Err(Error::Input("the ideal does not contain the relation ideal".into()));
        }
        let k = ma.stable_inside(ideal);
        let k_is_ideal = crate::algebra::ideal::closure(ma.algebra(), &k.basis_vectors(), true, true) == k;
        let k_stable = ma.is_stable(&k) && k_is_ideal;
        let holds = k_stable && k.contains_space(f, &i_gens) && ideal.contains_space(f, &k);
        Ok(StableSandwich { i_gens, ideal: ideal.clone(), k, k_stable, holds })
    }

    /// `Hom(H, M) ≅ M ⊗ H*` as a right module over the convolution algebra
    /// `Hom(H, A)`; basis `m_j ⊗ c^l` at index `j · dim H + l`.
    pub fn hom_from_h<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>) -> Result<(Algebra<F>, Module<E>)> {
        let f = ma.field();
        let (a, h) = (ma.algebra(), ma.hopf());
        let conv = convolution_algebra(h.coalgebra(), a)?;
        let (dh, dm) = (h.dim(), self.dim());
        // dual[l][k][m]: coefficient of c^m in c^l * c^k.
        let mut dual = alloc::vec![alloc::vec![vecops::zero(f, dh); dh]; dh];
        for m in 0..dh {
            for (l, k, c) in h.coalgebra().coproduct(m) {
                dual[*l][*k][m] = f.add(&dual[*l][*k][m], c);
            }
        }
        let n = dm * dh;
        let mut actions = Vec::with_capacity(conv.dim());
        for t in 0..conv.dim() {
            let (i, k) = (t / dh, t % dh);
            let ri = self.module.action(i);
            let mut mat = Matrix::zeros(f, n, n);
            for j in 0..dm {
                for l in 0..dh {
                    for m in 0..dh {
                        let c = &dual[l][k][m];
                        if f.is_zero(c) {
                            continue;
                        }
                        for j2 in 0..dm {
                            let x = ri.get(j2, j);
                            if !f.is_zero(x) {
                                let cur = mat.get(j2 * dh + m, j * dh + l).clone();
                                mat.set(j2 * dh + m, j * dh + l, f.add(&cur, &f.mul(x, c)));
                            }
                        }
                    }
                }
            }
            actions.push(mat);
        }
        let module = Module::new(&conv, Side::Right, n, actions)?;
        Ok((conv, module))
    }

    /// `m̂ = m ⊗ ε` in `Hom(H, M)`.
    pub fn hat<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>, m: &[E]) -> Vec<E> {
        let h = ma.hopf();
        let f = ma.field();
        let eps: Vec<E> = (0..h.dim()).map(|k| h.counit(&vecops::unit(f, h.dim(), k))).collect();
        vecops::kron(f, m, &eps)
    }

    /// `τ(m): h ↦ hm` in `Hom(H, M)`.
    pub fn tau_of<F: Field<Elem = E>>(&self, ma: &HModuleAlgebra<F>, m: &[E]) -> Vec<E> {
        tau_matrix(ma.field(), self.dim(), &self.haction).mul_vec(ma.field(), m)
    }
}

#[derive(Clone, Debug)]
pub struct StableSandwich<E> {
    pub i_gens: Subspace<E>,
    pub ideal: Subspace<E>,
    pub k: Subspace<E>,
    pub k_stable: bool,
    pub holds: bool,
}
