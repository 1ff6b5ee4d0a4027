//! Drivers for module algebras: weak finiteness of convolution algebras
//! (7.1), the two generator systems of `Hom(H, M)` (7.2), stable ideal
//! sandwiches (7.3), projectivity and freeness of objects (7.6) and of
//! `A#H`-modules (7.7).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HAModule, HModuleAlgebra, SmashVariant, StableSandwich};
use crate::algebra::oracles::{is_free, is_projective, top_generators, Freeness, Projectivity, DEFAULT_TRIALS};
use crate::algebra::probe::{convolution_algebra, weak_finiteness_probe};
use crate::algebra::{Algebra, Module, Side};
use crate::coalgebra::Coalgebra;
use crate::comodalg::catalog::matrix_algebra;
use crate::comodalg::Simplicity;
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Subspace};
use crate::report::{Check, Status, TheoremReport};

pub const MODALG_THEOREMS: &[&str] = &["7.1", "7.2", "7.3", "7.6", "7.7"];

#[derive(Clone, Debug)]
pub struct ModalgInputs<F: Field> {
    /// Extra objects appended to the default battery of 7.3 and 7.6.
    pub battery: Vec<(String, HAModule<F::Elem>)>,
    /// `M` and its generators for 7.2 (default `A` and a minimal
    /// generating set).
    pub module: Option<(HAModule<F::Elem>, Vec<Vec<F::Elem>>)>,
    /// `C` and `B` for 7.1 (default the coalgebra of `H` and `A`).
    pub coalgebra: Option<Coalgebra<F>>,
    pub base: Option<Algebra<F>>,
    /// Matrix size for 7.1.
    pub n: usize,
    pub probe_trials: u64,
    /// Random generator systems per battery object for 7.3.
    pub sandwiches: usize,
    pub trials: u64,
}

impl<F: Field> Default for ModalgInputs<F> {
    fn default() -> Self {
        ModalgInputs { battery: Vec::new(), module: None, coalgebra: None, base: None, n: 2, probe_trials: 100, sandwiches: 5, trials: DEFAULT_TRIALS }
    }
}

pub fn verify_modalg_theorem<F: Field>(id: &str, ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>, seed: u64) -> Result<TheoremReport> {
    match id {
        "7.1" => verify_convolution_finite(ma, inputs, seed),
        "7.2" => verify_generator_systems(ma, inputs),
        "7.3" => verify_sandwiches(ma, inputs, seed),
        "7.6" => verify_projectivity(ma, inputs, seed),
        "7.7" => verify_smash_modules(ma, inputs, seed),
        _ => Err(Error::Input(format!("unknown theorem id {id:?}; known: {}", MODALG_THEOREMS.join(", ")))),
    }
}

fn require_valid<F: Field>(ma: &HModuleAlgebra<F>) -> Result<String> {
    let r = ma.validate();
    match r.violations.first() {
        None => Ok(format!("{} validates as an {}-module algebra", ma.name(), ma.hopf().name())),
        Some(v) => Err(Error::Input(format!("{} fails validation ({} violations, first: {}: {})", ma.name(), r.violations.len(), v.axiom, v.detail))),
    }
}

fn require_h_simple<F: Field>(ma: &HModuleAlgebra<F>) -> Result<String> {
    match ma.is_h_simple()? {
        Simplicity::Simple { end_dim } => Ok(format!(
            "A is H-simple: multiplications and the H-action act irreducibly on A with commutant of dimension {end_dim}"
        )),
        Simplicity::NotSimple { witness } => Err(Error::hypothesis("H-simple", format!("A has an H-stable ideal of dimension {} out of {}", witness.dim(), ma.dim()))),
        Simplicity::Inconclusive { reason } => Err(Error::Inconclusive(format!("H-simplicity undecided: {reason}"))),
    }
}

/// Weak finiteness of the factor rings `A/Q ⊗ H*`, argued from finite
/// dimension and probed once for evidence.
fn finiteness_line<F: Field>(ma: &HModuleAlgebra<F>, seed: u64) -> Result<String> {
    let conv = convolution_algebra(ma.hopf().coalgebra(), ma.algebra())?;
    let p = weak_finiteness_probe(&conv, 1, 10, seed)?;
    if !p.is_clean() {
        return Err(Error::hypothesis("weak finiteness", format!("Hom(H, A) probe found XY = 1 ≠ YX at trials {:?}", p.violations)));
    }
    Ok(format!(
        "no coaction-side finiteness condition is needed: Hom(H, A/I) is weakly finite for every ideal I (convolution algebras over weakly finite rings); probe of Hom(H, A) clean on {} samples",
        p.trials
    ))
}

fn random_vector<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..n).map(|_| f.sample(rng, 8)).collect()
}

/// Objects of the module category: `A`, the smash product over itself, its
/// simple modules, a direct sum and a random subobject and quotient.
pub fn default_objects<F: Field>(ma: &HModuleAlgebra<F>, seed: u64) -> Result<Vec<(String, HAModule<F::Elem>)>> {
    let f = ma.field();
    let sp = ma.smash_product(SmashVariant::OpCop)?;
    let s = &sp.algebra;
    let w = s.wedderburn()?;
    let mut out = alloc::vec![("A".into(), ma.regular_object())];
    let reg = Module::regular(s, Side::Left);
    out.push(("A^op#H^cop".into(), HAModule::from_smash(ma, &sp, &reg)?));
    for i in 0..w.block_count() {
        out.push((format!("S{i}"), HAModule::from_smash(ma, &sp, w.simple(Side::Left, i))?));
    }
    let s0 = HAModule::from_smash(ma, &sp, w.simple(Side::Left, 0))?;
    out.push(("A⊕S0".into(), ma.regular_object().direct_sum(f, &s0)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let v = random_vector(f, reg.dim(), &mut rng);
        let sub = reg.submodule(s, &[v]);
        if !sub.is_zero() && !sub.is_full() {
            out.push(("sub(A^op#H^cop)".into(), HAModule::from_smash(ma, &sp, &reg.restrict(f, &sub))?));
            out.push(("A^op#H^cop/sub".into(), HAModule::from_smash(ma, &sp, &reg.quotient(f, &sub))?));
            break;
        }
    }
    Ok(out)
}

fn battery<F: Field>(ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>, seed: u64) -> Result<Vec<(String, HAModule<F::Elem>)>> {
    let mut b = default_objects(ma, seed)?;
    b.extend(inputs.battery.iter().cloned());
    Ok(b)
}

/// `(dim M/MQ, dim A/Q)` for every maximal ideal `Q` (`QM` for left modules).
fn top_dims<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>) -> Result<Vec<(usize, usize)>> {
    let w = alg.wedderburn()?;
    Ok(w.max_ideals.iter().map(|q| (m.dim() - m.ideal_submodule(alg, q).dim(), alg.dim() - q.dim())).collect())
}

/// Projective, and free iff `M/MQ` is free over `A/Q` for some `Q`; for the
/// maximiser `P` of `r_Q`, `M^t` is free where `t` clears `r_P`.
fn projectivity_check<F: Field>(alg: &Algebra<F>, id: &str, subject: String, m: &Module<F::Elem>, trials: u64, seed: u64) -> Result<Check> {
    let mut c = Check::new(id, subject);
    let proj = is_projective(alg, m)?;
    let free = is_free(alg, m, trials, seed)?;
    let tops = top_dims(alg, m)?;
    let r_q: Vec<String> = tops.iter().map(|&(t, a)| format!("{t}/{a}")).collect();
    c = c.witness(format!("r_Q(M) = [{}] over the maximal ideals", r_q.join(", ")));
    let free_somewhere = tops.iter().any(|&(t, a)| t % a == 0);
    match &free {
        Freeness::Free { rank, .. } => c = c.witness(format!("free of rank {rank}")),
        Freeness::NotFree { stage, detail } => c = c.witness(format!("not free ({stage:?}): {detail}")),
    }
    match &proj {
        Projectivity::Yes { generators, .. } => c = c.witness(format!("projective: splitting of A^{} → M verified", generators.len())),
        Projectivity::No { reason, .. } => c = c.witness(format!("not projective: {reason}")),
    }
    let mut ok = proj.is_yes() && free.is_free() == free_somewhere;
    if let Some(p) = (0..tops.len()).reduce(|best, i| if tops[i].0 * tops[best].1 > tops[best].0 * tops[i].1 { i } else { best }) {
        let (tp, ap) = tops[p];
        let t = ap / tp.gcd(&ap).max(1);
        if t > 1 && m.dim() * t <= 64 {
            let pow_free = is_free(alg, &m.power(alg, t), trials, seed)?.is_free();
            c = c.witness(format!("M^{t} is {}", if pow_free { "free" } else { "not free" }));
            ok &= pow_free;
        }
    }
    let conclusion = format!("projective = {}, free = {}, M/MQ free for some Q = {}", proj.is_yes(), free.is_free(), free_somewhere);
    Ok(c.conclude(conclusion, Status::from_bool(ok)))
}

// ---------------------------------------------------------------------------
// 7.1
// ---------------------------------------------------------------------------

fn verify_convolution_finite<F: Field>(ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>, seed: u64) -> Result<TheoremReport> {
    let f = ma.field();
    let c = inputs.coalgebra.clone().unwrap_or_else(|| ma.hopf().coalgebra().clone());
    let b = inputs.base.clone().unwrap_or_else(|| ma.algebra().clone());
    let n = inputs.n.max(1);
    let mut rep = TheoremReport::new("7.1", "the convolution algebra Hom(C, B) over a weakly finite B is weakly finite");
    let hyp = format!("B of dimension {} is finite-dimensional, hence weakly finite; C has dimension {}", b.dim(), c.dim());
    let conv = convolution_algebra(&c, &b)?;
    let p = weak_finiteness_probe(&conv, n, inputs.probe_trials, seed)?;
    rep.push(
        Check::new("7.1", format!("Hom(C, B) in {n}x{n} matrices"))
            .hypothesis(hyp.clone())
            .witness(format!("{} of {} samples had a right inverse; violations at {:?}", p.solvable, p.trials, p.violations))
            .conclude(if p.is_clean() { "XY = 1 implied YX = 1 on every sample" } else { "XY = 1 but YX ≠ 1 observed" }, Status::from_bool(p.is_clean())),
    );
    let bn = matrix_algebra(f, n)?.tensor(&b)?;
    let conv_n = convolution_algebra(&c, &bn)?;
    let dims_ok = conv_n.dim() == n * n * conv.dim();
    let p1 = weak_finiteness_probe(&conv_n, 1, inputs.probe_trials, seed.wrapping_add(1))?;
    rep.push(
        Check::new("7.1", format!("Hom(C, Mat_{n}(B)) ≅ Mat_{n}(Hom(C, B))"))
            .hypothesis(hyp)
            .witness(format!("dimension {} = {n}² · {}", conv_n.dim(), conv.dim()))
            .witness(format!("{} of {} samples invertible on one side; violations at {:?}", p1.solvable, p1.trials, p1.violations))
            .conclude(
                if p1.is_clean() && dims_ok { "weakly 1-finite on every sample" } else { "probe or dimension count failed" },
                Status::from_bool(p1.is_clean() && dims_ok),
            ),
    );
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 7.2
// ---------------------------------------------------------------------------

fn verify_generator_systems<F: Field>(ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>) -> Result<TheoremReport> {
    let f = ma.field();
    let valid = require_valid(ma)?;
    let (m, gens) = match &inputs.module {
        Some((m, g)) => (m.clone(), g.clone()),
        None => {
            let m = ma.regular_object();
            let g = top_generators(ma.algebra(), &m.module)?;
            (m, g)
        }
    };
    let v = m.validate(ma);
    if let Some(x) = v.violations.first() {
        return Err(Error::hypothesis("object", format!("M fails validation: {}: {}", x.axiom, x.detail)));
    }
    let map = crate::fitting::presentation_map(ma.algebra(), &m.module, &gens);
    if map.rank(f) != m.dim() {
        return Err(Error::hypothesis("generators", format!("{} elements do not generate M", gens.len())));
    }
    let (conv, hom) = m.hom_from_h(ma)?;
    let hv = hom.validate(&conv);
    if !hv.is_valid() {
        return Err(Error::Input(format!("Hom(H, M) fails module validation: {}", hv.violations[0].detail)));
    }
    let hyps = alloc::vec![
        valid,
        format!("M of dimension {} validated; {} generators span M over A", m.dim(), gens.len()),
        format!("Hom(H, M) ≅ M ⊗ H* of dimension {} is a right module over Hom(H, A) of dimension {}", hom.dim(), conv.dim()),
    ];
    let mut rep = TheoremReport::new("7.2", "the elements ê_i and τ(e_i) each generate Hom(H, M) over the convolution algebra");
    for (name, vecs) in [
        ("ê_i", gens.iter().map(|g| m.hat(ma, g)).collect::<Vec<_>>()),
        ("τ(e_i)", gens.iter().map(|g| m.tau_of(ma, g)).collect::<Vec<_>>()),
    ] {
        let sub = hom.submodule(&conv, &vecs);
        let mut c = Check::new("7.2", name).witness(format!("generated submodule has dimension {} of {}", sub.dim(), hom.dim()));
        for h in &hyps {
            c = c.hypothesis(h.clone());
        }
        rep.push(c.conclude(if sub.is_full() { "generates" } else { "does not generate" }, Status::from_bool(sub.is_full())));
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 7.3
// ---------------------------------------------------------------------------

/// Sandwiches on random generator systems of `m`, with `I` the relation
/// ideal, a maximal ideal containing it, or `A`.
pub fn random_stable_sandwiches<F: Field>(ma: &HModuleAlgebra<F>, m: &HAModule<F::Elem>, count: usize, seed: u64) -> Result<Vec<StableSandwich<F::Elem>>> {
    let f = ma.field();
    let alg = ma.algebra();
    let w = alg.wedderburn()?;
    let base = top_generators(alg, &m.module)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut gens = base.clone();
        for _ in 0..rng.random_range(0..3usize) {
            gens.push(random_vector(f, m.dim(), &mut rng));
        }
        let n = gens.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && rng.random_bool(0.5) {
                    let a = random_vector(f, alg.dim(), &mut rng);
                    let add = m.module.act(f, &a, &gens[j]);
                    gens[i] = vecops::add(f, &gens[i], &add);
                }
            }
        }
        let i_gens = match m.relation_ideal(ma, &gens) {
            Ok(i) => i,
            Err(_) => continue,
        };
        let containing: Vec<&Subspace<F::Elem>> = w.max_ideals.iter().filter(|q| q.contains_space(f, &i_gens)).collect();
        let ideal = match rng.random_range(0..3u8) {
            0 => i_gens.clone(),
            1 if !containing.is_empty() => containing[rng.random_range(0..containing.len())].clone(),
            _ => Subspace::full(f, alg.dim()),
        };
        out.push(m.sandwich(ma, &gens, &ideal)?);
    }
    Ok(out)
}

fn verify_sandwiches<F: Field>(ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>, seed: u64) -> Result<TheoremReport> {
    let valid = require_valid(ma)?;
    let mut rep = TheoremReport::new("7.3", "for I ⊇ I_gens with A/I weakly finite, K = {a : Ha ⊆ I} is H-stable with I_gens ⊆ K ⊆ I");
    for (i, (name, m)) in battery(ma, inputs, seed)?.iter().enumerate() {
        for (j, s) in random_stable_sandwiches(ma, m, inputs.sandwiches, seed.wrapping_add(i as u64))?.iter().enumerate() {
            rep.push(
                Check::new("7.3", format!("{name} #{j}"))
                    .hypothesis(valid.clone())
                    .hypothesis("A/I is finite-dimensional, hence weakly finite")
                    .witness(format!("dim I_gens = {}, dim K = {}, dim I = {}", s.i_gens.dim(), s.k.dim(), s.ideal.dim()))
                    .conclude(
                        if s.holds { "I_gens ⊆ K ⊆ I and K is an H-stable ideal" } else { "sandwich fails" },
                        Status::from_bool(s.holds),
                    ),
            );
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 7.6 / 7.7
// ---------------------------------------------------------------------------

fn verify_projectivity<F: Field>(ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>, seed: u64) -> Result<TheoremReport> {
    let hyps = alloc::vec![require_valid(ma)?, require_h_simple(ma)?, finiteness_line(ma, seed)?, "A is finite-dimensional, hence semilocal".into()];
    let alg = ma.algebra();
    let mut rep = TheoremReport::new("7.6", "objects over a semilocal H-simple module algebra are projective, and free iff some M/MQ is free over A/Q");
    for (i, (name, m)) in battery(ma, inputs, seed)?.iter().enumerate() {
        let v = m.validate(ma);
        let subject = format!("{name} (dimension {})", m.dim());
        let mut c = if let Some(x) = v.violations.first() {
            Check::new("7.6", subject).conclude(format!("battery object fails validation: {}: {}", x.axiom, x.detail), Status::Fail)
        } else {
            projectivity_check(alg, "7.6", subject, &m.module, inputs.trials, seed.wrapping_add(i as u64))?.hypothesis("object validated: τ(ma) = τ(m)τ(a)")
        };
        c.hypotheses.splice(0..0, hyps.iter().cloned());
        rep.push(c);
    }
    Ok(rep)
}

/// Left `A#H`-modules: the smash product, its simple modules, `A` with
/// `(a#h)b = a(h·b)`, and a random submodule and quotient.
pub fn smash_modules<F: Field>(ma: &HModuleAlgebra<F>, seed: u64) -> Result<(Algebra<F>, Vec<(String, Module<F::Elem>)>, super::SmashProduct<F>)> {
    let f = ma.field();
    let sp = ma.smash_product(SmashVariant::AH)?;
    let s = &sp.algebra;
    let a = ma.algebra();
    let w = s.wedderburn()?;
    let reg = Module::regular(s, Side::Left);
    let mut out = alloc::vec![("A#H".into(), reg.clone())];
    for i in 0..w.block_count() {
        out.push((format!("S{i}"), w.simple(Side::Left, i).clone()));
    }
    let dh = ma.hopf().dim();
    let on_a = (0..s.dim()).map(|t| a.left_regular(t / dh).mul(f, &ma.action()[t % dh])).collect();
    out.push(("A".into(), Module::new(s, Side::Left, a.dim(), on_a)?));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let v = random_vector(f, reg.dim(), &mut rng);
        let sub = reg.submodule(s, &[v]);
        if !sub.is_zero() && !sub.is_full() {
            out.push(("sub(A#H)".into(), reg.restrict(f, &sub)));
            out.push(("A#H/sub".into(), reg.quotient(f, &sub)));
            break;
        }
    }
    Ok((s.clone(), out, sp))
}

fn verify_smash_modules<F: Field>(ma: &HModuleAlgebra<F>, inputs: &ModalgInputs<F>, seed: u64) -> Result<TheoremReport> {
    let f = ma.field();
    let mut hyps = alloc::vec![require_valid(ma)?, require_h_simple(ma)?, finiteness_line(ma, seed)?];
    let h = ma.hopf();
    if h.antipode_inverse().is_none() {
        return Err(Error::hypothesis("anti-Hopf", format!("the antipode of {} is not bijective, so H^cop has no antipode", h.name())));
    }
    hyps.push(format!("{} has bijective antipode, so H^cop is a Hopf algebra", h.name()));
    let alg = ma.algebra();
    let (s, mods, sp) = smash_modules(ma, seed)?;
    let mut rep = TheoremReport::new("7.7", "left A#H-modules are projective A-modules");
    for (i, (name, m)) in mods.iter().enumerate() {
        let v = m.validate(&s);
        let subject = format!("{name} (dimension {})", m.dim());
        let mut c = if let Some(x) = v.violations.first() {
            Check::new("7.7", subject).conclude(format!("module fails validation: {}", x.detail), Status::Fail)
        } else {
            let on_a = (0..alg.dim()).map(|j| m.action_of(f, &sp.a_embed.col_vec(j))).collect();
            let restricted = Module::new(alg, Side::Left, m.dim(), on_a)?;
            projectivity_check(alg, "7.7", subject, &restricted, inputs.trials, seed.wrapping_add(i as u64))?.hypothesis("A#H-module validated; restricted along a ↦ a#1")
        };
        c.hypotheses.splice(0..0, hyps.iter().cloned());
        rep.push(c);
    }
    Ok(rep)
}
