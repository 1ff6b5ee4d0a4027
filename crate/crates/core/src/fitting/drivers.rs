//! Checks of the base change property (F1), the projectivity criterion
//! (F2), costability of Fitting ideals of Hopf modules (P1.1) and
//! projectivity over `H`-simple commutative comodule algebras (C1.6).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{base_change, fitting_ledger, fitting_ledger_with, image_in_quotient, FittingLedger};
use crate::algebra::oracles::{is_free, is_projective, top_generators, DEFAULT_TRIALS};
use crate::algebra::{Algebra, Module, Side};
use crate::comodalg::drivers::default_battery;
use crate::comodalg::{ComoduleAlgebra, HopfModule, Simplicity};
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Subspace};
use crate::report::{Check, Status, TheoremReport};

pub const FITTING_PROPERTIES: &[&str] = &["F1", "F2", "P1.1", "C1.6"];

#[derive(Clone, Debug)]
pub struct FittingInputs<F: Field> {
    pub algebra: Algebra<F>,
    pub modules: Vec<(String, Module<F::Elem>)>,
    /// Ideals `I` defining the base changes `A → A/I`.
    pub base_changes: Vec<(String, Subspace<F::Elem>)>,
    pub comodule_algebra: Option<ComoduleAlgebra<F>>,
    pub hopf_modules: Vec<(String, HopfModule<F::Elem>)>,
    pub trials: u64,
    pub seed: u64,
}

impl<F: Field> FittingInputs<F> {
    /// Module battery of [`fitting_battery`] and base changes along the
    /// radical and each maximal ideal.
    pub fn for_algebra(alg: &Algebra<F>, seed: u64) -> Result<Self> {
        let w = alg.wedderburn()?;
        let mut base_changes = Vec::new();
        if !w.radical.is_zero() {
            base_changes.push(("A/J".to_string(), w.radical.clone()));
        }
        for (i, q) in w.max_ideals.iter().enumerate() {
            base_changes.push((format!("A/Q{i}"), q.clone()));
        }
        Ok(FittingInputs {
            algebra: alg.clone(),
            modules: fitting_battery(alg, 10, seed)?,
            base_changes,
            comodule_algebra: None,
            hopf_modules: Vec::new(),
            trials: DEFAULT_TRIALS,
            seed,
        })
    }

    /// As [`FittingInputs::for_algebra`] on the underlying algebra, plus the
    /// right Hopf module battery and the quotients of `A` by costable
    /// closures of radical elements.
    pub fn for_comodule_algebra(ca: &ComoduleAlgebra<F>, seed: u64) -> Result<Self> {
        let mut out = Self::for_algebra(ca.algebra(), seed)?;
        let mut hm = default_battery(ca, Side::Right, seed)?;
        let a = HopfModule::regular(ca, Side::Right);
        let w = ca.algebra().wedderburn()?;
        for v in w.radical.basis().row_iter() {
            let c = ca.costable_closure(&[v.to_vec()]);
            if !c.space.is_full() {
                hm.push((format!("A/({})", ca.algebra().describe(v)), a.quotient(ca, &c.space)?));
            }
        }
        out.hopf_modules = hm;
        out.comodule_algebra = Some(ca.clone());
        Ok(out)
    }
}

fn regular_quotient<F: Field>(alg: &Algebra<F>, ideal: &Subspace<F::Elem>) -> Module<F::Elem> {
    Module::regular(alg, Side::Right).quotient(alg.field(), ideal)
}

/// Right modules: `A`, `A²`, the simples, `A ⊕ S₀`, sums of two simples,
/// maximal ideals and the radical as modules, `A/J`, then cyclic
/// submodules of `A²` on seeded random elements up to `count`.
pub fn fitting_battery<F: Field>(alg: &Algebra<F>, count: usize, seed: u64) -> Result<Vec<(String, Module<F::Elem>)>> {
    let f = alg.field();
    let w = alg.wedderburn()?;
    let a = Module::regular(alg, Side::Right);
    let mut out = alloc::vec![("A".to_string(), a.clone()), ("A²".to_string(), a.power(alg, 2))];
    for i in 0..w.block_count() {
        out.push((format!("S{i}"), w.simple_right[i].clone()));
    }
    out.push(("A⊕S0".into(), a.direct_sum(f, &w.simple_right[0])));
    if w.block_count() > 1 {
        out.push(("S0⊕S1".into(), w.simple_right[0].direct_sum(f, &w.simple_right[1])));
    }
    for (i, q) in w.max_ideals.iter().enumerate() {
        out.push((format!("Q{i}"), a.restrict(f, q)));
    }
    if !w.radical.is_zero() {
        out.push(("J".into(), a.restrict(f, &w.radical)));
        out.push(("A/J".into(), regular_quotient(alg, &w.radical)));
    }
    let a2 = a.power(alg, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 {
        attempts += 1;
        let v: Vec<F::Elem> = (0..a2.dim()).map(|_| f.elem_at(rng.random_range(0..3u64))).collect();
        let sub = a2.submodule(alg, &[v]);
        if !sub.is_zero() {
            out.push((format!("cyclic{}", out.len()), a2.restrict(f, &sub)));
        }
    }
    out.truncate(count);
    Ok(out)
}

fn require_commutative<F: Field>(alg: &Algebra<F>, what: &str) -> Result<()> {
    if alg.is_commutative() {
        Ok(())
    } else {
        Err(Error::hypothesis(format!("{what} commutative"), format!("{what} is not commutative")))
    }
}

fn describe_ideal<F: Field>(alg: &Algebra<F>, s: &Subspace<F::Elem>) -> String {
    if s.is_zero() {
        return "0".into();
    }
    if s.is_full() {
        return "A".into();
    }
    let parts: Vec<String> = s.basis().row_iter().map(|v| alg.describe(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn ledger_line<F: Field>(alg: &Algebra<F>, l: &FittingLedger<F::Elem>) -> String {
    let parts: Vec<String> = l.ideals().iter().enumerate().map(|(k, s)| format!("Fitt_{} = {}", k as isize - 1, describe_ideal(alg, s))).collect();
    parts.join("; ")
}

/// Ledger from a presentation with one redundant generator added.
fn redundant_ledger<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, rng: &mut ChaCha8Rng) -> Result<FittingLedger<F::Elem>> {
    let f = alg.field();
    let mut gens = top_generators(alg, m)?;
    let mut extra = vecops::zero(f, m.dim());
    for g in &gens {
        let a: Vec<F::Elem> = (0..alg.dim()).map(|_| f.elem_at(rng.random_range(0..3u64))).collect();
        extra = vecops::add(f, &extra, &m.act(f, &a, g));
    }
    gens.push(extra);
    fitting_ledger_with(alg, m, &gens)
}

pub fn verify_fitting_property<F: Field>(id: &str, inputs: &FittingInputs<F>) -> Result<TheoremReport> {
    match id {
        "F1" => verify_base_change(inputs),
        "F2" => verify_projectivity_criterion(inputs),
        "P1.1" => verify_costable_fitting(inputs),
        "C1.6" => verify_simple_projectivity(inputs),
        _ => Err(Error::Input(format!("unknown property id {id:?}; known: {}", FITTING_PROPERTIES.join(", ")))),
    }
}

fn verify_base_change<F: Field>(inputs: &FittingInputs<F>) -> Result<TheoremReport> {
    let alg = &inputs.algebra;
    let f = alg.field();
    require_commutative(alg, "A")?;
    let mut rep = TheoremReport::new("F1", "Fitt_i(B ⊗ M) = Fitt_i(M)·B for a commutative A-algebra B");
    for (bname, ideal) in &inputs.base_changes {
        if ideal.is_full() {
            return Err(Error::hypothesis("base change", format!("{bname}: quotient by the unit ideal")));
        }
        for (mname, m) in &inputs.modules {
            let l = fitting_ledger(alg, m)?;
            let (b, bm) = base_change(alg, ideal, m)?;
            let lb = fitting_ledger(&b, &bm)?;
            let top = l.rank().max(lb.rank()) as isize;
            let mut ok = true;
            let mut c = Check::new("F1", format!("B = {bname}, M = {mname}"));
            for i in -1..=top {
                let expected = image_in_quotient(f, ideal, l.fitt(i));
                let got = lb.fitt(i);
                ok &= &expected == got;
                c = c.witness(format!("i = {i}: dim Fitt_i(B⊗M) = {}, dim Fitt_i(M)B = {}", got.dim(), expected.dim()));
            }
            rep.push(c.conclude("Fitting ideals commute with the base change", Status::from_bool(ok)));
        }
    }
    Ok(rep)
}

fn verify_projectivity_criterion<F: Field>(inputs: &FittingInputs<F>) -> Result<TheoremReport> {
    let alg = &inputs.algebra;
    require_commutative(alg, "A")?;
    let mut rep = TheoremReport::new("F2", "M is projective of constant rank r iff Fitt_r(M) = A and Fitt_{r-1}(M) = 0");
    let mut rng = ChaCha8Rng::seed_from_u64(inputs.seed);
    for (k, (name, m)) in inputs.modules.iter().enumerate() {
        let l = fitting_ledger(alg, m)?;
        let l2 = redundant_ledger(alg, m, &mut rng)?;
        let r = l.constant_rank();
        let mut c = Check::new("F2", format!("{name} (dimension {})", m.dim()))
            .hypothesis("A is commutative and semilocal, so projective of constant rank means free")
            .witness(ledger_line(alg, &l))
            .witness(format!("presentations with {} and {} generators give the same ideals: {}", l.rank(), l2.rank(), l.same_ideals(&l2)));
        let free = match is_free(alg, m, inputs.trials, inputs.seed.wrapping_add(k as u64)) {
            Ok(x) => x,
            Err(Error::Inconclusive(msg)) => {
                rep.push(c.conclude(format!("freeness undecided: {msg}"), Status::Inconclusive));
                continue;
            }
            Err(e) => return Err(e),
        };
        let proj = is_projective(alg, m)?.is_yes();
        c = c.witness(format!("Fitting rank = {r:?}, free rank = {:?}, projective = {proj}", free.rank()));
        let ok = l.same_ideals(&l2) && r == free.rank() && (r.is_none() || proj);
        rep.push(c.conclude("the Fitting criterion agrees with the freeness and projectivity oracles", Status::from_bool(ok)));
    }
    Ok(rep)
}

fn comodule_inputs<F: Field>(inputs: &FittingInputs<F>) -> Result<(&ComoduleAlgebra<F>, Vec<String>)> {
    let ca = inputs.comodule_algebra.as_ref().ok_or_else(|| Error::Input("a comodule algebra is required".into()))?;
    require_commutative(ca.hopf().algebra(), "H")?;
    require_commutative(ca.algebra(), "A")?;
    let v = ca.validate();
    if !v.is_valid() {
        return Err(Error::Input(format!("{} fails validation: {}", ca.name(), v.violations[0].detail)));
    }
    Ok((ca, alloc::vec!["H is commutative".to_string(), "A is a commutative H-comodule algebra".to_string()]))
}

fn verify_costable_fitting<F: Field>(inputs: &FittingInputs<F>) -> Result<TheoremReport> {
    let (ca, hyps) = comodule_inputs(inputs)?;
    let alg = ca.algebra();
    let mut rep = TheoremReport::new("P1.1", "every Fitting ideal of a Hopf module M is costable: ρ(Fitt_i) ⊆ Fitt_i ⊗ H");
    for (name, m) in &inputs.hopf_modules {
        let mut c = Check::new("P1.1", format!("{name} (dimension {})", m.dim()));
        c.hypotheses = hyps.clone();
        if !m.validate(ca).is_valid() {
            return Err(Error::Input(format!("{name} is not a Hopf module")));
        }
        let l = fitting_ledger(alg, m.module())?;
        c = c.witness(ledger_line(alg, &l));
        let bad: Vec<usize> = (0..l.ideals().len()).filter(|&k| !ca.is_costable(&l.ideals()[k])).collect();
        rep.push(c.conclude(format!("non-costable indices: {bad:?}"), Status::from_bool(bad.is_empty())));
    }
    Ok(rep)
}

fn verify_simple_projectivity<F: Field>(inputs: &FittingInputs<F>) -> Result<TheoremReport> {
    let (ca, mut hyps) = comodule_inputs(inputs)?;
    let alg = ca.algebra();
    match ca.is_h_simple()? {
        Simplicity::Simple { .. } => hyps.push("IA = A for every nonzero costable ideal I: A is H-simple".into()),
        Simplicity::NotSimple { witness } => {
            return Err(Error::hypothesis("H-simple", format!("costable ideal {} is proper", describe_ideal(alg, &witness))))
        }
        Simplicity::Inconclusive { reason } => return Err(Error::Inconclusive(reason)),
    }
    let mut rep = TheoremReport::new("C1.6", "over an H-simple commutative comodule algebra every Hopf module is projective of constant rank");
    for (name, m) in &inputs.hopf_modules {
        let mut c = Check::new("C1.6", format!("{name} (dimension {})", m.dim()));
        c.hypotheses = hyps.clone();
        let l = fitting_ledger(alg, m.module())?;
        let trivial = l.ideals().iter().all(|s| s.is_zero() || s.is_full());
        let proj = is_projective(alg, m.module())?.is_yes();
        c = c.witness(ledger_line(alg, &l)).witness(format!("projective = {proj}"));
        let ok = trivial && l.constant_rank().is_some() && proj;
        rep.push(c.conclude(format!("Fitting ideals are 0 or A, constant rank {:?}", l.constant_rank()), Status::from_bool(ok)));
    }
    Ok(rep)
}
