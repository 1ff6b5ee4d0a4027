//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Each criterion recomputes its claims with the library and, where an
//! independent oracle is cheap, checks them against it (exhaustive search
//! over small finite fields, hand expansions, validators).

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fdhopf::cli::run;
use fdhopf::report::Report;
use fdhopf_core::algebra::module::is_homomorphism;
use fdhopf_core::algebra::oracles::{free_module, is_free, is_frobenius, is_projective, verify_free_basis, Freeness, Frobenius, Projectivity};
use fdhopf_core::algebra::probe::weak_finiteness_probe;
use fdhopf_core::algebra::{Algebra, Module, Side};
use fdhopf_core::coalgebra::Comodule;
use fdhopf_core::coideal::{enumerate_coideal_subalgebras, normal_basis, theta, xi, CoidealSubalgebra, DHopfModule};
use fdhopf_core::comodalg::drivers::{default_battery, random_sandwiches};
use fdhopf_core::comodalg::{builtin_comodule_algebra, verify_comodalg_theorem, ComodalgInputs};
use fdhopf_core::exactla::{vecops, Field, GaloisField, Matrix, Rationals, Subspace};
use fdhopf_core::fitting::drivers::fitting_battery;
use fdhopf_core::fitting::{fitting_ledger, fitting_ledger_with, verify_fitting_property, FittingInputs};
use fdhopf_core::hopf::{builtin, ni89b, single_constant_mutations, HopfAlgebra, CATALOG};
use fdhopf_core::modalg::drivers::{default_objects, random_stable_sandwiches};
use fdhopf_core::modalg::{builtin_module_algebra, verify_modalg_theorem, ModalgInputs, SmashVariant};
use fdhopf_core::report::{Status, TheoremReport};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn gf(p: u64) -> GaloisField {
    GaloisField::prime(p).unwrap()
}

fn passed(r: &TheoremReport) -> Result<(), String> {
    let bad: Vec<String> = r.failures().map(|c| format!("{} on {}: {} [{}]", c.id, c.subject, c.conclusion, c.status.name())).collect();
    ensure!(r.status() == Status::Pass, "{}: {}", r.theorem, bad.join("; "));
    Ok(())
}

fn cli_json(args: &[&str]) -> Result<(Report, i32), String> {
    let out = lift(run(["--format", "json"].iter().chain(args).copied()))?;
    Ok((lift(Report::from_json(&out.text))?, out.exit_code))
}

// ---------------------------------------------------------------------------
// 1. Axiom suite
// ---------------------------------------------------------------------------

fn mutation_rate<F: Field>(h: &HopfAlgebra<F>) -> Result<(usize, usize), String> {
    let muts = single_constant_mutations(h);
    let mut caught = 0;
    for (name, m) in &muts {
        let r = m.validate();
        if r.is_valid() {
            continue;
        }
        caught += 1;
        ensure!(r.violations.iter().any(|v| !v.indices.is_empty()), "{} mutation {name}: no localized witness", h.name());
    }
    Ok((caught, muts.len()))
}

fn criterion_1() -> Outcome {
    let q = Rationals;
    let mut objects: Vec<String> = Vec::new();
    let (mut caught, mut total) = (0, 0);
    let mut tally = |name: String, c: usize, t: usize| {
        objects.push(format!("{name} {c}/{t}"));
        caught += c;
        total += t;
    };
    for name in CATALOG.iter().filter(|n| !n.starts_with("taft")) {
        let h = lift(builtin(name, &q))?;
        ensure!(h.validate().is_valid(), "{name} over Q fails its validator");
        let (c, t) = mutation_rate(&h)?;
        tally(format!("{name}/Q"), c, t);
    }
    let h = lift(builtin("sweedler_h4", &gf(3)))?;
    ensure!(h.validate().is_valid(), "sweedler_h4 over GF(3) fails its validator");
    let (c, t) = mutation_rate(&h)?;
    tally("sweedler_h4/GF(3)".into(), c, t);
    let h = lift(builtin("taft(3)", &gf(7)))?;
    ensure!(h.validate().is_valid(), "taft(3) over GF(7) fails its validator");
    let (c, t) = mutation_rate(&h)?;
    tally("taft(3)/GF(7)".into(), c, t);
    ensure!(caught * 100 >= total * 95, "only {caught}/{total} mutations detected");
    Ok(format!("{} objects valid; {caught}/{total} mutations detected ({:.1}%)", objects.len(), 100.0 * caught as f64 / total as f64))
}

// ---------------------------------------------------------------------------
// 2. Weak finiteness certificate
// ---------------------------------------------------------------------------

const LAMBDA: [i64; 3] = [1, 1, -1];

/// `s(c_lt) c_ij` with 0-based indices, or the constant `1` as `None`.
type Term = Option<(usize, usize, usize, usize)>;

fn term_name(t: &Term) -> String {
    match t {
        None => "1".into(),
        Some((l, t, i, j)) => format!("s(c{}{})c{}{}", l + 1, t + 1, i + 1, j + 1),
    }
}

/// Entries of `XY - 1` and `XZ`, expanded by hand.
fn expand_entries() -> Vec<(String, usize, usize, BTreeMap<Term, i64>)> {
    // X entries are sums of s(c_lt), Y and Z entries sums of c_ij.
    let x: [[Vec<(usize, usize)>; 2]; 2] = [[vec![(0, 0), (0, 2)], vec![(0, 1)]], [vec![(1, 0), (1, 2)], vec![(1, 1)]]];
    let y: [[Vec<(usize, usize)>; 2]; 2] = [[vec![(0, 0), (2, 0)], vec![(0, 1), (2, 1)]], [vec![(1, 0)], vec![(1, 1)]]];
    let z: [[Vec<(usize, usize)>; 2]; 2] = [[vec![], vec![]], [vec![(1, 2)], vec![]]];
    let mut out = Vec::new();
    for (name, right, minus_one) in [("XY - 1", &y, true), ("XZ", &z, false)] {
        for r in 0..2 {
            for c in 0..2 {
                let mut e: BTreeMap<Term, i64> = BTreeMap::new();
                for k in 0..2 {
                    for &(l, t) in &x[r][k] {
                        for &(i, j) in &right[k][c] {
                            *e.entry(Some((l, t, i, j))).or_default() += 1;
                        }
                    }
                }
                if minus_one && r == c {
                    *e.entry(None).or_default() -= 1;
                }
                out.push((name.to_string(), r + 1, c + 1, e));
            }
        }
    }
    out
}

/// Exact membership in the span of the relations: vanishing products are
/// unit vectors, and the identities `Σ_i s(c_li)c_ij - δ_lj` have disjoint
/// supports on the remaining symbols.
fn reduces_to_zero(e: &BTreeMap<Term, i64>) -> (bool, Vec<String>) {
    let mut killed = Vec::new();
    let mut rest: BTreeMap<Term, i64> = BTreeMap::new();
    for (t, &c) in e {
        match t {
            Some((l, tt, i, j)) if LAMBDA[*i] * LAMBDA[*j] != LAMBDA[*l] * LAMBDA[*tt] => killed.push(term_name(t)),
            _ if c != 0 => {
                rest.insert(*t, c);
            }
            _ => {}
        }
    }
    let mut constant = rest.remove(&None).unwrap_or(0);
    for l in 0..3 {
        for j in 0..3 {
            let coefs: Vec<i64> = (0..3).map(|i| rest.remove(&Some((l, i, i, j))).unwrap_or(0)).collect();
            // Terms of an identity that vanish on their own carry no constraint.
            let live: Vec<i64> = (0..3).filter(|&i| LAMBDA[i] * LAMBDA[j] == LAMBDA[l] * LAMBDA[i]).map(|i| coefs[i]).collect();
            if live.is_empty() {
                continue;
            }
            if live.iter().any(|&c| c != live[0]) {
                return (false, killed);
            }
            if l == j {
                constant += live[0];
            }
        }
    }
    (rest.is_empty() && constant == 0, killed)
}

fn criterion_2() -> Outcome {
    let expected = expand_entries();
    let mut killed_total = 0;
    for (label, field) in [("Q", None), ("GF(3)", Some("GF(3)"))] {
        let mut args = vec![];
        if let Some(f) = field {
            args.extend(["--field", f]);
        }
        args.push("ni89b");
        let (r, code) = cli_json(&args)?;
        ensure!(code == 0 && r.status == "pass", "ni89b over {label}: exit {code}, status {}", r.status);
        let trace = r.sections[0].data["trace"].as_array().cloned().unwrap_or_default();
        ensure!(trace.len() == expected.len(), "over {label}: {} trace entries", trace.len());
        for (entry, (name, row, col, e)) in trace.iter().zip(&expected) {
            let (ok, killed) = reduces_to_zero(e);
            ensure!(ok, "hand reduction of {name}[{row},{col}] does not vanish");
            ensure!(entry["matrix"] == name.as_str() && entry["row"] == *row && entry["col"] == *col, "trace order differs at {name}[{row},{col}]");
            ensure!(entry["reduces_to_zero"] == true, "{name}[{row},{col}] not reduced over {label}");
            let mut listed: Vec<String> =
                entry["vanishing"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().split(" = 0").next().unwrap().to_string()).collect();
            let mut want = killed.clone();
            listed.sort();
            want.sort();
            ensure!(listed == want, "{name}[{row},{col}] over {label}: trace kills {listed:?}, hand expansion {want:?}");
            killed_total += want.len();
        }
    }
    // The relations used are exactly the two quoted families.
    let rels = ni89b::relations();
    let vanishing = (0..81).filter(|&k| {
        let (l, t, i, j) = (k / 27, (k / 9) % 3, (k / 3) % 3, k % 3);
        LAMBDA[i] * LAMBDA[j] != LAMBDA[l] * LAMBDA[t]
    });
    let n_vanishing = vanishing.count();
    ensure!(rels.len() == n_vanishing + 9, "{} relations, expected {} vanishing products and 9 identities", rels.len(), n_vanishing);
    let cert = lift(ni89b::certificate(&Rationals))?;
    ensure!(cert.relation_count == rels.len() && cert.holds(), "certificate over Q does not hold");
    let (r, code) = cli_json(&["--field", "GF(2)", "ni89b"])?;
    ensure!(code == 3 && r.status == "hypothesis-failure", "characteristic 2 not refused (exit {code})");
    Ok(format!("8 entries reduce over Q and GF(3); {} cross terms killed, all matching a hand expansion; GF(2) refused", killed_total / 2))
}

// ---------------------------------------------------------------------------
// 3. Coideal subalgebra span{1, gx} of H4
// ---------------------------------------------------------------------------

fn span_1_gx<F: Field>(f: &F) -> Result<CoidealSubalgebra<F>, String> {
    let h = lift(builtin("sweedler_h4", f))?;
    let span = Subspace::span(f, 4, &[vecops::unit(f, 4, 0), vecops::unit(f, 4, 3)]);
    lift(CoidealSubalgebra::detect(&h, &span))
}

/// Over GF(3): the number of pairs `(u, v)` of elements of H with
/// `uA + vA = H` (or `Au + Av = H`), by exhaustive enumeration.
fn exhaustive_basis_pairs(cs: &CoidealSubalgebra<GaloisField>, side: Side) -> usize {
    let f = cs.field();
    let h = cs.hopf();
    let incl: Vec<Vec<u64>> = (0..2).map(|j| cs.inclusion().col_vec(j)).collect();
    let elems: Vec<Vec<u64>> = (0..81u64).map(|n| (0..4).map(|i| (n / 3u64.pow(i)) % 3).collect()).collect();
    let images: Vec<[Vec<u64>; 2]> = elems
        .iter()
        .map(|w| {
            let img = |a: &Vec<u64>| match side {
                Side::Right => h.mul(w, a),
                Side::Left => h.mul(a, w),
            };
            [img(&incl[0]), img(&incl[1])]
        })
        .collect();
    let mut found = 0;
    for a in &images {
        for b in &images {
            let vs = vec![a[0].clone(), a[1].clone(), b[0].clone(), b[1].clone()];
            if Subspace::span(f, 4, &vs).is_full() {
                found += 1;
            }
        }
    }
    found
}

fn criterion_3() -> Outcome {
    let f = Rationals;
    let cs = span_1_gx(&f)?;
    let mut notes = Vec::new();
    match lift(is_frobenius(cs.algebra(), 64, 0))? {
        Frobenius::Yes { .. } => {}
        Frobenius::No { reason } => return Err(format!("A is not Frobenius: {reason}")),
    }
    for side in [Side::Right, Side::Left] {
        let m = cs.hopf_as_module(side);
        match lift(is_free(cs.algebra(), m.module(), 64, 1))? {
            Freeness::Free { rank, basis } => {
                ensure!(rank == 2 && verify_free_basis(cs.algebra(), m.module(), &basis), "H over A ({}) basis fails", side.name());
                let shown: Vec<String> = basis.iter().map(|b| cs.hopf().algebra().describe(b)).collect();
                notes.push(format!("{} basis {{{}}}", side.name(), shown.join(", ")));
            }
            other => return Err(format!("H is not free over A on the {} side: {other:?}", side.name())),
        }
    }
    let qp = lift(cs.quotient_pair())?;
    ensure!(qp.d.dim() == 2 && qp.d_prime.dim() == 2, "dim D = {}, dim D' = {}", qp.d.dim(), qp.d_prime.dim());
    for side in [Side::Right, Side::Left] {
        let (_, chk) = lift(xi(&cs, &qp, &cs.hopf_as_module(side)))?;
        ensure!(chk.is_iso(), "Ξ_H ({}) is not an isomorphism: {chk:?}", side.name());
    }
    let (_, chk) = lift(theta(&cs, &qp, Side::Left, &Comodule::regular(&qp.d_prime, Side::Right)))?;
    ensure!(chk.is_iso(), "Θ_D' is not an isomorphism: {chk:?}");
    for side in [Side::Right, Side::Left] {
        let m = DHopfModule::hopf(&cs, &qp, side);
        ensure!(m.validate(&cs, &qp).is_valid(), "H with its quotient coaction is invalid");
        ensure!(lift(normal_basis(&cs, &qp, &m, 20, 3))?.is_witness(), "no normal basis on the {} side within 20 trials", side.name());
    }
    // Exhaustive cross-check in the GF(3) model.
    let cs3 = span_1_gx(&gf(3))?;
    let mut counts = Vec::new();
    for side in [Side::Right, Side::Left] {
        let n = exhaustive_basis_pairs(&cs3, side);
        let oracle = lift(is_free(cs3.algebra(), cs3.hopf_as_module(side).module(), 32, 2))?.rank();
        ensure!(n > 0 && oracle == Some(2), "GF(3): {n} basis pairs on the {} side, oracle rank {oracle:?}", side.name());
        counts.push(n);
    }
    Ok(format!(
        "A Frobenius; {}; dim D = dim D' = 2; Ξ_H, Θ_D' isomorphisms; normal bases found; GF(3) exhaustive: {}/{} of 6561 pairs are bases",
        notes.join("; "),
        counts[0],
        counts[1]
    ))
}

// ---------------------------------------------------------------------------
// 4. Divisibility and freeness over coideal subalgebras
// ---------------------------------------------------------------------------

fn check_coideals<F: Field>(h: &HopfAlgebra<F>, dims: &mut Vec<String>) -> Result<usize, String> {
    let all = lift(enumerate_coideal_subalgebras(h, 6))?;
    let mut seen = Vec::new();
    for cs in &all {
        ensure!(h.dim() % cs.dim() == 0, "{}: dim A = {} does not divide {}", h.name(), cs.dim(), h.dim());
        for side in [Side::Right, Side::Left] {
            let m = cs.hopf_as_module(side);
            match lift(is_free(cs.algebra(), m.module(), 64, 4))? {
                Freeness::Free { rank, basis } => {
                    ensure!(rank * cs.dim() == h.dim(), "{}: rank {rank} over a subalgebra of dimension {}", h.name(), cs.dim());
                    ensure!(verify_free_basis(cs.algebra(), m.module(), &basis), "{}: basis fails", h.name());
                }
                other => return Err(format!("{}: H not free over a coideal subalgebra of dimension {}: {other:?}", h.name(), cs.dim())),
            }
        }
        seen.push(cs.dim());
    }
    seen.sort();
    seen.dedup();
    dims.push(format!("{} {:?}", h.name(), seen));
    Ok(all.len())
}

fn criterion_4() -> Outcome {
    let mut dims = Vec::new();
    let mut total = 0;
    for name in CATALOG.iter().filter(|n| !n.starts_with("taft")) {
        total += check_coideals(&lift(builtin(name, &Rationals))?, &mut dims)?;
    }
    let t = lift(builtin("taft(3)", &gf(7)))?;
    let before = dims.len();
    total += check_coideals(&t, &mut dims)?;
    let hopf_subs: Vec<usize> = lift(enumerate_coideal_subalgebras(&t, 6))?.iter().filter(|c| c.is_hopf_subalgebra()).map(|c| c.dim()).collect();
    for d in [1, 3, 9] {
        ensure!(hopf_subs.contains(&d), "Taft(3) Hopf subalgebra of dimension {d} missing: {}", dims[before]);
    }
    Ok(format!("{total} coideal subalgebras, all with dim A | dim H and H free of rank dim H/dim A on both sides; dims: {}", dims.join(", ")))
}

// ---------------------------------------------------------------------------
// 5. Projectivity of Hopf modules over H-simple comodule algebras
// ---------------------------------------------------------------------------

fn criterion_5() -> Outcome {
    let c2 = lift(builtin_comodule_algebra("group_algebra(C2)-regular", &gf(2)))?;
    let h4 = lift(builtin_comodule_algebra("h4-regular", &Rationals))?;
    let inputs = ComodalgInputs::default();
    let r = lift(verify_comodalg_theorem("3.5", &c2, &inputs, 1))?;
    passed(&r)?;
    let n_c2 = r.checks.len();
    ensure!(n_c2 >= 6, "only {n_c2} modules in the GF(2)[C2] battery");
    passed(&lift(verify_comodalg_theorem("3.6", &c2, &inputs, 1))?)?;
    let r = lift(verify_comodalg_theorem("3.5", &h4, &ComodalgInputs::default(), 2))?;
    passed(&r)?;
    let n_h4 = r.checks.len();
    ensure!(n_h4 >= 6, "only {n_h4} modules in the H4 battery");
    passed(&lift(verify_comodalg_theorem("3.6", &h4, &ComodalgInputs::default(), 2))?)?;

    // Independent checks: explicit splittings over H4, explicit free bases over GF(2)[C2].
    let q = Rationals;
    for (name, m) in lift(default_battery(&h4, Side::Right, 2))? {
        let alg = h4.algebra();
        match lift(is_projective(alg, m.module()))? {
            Projectivity::Yes { generators, pi, sigma } => {
                let ok = pi.mul(&q, &sigma) == Matrix::identity(&q, m.dim()) && is_homomorphism(&q, m.module(), &free_module(alg, Side::Right, generators.len()), &sigma);
                ensure!(ok, "H4 battery {name}: splitting does not check");
            }
            Projectivity::No { reason, .. } => return Err(format!("H4 battery {name}: not projective: {reason}")),
        }
    }
    let battery = lift(default_battery(&c2, Side::Right, 1))?;
    for (name, m) in &battery {
        match lift(is_free(c2.algebra(), m.module(), 64, 3))? {
            Freeness::Free { basis, .. } => ensure!(verify_free_basis(c2.algebra(), m.module(), &basis), "GF(2)[C2] battery {name}: basis fails"),
            other => return Err(format!("GF(2)[C2] battery {name} not free: {other:?}")),
        }
    }
    let inv = c2.invariants();
    ensure!(inv.dim() == 1 && inv.contains(c2.field(), c2.algebra().unit()), "A^H has dimension {}", inv.dim());
    Ok(format!("GF(2)[C2]: {n_c2} modules projective, {} free, A^H = GF(2); H4: {n_h4} modules projective with checked splittings", battery.len()))
}

// ---------------------------------------------------------------------------
// 6. Relation ideal sandwiches
// ---------------------------------------------------------------------------

fn criterion_6() -> Outcome {
    let f = gf(3);
    let mut co = 0;
    for name in ["h4-regular", "mat2-graded", "kxk-dual-trivial", "group_algebra(C2)-regular"] {
        let ca = lift(builtin_comodule_algebra(name, &f))?;
        for (i, (label, m)) in lift(default_battery(&ca, Side::Right, 3))?.iter().enumerate().take(4) {
            for s in lift(random_sandwiches(&ca, m, 4, i as u64))? {
                let ok = s.k.contains_space(&f, &s.i_gens) && s.ideal.contains_space(&f, &s.k) && ca.is_costable(&s.k);
                ensure!(s.holds && ok, "{name} {label}: I_gens ⊆ K ⊆ I with K costable fails");
                co += 1;
            }
        }
    }
    let mut st = 0;
    for name in ["c2-swap", "c2-trivial-dual-numbers", "h4-adjoint", "c3-cycle"] {
        let ma = lift(builtin_module_algebra(name, &f))?;
        for (i, (label, m)) in lift(default_objects(&ma, 1))?.into_iter().take(4).enumerate() {
            for s in lift(random_stable_sandwiches(&ma, &m, 4, i as u64))? {
                let ok = s.k.contains_space(&f, &s.i_gens) && s.ideal.contains_space(&f, &s.k) && ma.is_stable(&s.k);
                ensure!(s.holds && ok, "{name} {label}: I_gens ⊆ K ⊆ I with K stable fails");
                st += 1;
            }
        }
    }
    ensure!(co >= 50 && st >= 50, "only {co} costable and {st} stable sandwiches");
    Ok(format!("{co} costable and {st} stable sandwiches re-verified"))
}

// ---------------------------------------------------------------------------
// 7. Fitting ideals
// ---------------------------------------------------------------------------

fn criterion_7() -> Outcome {
    let q = Rationals;
    let f3 = gf(3);
    // Presentation independence with padded generating sets.
    let ca3 = lift(builtin_comodule_algebra("c2-dual-numbers", &f3))?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pres = 0;
    for (name, m) in lift(fitting_battery(ca3.algebra(), 12, 4))? {
        let l = lift(fitting_ledger(ca3.algebra(), &m))?;
        let mut gens = l.generators.clone();
        for _ in 0..2 {
            gens.push((0..m.dim()).map(|_| f3.elem_at(rng.random_range(0..3u64))).collect());
        }
        ensure!(l.same_ideals(&lift(fitting_ledger_with(ca3.algebra(), &m, &gens))?), "{name}: ideals depend on the presentation");
        pres += 1;
    }
    let mut f2_checks = 0;
    let mut base_changes = 0;
    for name in ["group_algebra(C2)-regular", "c2-dual-numbers"] {
        let ca = lift(builtin_comodule_algebra(name, &q))?;
        let inputs = lift(FittingInputs::for_comodule_algebra(&ca, 3))?;
        base_changes = base_changes.max(inputs.base_changes.len());
        for id in ["F1", "F2", "P1.1"] {
            let r = lift(verify_fitting_property(id, &inputs))?;
            passed(&r)?;
            if id == "F2" {
                f2_checks += r.checks.len();
            }
        }
    }
    ensure!(base_changes >= 2, "only {base_changes} base changes");
    ensure!(f2_checks >= 20, "F2 compared on only {f2_checks} modules");
    // The dual numbers example: M = A/sA has Fitt_0 = (s), which is costable.
    let ca = lift(builtin_comodule_algebra("c2-dual-numbers", &q))?;
    let s = vecops::unit(&q, 4, 2);
    let sa = ca.costable_closure(&[s.clone()]).space;
    let m = lift(fdhopf_core::comodalg::HopfModule::regular(&ca, Side::Right).quotient(&ca, &sa))?;
    let l = lift(fitting_ledger(ca.algebra(), m.module()))?;
    let ideal_s = Subspace::span(&q, 4, &(0..4).map(|i| ca.algebra().mul(&s, &ca.algebra().basis_vector(i))).collect::<Vec<_>>());
    ensure!(l.fitt(0) == &ideal_s && ca.is_costable(l.fitt(0)), "Fitt_0 of A/sA is not the costable ideal (s)");
    Ok(format!(
        "{pres} modules presentation independent; F1 on {base_changes} base changes; F2 agrees with is_free/is_projective on {f2_checks} modules; Fitt_0 = (s) costable"
    ))
}

// ---------------------------------------------------------------------------
// 8. Semisimple H
// ---------------------------------------------------------------------------

fn criterion_8() -> Outcome {
    let q = Rationals;
    let inputs = ComodalgInputs::default();
    let mut simple = Vec::new();
    for name in ["group_algebra(C2)-regular", "mat2-graded"] {
        let ca = lift(builtin_comodule_algebra(name, &q))?;
        ensure!(ca.hopf().name() == "group_algebra(C2)", "{name} is over {}", ca.hopf().name());
        ensure!(lift(ca.is_h_simple())?.is_simple(), "{name} is not H-simple");
        let r = lift(verify_comodalg_theorem("5.2", &ca, &inputs, 5))?;
        passed(&r)?;
        ensure!(r.checks.iter().any(|c| c.id == "5.2ii"), "{name}: no semisimplicity check");
        ensure!(lift(ca.algebra().wedderburn())?.is_semisimple(), "{name} is not semisimple");
        simple.push(name);
    }
    let t = lift(builtin_comodule_algebra("kxk-dual-trivial", &q))?;
    ensure!(!lift(t.is_h_simple())?.is_simple(), "kxk-dual-trivial is H-simple");
    passed(&lift(verify_comodalg_theorem("5.3", &t, &inputs, 5))?)?;
    let j = &lift(t.algebra().wedderburn())?.radical;
    ensure!(j.dim() == 1 && t.is_costable(j), "J of k×k[s]/(s²) is not a costable line");
    let mut quads = 0;
    for name in ["h4-regular", "mat2-graded", "group_algebra(C2)-regular"] {
        let ca = lift(builtin_comodule_algebra(name, &q))?;
        let r = lift(verify_comodalg_theorem("5.4", &ca, &inputs, 5))?;
        passed(&r)?;
        for c in &r.checks {
            let w = &c.witnesses[0];
            ensure!(["dim H", "dim A", "dim V", "dim W"].iter().all(|d| w.contains(d)), "5.4 witness lacks dimensions: {w}");
            quads += 1;
        }
    }
    ensure!(quads >= 5, "only {quads} quadruples");
    Ok(format!("5.2(ii) semisimple on {}; J costable on k×k[s]/(s²) (not H-simple); 5.4 on {quads} quadruples", simple.join(", ")))
}

// ---------------------------------------------------------------------------
// 9. Module algebras
// ---------------------------------------------------------------------------

fn criterion_9() -> Outcome {
    let q = Rationals;
    let inputs = ModalgInputs::default();
    for name in ["c2-swap", "h4-adjoint-mat2"] {
        let ma = lift(builtin_module_algebra(name, &q))?;
        passed(&lift(verify_modalg_theorem("7.6", &ma, &inputs, 4))?)?;
    }
    let swap = lift(builtin_module_algebra("c2-swap", &q))?;
    let sp = lift(swap.smash_product(SmashVariant::AH))?;
    let w = lift(sp.algebra.wedderburn())?;
    ensure!(
        w.radical.is_zero() && w.block_count() == 1 && w.blocks[0].dim() == 4 && w.block_lengths[0] == 2 && w.division_dims[0] == 1,
        "smash product is not Mat_2(Q): radical {}, {} blocks",
        w.radical.dim(),
        w.block_count()
    );
    let probe = ModalgInputs { n: 2, probe_trials: 100, ..Default::default() };
    let r = lift(verify_modalg_theorem("7.1", &swap, &probe, 9))?;
    passed(&r)?;
    Ok(format!("7.6 on c2-swap and h4-adjoint-mat2; A#H has radical 0 and one 2x2 block over Q; 7.1 probe clean ({} checks, 100 trials)", r.checks.len()))
}

// ---------------------------------------------------------------------------
// 10. Freeness oracle against exhaustive search, and the probe
// ---------------------------------------------------------------------------

/// GF(2) module as bit masks: `act[b][j]` is the image of `e_j` under `b`.
struct BitModule {
    dim: usize,
    act: Vec<Vec<u64>>,
}

impl BitModule {
    fn new(m: &Module<u64>) -> Self {
        let dim = m.dim();
        let act = m
            .actions()
            .iter()
            .map(|a| (0..dim).map(|j| (0..dim).fold(0u64, |acc, i| acc | ((*a.get(i, j) & 1) << i))).collect())
            .collect();
        BitModule { dim, act }
    }

    fn image(&self, b: usize, v: u64) -> u64 {
        (0..self.dim).filter(|j| v >> j & 1 == 1).fold(0, |acc, j| acc ^ self.act[b][j])
    }
}

fn insert(basis: &mut Vec<u64>, mut v: u64) -> bool {
    for &b in basis.iter() {
        v = v.min(v ^ b);
    }
    if v == 0 {
        return false;
    }
    basis.push(v);
    basis.sort_unstable_by(|a, b| b.cmp(a));
    true
}

/// Free iff some `r`-tuple of elements has `A`-span of dimension `dim M`,
/// with `r = dim M / dim A`; every tuple is tried.
fn exhaustive_free(m: &BitModule, da: usize) -> bool {
    if m.dim == 0 {
        return true;
    }
    if m.dim % da != 0 {
        return false;
    }
    let r = m.dim / da;
    let orbits: Vec<Vec<u64>> = (1u64..1 << m.dim).map(|v| (0..m.act.len()).map(|b| m.image(b, v)).collect()).collect();
    fn go(orbits: &[Vec<u64>], basis: &[u64], left: usize, target: usize) -> bool {
        if left == 0 {
            return basis.len() == target;
        }
        orbits.iter().any(|o| {
            let mut b = basis.to_vec();
            let mut grew = 0;
            for &x in o {
                if insert(&mut b, x) {
                    grew += 1;
                }
            }
            grew * left >= target - basis.len() && go(orbits, &b, left - 1, target)
        })
    }
    go(&orbits, &[], r, m.dim)
}

fn random_module(alg: &Algebra<GaloisField>, rng: &mut ChaCha8Rng) -> Module<u64> {
    let f = alg.field();
    let d = alg.dim();
    let w = alg.wedderburn().unwrap();
    loop {
        let reg = Module::regular(alg, Side::Right);
        let base = match rng.random_range(0..4u8) {
            0 => reg.power(alg, rng.random_range(1..=3)),
            1 => reg.direct_sum(f, w.simple(Side::Right, rng.random_range(0..w.block_count()))),
            2 => {
                let s = w.simple(Side::Right, rng.random_range(0..w.block_count())).clone();
                s.direct_sum(f, &w.simple(Side::Right, rng.random_range(0..w.block_count())).clone())
            }
            _ => reg.power(alg, 2),
        };
        let rand_vec = |rng: &mut ChaCha8Rng, n: usize| -> Vec<u64> { (0..n).map(|_| rng.random_range(0..2u64)).collect() };
        let m = match rng.random_range(0..4u8) {
            0 => base,
            1 => {
                let v = rand_vec(rng, base.dim());
                let sub = base.submodule(alg, &[v]);
                base.restrict(f, &sub)
            }
            2 => {
                let v = rand_vec(rng, base.dim());
                let sub = base.submodule(alg, &[v]);
                base.quotient(f, &sub)
            }
            _ => {
                // Same module in a random basis.
                let n = base.dim();
                let (p, pinv) = loop {
                    let rows: Vec<Vec<u64>> = (0..n).map(|_| rand_vec(rng, n)).collect();
                    let p = Matrix::from_rows(n, rows);
                    if let Some(pinv) = p.inverse(f) {
                        break (p, pinv);
                    }
                };
                let action = base.actions().iter().map(|a| pinv.mul(f, &a.mul(f, &p))).collect();
                Module::new(alg, Side::Right, n, action).unwrap()
            }
        };
        if m.dim() >= 1 && m.dim() <= 6 && m.dim() <= 3 * d {
            return m;
        }
    }
}

fn criterion_10() -> Outcome {
    let f2 = gf(2);
    let mut algebras: Vec<(String, Algebra<GaloisField>)> = Vec::new();
    for name in ["group_algebra(C2)", "group_algebra(C3)", "group_algebra(C4)", "dual_group_algebra(C2)", "sweedler_h4"] {
        algebras.push((name.into(), lift(builtin(name, &f2))?.algebra().clone()));
    }
    for name in ["mat2-graded", "c2-dual-numbers"] {
        algebras.push((name.into(), lift(builtin_comodule_algebra(name, &f2))?.algebra().clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut free, mut not_free) = (0, 0);
    for t in 0..100 {
        let (name, alg) = &algebras[t % algebras.len()];
        let m = random_module(alg, &mut rng);
        ensure!(m.validate(alg).is_valid(), "random module {t} over {name} is invalid");
        let truth = exhaustive_free(&BitModule::new(&m), alg.dim());
        let oracle = match is_free(alg, &m, 64, t as u64) {
            Ok(Freeness::Free { basis, .. }) => {
                ensure!(verify_free_basis(alg, &m, &basis), "module {t} over {name}: returned basis fails");
                true
            }
            Ok(Freeness::NotFree { .. }) => false,
            Err(e) => return Err(format!("module {t} over {name} (dim {}): {e}", m.dim())),
        };
        ensure!(truth == oracle, "module {t} over {name} (dim {}): exhaustive {truth}, is_free {oracle}", m.dim());
        if truth {
            free += 1;
        } else {
            not_free += 1;
        }
    }

    // Probe every algebra the suites touch at n = 2.
    let q = Rationals;
    let mut probe_algs: Vec<(String, Algebra<Rationals>)> = Vec::new();
    for name in CATALOG.iter().filter(|n| !n.starts_with("taft")) {
        probe_algs.push((name.to_string(), lift(builtin(name, &q))?.algebra().clone()));
    }
    for name in ["h4-regular", "mat2-graded", "kxk-dual-trivial", "c2-dual-numbers"] {
        probe_algs.push((name.into(), lift(builtin_comodule_algebra(name, &q))?.algebra().clone()));
    }
    for name in ["c2-swap", "h4-adjoint-mat2"] {
        probe_algs.push((format!("{name}#H"), lift(lift(builtin_module_algebra(name, &q))?.smash_product(SmashVariant::AH))?.algebra));
    }
    let (mut solvable, mut events, mut trials) = (0, 0, 0);
    for (i, (name, alg)) in probe_algs.iter().enumerate() {
        let r = lift(weak_finiteness_probe(alg, 2, 20, i as u64))?;
        ensure!(r.is_clean(), "probe on {name}: YX ≠ 1 at trials {:?}", r.violations);
        solvable += r.solvable;
        events += r.violations.len();
        trials += r.trials;
    }
    let taft = lift(builtin("taft(3)", &gf(7)))?;
    let r = lift(weak_finiteness_probe(taft.algebra(), 2, 20, 99))?;
    ensure!(r.is_clean(), "probe on taft(3): YX ≠ 1");
    solvable += r.solvable;
    trials += r.trials;
    Ok(format!(
        "is_free matches exhaustive search on 100 GF(2) modules ({free} free, {not_free} not); probe: {events} YX ≠ 1 events in {trials} trials ({solvable} solvable) over {} algebras",
        probe_algs.len() + 1
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("axiom suite and mutations", criterion_1),
        ("weak finiteness certificate", criterion_2),
        ("coideal subalgebra span{1, gx} of H4", criterion_3),
        ("divisibility and freeness over coideal subalgebras", criterion_4),
        ("projective Hopf modules over H-simple comodule algebras", criterion_5),
        ("relation ideal sandwiches", criterion_6),
        ("Fitting ideals", criterion_7),
        ("semisimple H: 5.2(ii), 5.3, 5.4", criterion_8),
        ("module algebras: 7.6, smash product, 7.1 probe", criterion_9),
        ("freeness oracle and weak finiteness probe", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS ({secs:5.2}s) {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:5.2}s) {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
