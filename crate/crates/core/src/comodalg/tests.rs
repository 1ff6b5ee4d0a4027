use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::catalog::{field_times_dual_numbers, matrix_algebra};
use super::drivers::{default_battery, random_sandwiches};
use super::*;
use crate::algebra::oracles::{module_iso, IsoResult};
use crate::algebra::Module;
use crate::exactla::{GaloisField, Rationals};
use crate::hopf::catalog::{group_algebra, sweedler_h4};
use crate::hopf::Group;
use crate::report::Status;

fn gf(p: u64) -> GaloisField {
    GaloisField::prime(p).unwrap()
}

fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    vecops::unit(f, n, i)
}

/// `k × k` with the trivial `k[C2]`-coaction.
fn k_times_k_trivial<F: Field>(f: &F) -> ComoduleAlgebra<F> {
    let alg = Algebra::from_fn(f.clone(), vec![String::from("e1"), String::from("e2")], vecops::from_i64(f, &[1, 1]), |i, j| {
        let mut v = vecops::zero(f, 2);
        if i == j {
            v[i] = f.one();
        }
        v
    })
    .unwrap();
    ComoduleAlgebra::trivial(&alg, &group_algebra(f, Group::Cyclic(2)).unwrap()).unwrap()
}

/// Exhaustive oracle over a finite field: `A` is `H`-simple iff the set of
/// elements reachable from any nonzero `a` by sums, products with basis
/// elements on either side and coefficients of `ρ` is all of `A`.
fn brute_force_h_simple<F: Field>(ca: &ComoduleAlgebra<F>) -> bool {
    let f = ca.field();
    let q = f.order().unwrap();
    let (da, dh) = (ca.dim(), ca.hopf().dim());
    let total = q.pow(da as u32);
    let encode = |v: &[F::Elem]| v.iter().fold(0u64, |acc, x| acc * q + f.index_of(x).unwrap());
    let decode = |mut n: u64| {
        let mut v = vec![f.zero(); da];
        for i in (0..da).rev() {
            v[i] = f.elem_at(n % q);
            n /= q;
        }
        v
    };
    let alg = ca.algebra();
    let step = |v: &[F::Elem]| {
        let mut out = Vec::new();
        for b in 0..da {
            out.push(alg.mul(&alg.basis_vector(b), v));
            out.push(alg.mul(v, &alg.basis_vector(b)));
        }
        let r = ca.coact(v);
        for h in 0..dh {
            out.push((0..da).map(|a| r[a * dh + h].clone()).collect::<Vec<_>>());
        }
        out
    };
    for start in 1..total {
        let mut seen = BTreeSet::new();
        seen.insert(0u64);
        let mut stack = vec![start];
        while let Some(n) = stack.pop() {
            if !seen.insert(n) {
                continue;
            }
            let v = decode(n);
            let mut new: Vec<Vec<F::Elem>> = step(&v);
            for &m in seen.iter() {
                new.push(vecops::add(f, &v, &decode(m)));
            }
            for w in new {
                let e = encode(&w);
                if !seen.contains(&e) {
                    stack.push(e);
                }
            }
        }
        if (seen.len() as u64) < total {
            return false;
        }
    }
    true
}

#[test]
fn catalog_validates() {
    for name in COMODALG_CATALOG.iter().copied().chain(["group_algebra(S3)-regular", "dual_group_algebra(C3)-regular"]) {
        let ca = builtin_comodule_algebra(name, &Rationals).unwrap();
        assert!(ca.validate().is_valid(), "{name}: {:?}", ca.validate());
        let ca = builtin_comodule_algebra(name, &gf(3)).unwrap();
        assert!(ca.validate().is_valid(), "{name} over GF(3)");
    }
    assert!(builtin_comodule_algebra("nonsense", &Rationals).is_err());
    let ca = builtin_comodule_algebra("h4-regular", &Rationals).unwrap();
    assert!(ca.is_regular());
}

#[test]
fn mutated_coaction_is_caught() {
    let f = Rationals;
    let ca = builtin_comodule_algebra("h4-regular", &f).unwrap();
    let mut rho = ca.rho().clone();
    rho.set(0, 1, f.one());
    let bad = ComoduleAlgebra::new("bad", ca.algebra().clone(), ca.hopf().clone(), rho).unwrap();
    assert!(!bad.validate().is_valid());
}

#[test]
fn coideal_subalgebra_needs_a_coideal() {
    let f = Rationals;
    let h = sweedler_h4(&f).unwrap();
    // span{1, x}: Δx = x⊗1 + g⊗x leaves A ⊗ H.
    let span = Subspace::span(&f, 4, &[unit(&f, 4, 0), unit(&f, 4, 2)]);
    assert!(ComoduleAlgebra::coideal_subalgebra(&h, &span).is_err());
}

#[test]
fn invariants() {
    let f = Rationals;
    let h4 = builtin_comodule_algebra("h4-regular", &f).unwrap();
    assert_eq!(h4.invariants().dim(), 1);
    assert!(h4.invariants().contains(&f, &h4.hopf().one()));
    let a = builtin_comodule_algebra("h4-coideal-1gx", &f).unwrap();
    assert_eq!(a.invariants_subalgebra().unwrap().0.dim(), 1);
    let t = builtin_comodule_algebra("kxk-dual-trivial", &f).unwrap();
    assert!(t.invariants().is_full());
}

#[test]
fn costable_closures() {
    let f = Rationals;
    let h4 = builtin_comodule_algebra("h4-regular", &f).unwrap();
    assert!(h4.costable_closure(&[h4.algebra().unit().to_vec()]).space.is_full());
    let c = h4.costable_closure(&[unit(&f, 4, 2)]);
    assert!(c.space.is_full() && c.costable);
    let t = builtin_comodule_algebra("kxk-dual-trivial", &f).unwrap();
    for i in 0..3 {
        let c = t.costable_closure(&[unit(&f, 3, i)]);
        assert!(c.costable);
        assert_eq!(c.space, plain_ideal(t.algebra(), &[unit(&f, 3, i)]));
    }
}

#[test]
fn largest_costable_inside() {
    let f = Rationals;
    let h4 = builtin_comodule_algebra("h4-regular", &f).unwrap();
    let full = Subspace::full(&f, 4);
    assert!(h4.largest_costable_inside(&full).space.is_full());
    let i = Subspace::span(&f, 4, &[unit(&f, 4, 2), unit(&f, 4, 3)]);
    let k = h4.largest_costable_inside(&i);
    assert!(k.space.is_zero() && k.costable);
    assert!(h4.is_maximal_costable_inside(&k.space, &i));
    let t = builtin_comodule_algebra("kxk-dual-trivial", &f).unwrap();
    let s = Subspace::span(&f, 3, &[unit(&f, 3, 2)]);
    assert_eq!(t.largest_costable_inside(&s).space, s);
}

#[test]
fn h_simplicity_examples() {
    let h4 = builtin_comodule_algebra("h4-regular", &Rationals).unwrap();
    assert_eq!(h4.is_h_simple().unwrap(), Simplicity::Simple { end_dim: 1 });
    let c2 = builtin_comodule_algebra("group_algebra(C2)-regular", &gf(2)).unwrap();
    assert!(c2.algebra().wedderburn().unwrap().is_local());
    assert!(c2.is_h_simple().unwrap().is_simple());
    let kk = k_times_k_trivial(&Rationals);
    match kk.is_h_simple().unwrap() {
        Simplicity::NotSimple { witness } => {
            assert_eq!(witness.dim(), 1);
            assert!(kk.is_costable(&witness));
        }
        other => panic!("{other:?}"),
    }
    let g = builtin_comodule_algebra("mat2-graded", &Rationals).unwrap();
    assert!(g.is_h_simple().unwrap().is_simple());
}

#[test]
fn h_simplicity_matches_exhaustive_search() {
    for p in [2, 3] {
        let f = gf(p);
        let mut cas: Vec<ComoduleAlgebra<GaloisField>> = COMODALG_CATALOG.iter().map(|n| builtin_comodule_algebra(n, &f).unwrap()).collect();
        cas.push(builtin_comodule_algebra("group_algebra(C3)-regular", &f).unwrap());
        cas.push(k_times_k_trivial(&f));
        for ca in cas {
            let got = ca.is_h_simple().unwrap();
            assert!(!matches!(got, Simplicity::Inconclusive { .. }), "{}", ca.name());
            assert_eq!(got.is_simple(), brute_force_h_simple(&ca), "{} over GF({p})", ca.name());
        }
    }
}

#[test]
fn hopf_module_battery_validates() {
    let f = Rationals;
    for name in ["h4-regular", "h4-coideal-1gx", "mat2-graded"] {
        let ca = builtin_comodule_algebra(name, &f).unwrap();
        for side in [Side::Right, Side::Left] {
            let b = default_battery(&ca, side, 7).unwrap();
            assert!(b.len() >= 6, "{name}: {} modules", b.len());
            for (m, hm) in &b {
                assert!(hm.validate(&ca).is_valid(), "{name} {side:?} {m}: {:?}", hm.validate(&ca));
            }
        }
    }
}

#[test]
fn induced_and_mutated_hopf_modules() {
    let f = Rationals;
    let ca = builtin_comodule_algebra("h4-regular", &f).unwrap();
    let a = Module::regular(ca.algebra(), Side::Right);
    let ah = HopfModule::induced(&ca, &a).unwrap();
    assert_eq!(ah.dim(), 16);
    let t = ComoduleAlgebra::trivial(&field_times_dual_numbers(&f).unwrap(), &group_algebra(&f, Group::Cyclic(2)).unwrap()).unwrap();
    let w = t.algebra().wedderburn().unwrap();
    let v = HopfModule::induced(&t, w.simple(Side::Right, 0)).unwrap();
    assert_eq!(v.dim(), 2);
    assert!(v.validate(&t).is_valid());

    let m = HopfModule::regular(&ca, Side::Right);
    let mut co = m.coaction().coaction().clone();
    co.set(1, 0, f.one());
    let co = crate::coalgebra::Comodule::new(Side::Right, 4, 4, co).unwrap();
    let bad = HopfModule::new(&ca, m.module().clone(), co).unwrap();
    assert!(!bad.validate(&ca).is_valid());
}

#[test]
fn dual_of_left_regular_is_regular() {
    let f = Rationals;
    let ca = builtin_comodule_algebra("h4-coideal-1gx", &f).unwrap();
    let left = HopfModule::regular(&ca, Side::Left);
    let d = left.dual(&ca).unwrap();
    assert_eq!(d.side(), Side::Right);
    assert!(d.validate(&ca).is_valid());
    assert!(matches!(
        module_iso(ca.algebra(), d.module(), &Module::regular(ca.algebra(), Side::Right), 16, 1).unwrap(),
        IsoResult::Iso { .. }
    ));
    // Right to left uses the inverse antipode.
    let h4 = builtin_comodule_algebra("h4-regular", &f).unwrap();
    let d = HopfModule::regular(&h4, Side::Right).dual(&h4).unwrap();
    assert_eq!(d.side(), Side::Left);
    assert!(d.validate(&h4).is_valid());
}

#[test]
fn fundamental_split() {
    let f = Rationals;
    let ca = builtin_comodule_algebra("h4-regular", &f).unwrap();
    let h = HopfModule::regular(&ca, Side::Right);
    let s = h.fundamental_split(&ca).unwrap();
    assert_eq!(s.m0.dim(), 1);
    assert!(s.bijective);
    let s2 = h.direct_sum(&f, &h).fundamental_split(&ca).unwrap();
    assert_eq!(s2.m0.dim(), 2);
    assert!(s2.bijective);
    let w = ca.algebra().wedderburn().unwrap();
    let v = w.simple(Side::Right, 0);
    let s3 = HopfModule::induced(&ca, v).unwrap().fundamental_split(&ca).unwrap();
    assert_eq!(s3.m0.dim(), v.dim());
    assert!(s3.bijective);
    let other = builtin_comodule_algebra("h4-coideal-1gx", &f).unwrap();
    assert!(HopfModule::regular(&other, Side::Right).fundamental_split(&other).is_err());
}

#[test]
fn relation_ideals() {
    let f = Rationals;
    let ca = builtin_comodule_algebra("h4-coideal-1gx", &f).unwrap();
    let m = HopfModule::regular(&ca, Side::Right);
    let one = ca.algebra().unit().to_vec();
    assert!(m.relation_ideal(&ca, &[one.clone()]).unwrap().is_zero());
    assert!(m.relation_ideal(&ca, &[unit(&f, 2, 1)]).is_err());
    // A redundant pair {1, gx}: relation (gx, -1) gives coefficient 1.
    let i = m.relation_ideal(&ca, &[one, unit(&f, 2, 1)]).unwrap();
    assert!(i.is_full());
    let s = m.sandwich(&ca, &[ca.algebra().unit().to_vec()], &Subspace::full(&f, 2)).unwrap();
    assert!(s.holds);
}

#[test]
fn sandwiches_on_random_generator_systems() {
    let f = gf(3);
    let mut total = 0;
    for name in ["h4-regular", "mat2-graded", "kxk-dual-trivial"] {
        let ca = builtin_comodule_algebra(name, &f).unwrap();
        for (i, (label, m)) in default_battery(&ca, Side::Right, 3).unwrap().iter().enumerate().take(4) {
            for s in random_sandwiches(&ca, m, 5, i as u64).unwrap() {
                assert!(s.holds, "{name} {label}");
                total += 1;
            }
        }
    }
    assert!(total >= 50);
}

#[test]
fn theorem_3_5_batteries() {
    let f2 = gf(2);
    let ca = builtin_comodule_algebra("group_algebra(C2)-regular", &f2).unwrap();
    let inputs = ComodalgInputs::default();
    let r = verify_comodalg_theorem("3.5", &ca, &inputs, 1).unwrap();
    assert!(r.checks.len() >= 6);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let r = verify_comodalg_theorem("3.6", &ca, &inputs, 1).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());

    let h4 = builtin_comodule_algebra("h4-regular", &Rationals).unwrap();
    let r = verify_comodalg_theorem("3.5", &h4, &ComodalgInputs::default(), 2).unwrap();
    assert!(r.checks.len() >= 6);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn hypothesis_failures_refuse() {
    let kk = k_times_k_trivial(&Rationals);
    for id in ["3.5", "3.6", "3.8", "4.2", "5.4"] {
        let e = verify_comodalg_theorem(id, &kk, &ComodalgInputs::default(), 0).unwrap_err();
        assert!(matches!(e, Error::HypothesisFailure { .. }), "{id}: {e}");
    }
    let t = builtin_comodule_algebra("kxk-dual-trivial", &Rationals).unwrap();
    assert!(matches!(verify_comodalg_theorem("3.7", &t, &ComodalgInputs::default(), 0), Err(Error::HypothesisFailure { .. })));
    let h4 = builtin_comodule_algebra("h4-regular", &Rationals).unwrap();
    assert!(matches!(verify_comodalg_theorem("5.3", &h4, &ComodalgInputs::default(), 0), Err(Error::HypothesisFailure { .. })));
    assert!(matches!(verify_comodalg_theorem("9.9", &h4, &ComodalgInputs::default(), 0), Err(Error::Input(_))));
}

#[test]
fn remaining_drivers_pass() {
    let q = Rationals;
    let h4 = builtin_comodule_algebra("h4-regular", &q).unwrap();
    let c2 = builtin_comodule_algebra("group_algebra(C2)-regular", &q).unwrap();
    let g = builtin_comodule_algebra("mat2-graded", &q).unwrap();
    let t = builtin_comodule_algebra("kxk-dual-trivial", &q).unwrap();
    let inputs = ComodalgInputs::default();
    let cases: &[(&str, &ComoduleAlgebra<Rationals>)] = &[
        ("3.7", &h4),
        ("3.7", &g),
        ("3.8", &c2),
        ("4.2", &h4),
        ("4.2", &g),
        ("5.2", &c2),
        ("5.2", &g),
        ("5.2", &h4),
        ("5.3", &t),
        ("5.3", &c2),
        ("5.4", &h4),
        ("5.4", &g),
    ];
    for (id, ca) in cases {
        let r = verify_comodalg_theorem(id, ca, &inputs, 5).unwrap();
        assert_eq!(r.status(), Status::Pass, "{id} on {}: {:?}", ca.name(), r.failures().collect::<Vec<_>>());
    }
    let r = verify_comodalg_theorem("5.2", &c2, &inputs, 0).unwrap();
    assert!(r.checks.iter().any(|c| c.id == "5.2ii"));
    let r = verify_comodalg_theorem("5.4", &h4, &inputs, 0).unwrap();
    assert!(r.checks.len() >= 2);
    assert!(r.checks.iter().all(|c| c.witnesses[0].contains("dim H = 4")));
}

#[test]
fn tensor_with_matrix_algebra() {
    let q = Rationals;
    let c2 = builtin_comodule_algebra("group_algebra(C2)-regular", &q).unwrap();
    let b = c2.tensor_left(&matrix_algebra(&q, 2).unwrap()).unwrap();
    assert_eq!(b.dim(), 8);
    assert!(b.validate().is_valid());
    assert!(b.is_h_simple().unwrap().is_simple());
}
