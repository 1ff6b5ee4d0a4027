use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::split_algebra;
use super::drivers::{default_objects, random_stable_sandwiches};
use super::*;
use crate::comodalg::catalog::matrix_algebra;
use crate::exactla::{GaloisField, Rationals};
use crate::hopf::catalog::{dual_group_algebra, group_algebra};
use crate::hopf::Group;
use crate::report::Status;

#[test]
fn catalog_validates() {
    let q = Rationals;
    let f3 = GaloisField::prime(3).unwrap();
    for name in MODALG_CATALOG {
        let ma = builtin_module_algebra(name, &q).unwrap();
        assert!(ma.validate().is_valid(), "{name}: {:?}", ma.validate().violations.first());
        let ma = builtin_module_algebra(name, &f3).unwrap();
        assert!(ma.validate().is_valid(), "{name} over GF(3)");
    }
    assert!(builtin_module_algebra("nope", &q).is_err());
}

#[test]
fn mutated_actions_are_caught() {
    let f = Rationals;
    let ma = builtin_module_algebra("c2-swap", &f).unwrap();
    let mut action = ma.action().to_vec();
    // g acts as the identity on e1 only: no longer multiplicative.
    action[1].set(0, 0, f.one());
    let bad = HModuleAlgebra::new("bad", ma.algebra().clone(), ma.hopf().clone(), action).unwrap();
    let r = bad.validate();
    assert!(!r.is_valid());
    assert!(r.violations.iter().any(|v| v.axiom == "measuring" || v.axiom == "module"));
}

/// `τ_A` is an algebra map into the convolution algebra exactly when the
/// measuring axioms hold.
#[test]
fn tau_is_multiplicative() {
    let f = Rationals;
    for name in MODALG_CATALOG {
        let ma = builtin_module_algebra(name, &f).unwrap();
        let conv = crate::algebra::probe::convolution_algebra(ma.hopf().coalgebra(), ma.algebra()).unwrap();
        let t = ma.tau();
        let a = ma.algebra();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = t.mul_vec(&f, &a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                let rhs = conv.mul(&t.col_vec(i), &t.col_vec(j));
                assert_eq!(lhs, rhs, "{name}");
            }
        }
        assert_eq!(t.mul_vec(&f, a.unit()), conv.unit().to_vec(), "{name}");
    }
}

#[test]
fn smash_products() {
    let f = Rationals;
    let swap = builtin_module_algebra("c2-swap", &f).unwrap();
    for v in [SmashVariant::AH, SmashVariant::OpCop] {
        let sp = swap.smash_product(v).unwrap();
        assert!(sp.algebra.validate().is_valid());
        let w = sp.algebra.wedderburn().unwrap();
        assert!(w.radical.is_zero());
        assert_eq!(w.block_count(), 1);
        assert_eq!(sp.algebra.dim(), 4);
        assert!(!sp.algebra.is_commutative());
    }
    // Trivial action gives the tensor product.
    let a = split_algebra(&f, 2).unwrap();
    let h = group_algebra(&f, Group::Cyclic(3)).unwrap();
    let triv = HModuleAlgebra::trivial(&a, &h).unwrap();
    let sp = triv.smash_product(SmashVariant::AH).unwrap();
    let t = a.tensor(h.algebra()).unwrap();
    for s in 0..6 {
        for u in 0..6 {
            assert_eq!(sp.algebra.mul(&sp.algebra.basis_vector(s), &sp.algebra.basis_vector(u)), t.mul(&t.basis_vector(s), &t.basis_vector(u)));
        }
    }
    let adj = builtin_module_algebra("h4-adjoint", &f).unwrap();
    let sp = adj.smash_product(SmashVariant::AH).unwrap();
    assert_eq!(sp.algebra.dim(), 16);
    assert!(sp.algebra.validate().is_valid());
}

#[test]
fn stable_ideals() {
    let f = Rationals;
    let swap = builtin_module_algebra("c2-swap", &f).unwrap();
    let e1 = Subspace::span(&f, 2, &[vecops::unit(&f, 2, 0)]);
    assert!(swap.stable_inside(&e1).is_zero());
    assert!(swap.stable_inside(&Subspace::full(&f, 2)).is_full());
    assert!(swap.stable_closure(&[vecops::unit(&f, 2, 0)]).is_full());
    let a = split_algebra(&f, 2).unwrap();
    let triv = HModuleAlgebra::trivial(&a, swap.hopf()).unwrap();
    assert_eq!(triv.stable_inside(&e1), e1);
    assert!(swap.is_h_simple().unwrap().is_simple());
    assert!(!triv.is_h_simple().unwrap().is_simple());
    assert!(!builtin_module_algebra("h4-adjoint", &f).unwrap().is_h_simple().unwrap().is_simple());
    assert!(builtin_module_algebra("h4-adjoint-mat2", &f).unwrap().is_h_simple().unwrap().is_simple());
    assert!(builtin_module_algebra("dual-c2-graded-mat2", &f).unwrap().is_h_simple().unwrap().is_simple());
}

/// Brute force over GF(2): `K` equals the set of all `a` with `h_k·a ∈ I`.
#[test]
fn stable_inside_matches_enumeration() {
    let f = GaloisField::prime(2).unwrap();
    let ma = builtin_module_algebra("c3-cycle", &f).unwrap();
    for mask in 0u32..8 {
        let gens: Vec<Vec<u64>> = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| vecops::unit(&f, 3, i)).collect();
        let ideal = Subspace::span(&f, 3, &gens);
        let k = ma.stable_inside(&ideal);
        for n in 0..8u64 {
            let a: Vec<u64> = (0..3).map(|i| (n >> i) & 1).collect();
            let inside = ma.action().iter().all(|m| ideal.contains(&f, &m.mul_vec(&f, &a)));
            assert_eq!(k.contains(&f, &a), inside);
        }
    }
}

#[test]
fn objects_round_trip_through_smash_product() {
    let f = Rationals;
    for name in ["c2-swap", "h4-adjoint-mat2", "dual-c2-graded-mat2"] {
        let ma = builtin_module_algebra(name, &f).unwrap();
        let sp = ma.smash_product(SmashVariant::OpCop).unwrap();
        for (obj, m) in default_objects(&ma, 3).unwrap() {
            assert!(m.validate(&ma).is_valid(), "{name} {obj}: {:?}", m.validate(&ma).violations.first());
            let s = m.to_smash(&ma, &sp).unwrap();
            assert!(s.validate(&sp.algebra).is_valid(), "{name} {obj}");
            assert_eq!(HAModule::from_smash(&ma, &sp, &s).unwrap(), m);
        }
    }
}

/// For commutative `A` and cocommutative `H` both smash products coincide,
/// so objects and `A#H`-modules are the same data.
#[test]
fn commutative_cocommutative_transport() {
    let f = GaloisField::prime(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cases = [builtin_module_algebra("c2-swap", &f).unwrap(), builtin_module_algebra("c3-cycle", &f).unwrap()];
    for t in 0..20 {
        let ma = &cases[t % 2];
        let ah = ma.smash_product(SmashVariant::AH).unwrap();
        let oc = ma.smash_product(SmashVariant::OpCop).unwrap();
        let d = ah.algebra.dim();
        let x: Vec<u64> = (0..d).map(|_| rng.random_range(0..3)).collect();
        let y: Vec<u64> = (0..d).map(|_| rng.random_range(0..3)).collect();
        assert_eq!(ah.algebra.mul(&x, &y), oc.algebra.mul(&x, &y));
        let reg = Module::regular(&ah.algebra, Side::Left);
        let sub = reg.submodule(&ah.algebra, &[x.clone()]);
        let m = reg.restrict(&f, &sub);
        let obj = HAModule::from_smash(ma, &oc, &m).unwrap();
        assert!(obj.validate(ma).is_valid());
    }
}

#[test]
fn generator_systems_on_h4_adjoint() {
    let f = Rationals;
    let ma = builtin_module_algebra("h4-adjoint", &f).unwrap();
    let m = ma.regular_object();
    let (conv, hom) = m.hom_from_h(&ma).unwrap();
    assert_eq!(hom.dim(), 16);
    assert!(hom.validate(&conv).is_valid());
    let one = ma.algebra().unit().to_vec();
    assert!(hom.submodule(&conv, &[m.hat(&ma, &one)]).is_full());
    assert!(hom.submodule(&conv, &[m.tau_of(&ma, &one)]).is_full());
    // A non-generator spans a proper submodule.
    let x = vecops::unit(&f, 4, 2);
    assert!(!hom.submodule(&conv, &[m.hat(&ma, &x)]).is_full());
}

#[test]
fn sandwiches_hold() {
    let f = GaloisField::prime(3).unwrap();
    let mut total = 0;
    for name in ["c2-swap", "c2-trivial-dual-numbers", "h4-adjoint"] {
        let ma = builtin_module_algebra(name, &f).unwrap();
        for (obj, m) in default_objects(&ma, 1).unwrap().into_iter().take(4) {
            for s in random_stable_sandwiches(&ma, &m, 5, 2).unwrap() {
                assert!(s.holds, "{name} {obj}");
                total += 1;
            }
        }
    }
    assert!(total >= 50);
}

fn assert_pass(r: &crate::report::TheoremReport) {
    let fails: Vec<String> = r.failures().map(|c| alloc::format!("{}: {} -> {}", c.id, c.subject, c.conclusion)).collect();
    assert_eq!(r.status(), Status::Pass, "{fails:?}");
}

#[test]
fn drivers_pass() {
    let f = Rationals;
    let inputs = ModalgInputs::default();
    for name in ["c2-swap", "h4-adjoint-mat2", "dual-c2-graded-mat2"] {
        let ma = builtin_module_algebra(name, &f).unwrap();
        for id in MODALG_THEOREMS {
            let r = verify_modalg_theorem(id, &ma, &inputs, 4).unwrap();
            assert_pass(&r);
            assert!(!r.checks.is_empty());
        }
    }
    let adj = builtin_module_algebra("h4-adjoint", &f).unwrap();
    assert_pass(&verify_modalg_theorem("7.2", &adj, &inputs, 1).unwrap());
    assert!(matches!(verify_modalg_theorem("7.6", &adj, &inputs, 1), Err(Error::HypothesisFailure { .. })));
    let triv = builtin_module_algebra("c2-trivial-dual-numbers", &f).unwrap();
    assert!(matches!(verify_modalg_theorem("7.7", &triv, &inputs, 1), Err(Error::HypothesisFailure { .. })));
    assert!(verify_modalg_theorem("7.5", &triv, &inputs, 1).is_err());
}

#[test]
fn convolution_probe_on_dual_group_algebra() {
    let f = Rationals;
    let ma = builtin_module_algebra("c2-swap", &f).unwrap();
    let c = dual_group_algebra(&f, Group::Cyclic(2)).unwrap().coalgebra().clone();
    let b = matrix_algebra(&f, 1).unwrap();
    let inputs = ModalgInputs { coalgebra: Some(c), base: Some(b), ..Default::default() };
    let r = verify_modalg_theorem("7.1", &ma, &inputs, 8).unwrap();
    assert_pass(&r);
}
