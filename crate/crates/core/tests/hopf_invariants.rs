//! Cross-module invariants on the built-in catalog over small prime fields.

use proptest::prelude::*;

use fdhopf_core::algebra::oracles::{is_free, verify_free_basis, Freeness};
use fdhopf_core::algebra::{Module, Side};
use fdhopf_core::coideal::enumerate_coideal_subalgebras;
use fdhopf_core::exactla::{Field, GaloisField};
use fdhopf_core::fitting::fitting_ledger;
use fdhopf_core::hopf::{builtin, HopfAlgebra};

const NAMES: [&str; 5] = ["group_algebra(C3)", "group_algebra(S3)", "dual_group_algebra(S3)", "sweedler_h4", "dual_group_algebra(C4)"];

fn hopf(name: &str) -> HopfAlgebra<GaloisField> {
    builtin(name, &GaloisField::prime(5).unwrap()).unwrap()
}

fn element(h: &HopfAlgebra<GaloisField>, coords: &[u64]) -> Vec<u64> {
    (0..h.dim()).map(|i| h.field().elem_at(coords[i % coords.len()])).collect()
}

#[test]
fn catalog_duals_are_valid_and_involutive() {
    for name in NAMES {
        let h = hopf(name);
        let d = h.dual().unwrap();
        assert!(d.validate().is_valid(), "{name}");
        let dd = d.dual().unwrap();
        assert!(dd.validate().is_valid(), "{name}");
        assert_eq!(dd.algebra().dim(), h.dim());
        assert_eq!(h.is_commutative(), d.is_cocommutative(), "{name}");
    }
}

#[test]
fn regular_powers_are_free_of_their_rank() {
    for name in NAMES {
        let h = hopf(name);
        for n in 1..=2 {
            let m = Module::power(&Module::regular(h.algebra(), Side::Right), h.algebra(), n);
            match is_free(h.algebra(), &m, 32, n as u64).unwrap() {
                Freeness::Free { rank, basis } => {
                    assert_eq!(rank, n, "{name}");
                    assert!(verify_free_basis(h.algebra(), &m, &basis));
                }
                other => panic!("{name}^{n}: {other:?}"),
            }
            if h.is_commutative() && m.dim() <= 6 {
                let l = fitting_ledger(h.algebra(), &m).unwrap();
                assert!(l.fitt(n as isize - 1).is_zero() && l.fitt(n as isize).is_full(), "{name}^{n}");
            }
        }
    }
}

#[test]
fn coideal_subalgebras_divide_the_dimension() {
    for name in NAMES {
        let h = hopf(name);
        for cs in enumerate_coideal_subalgebras(&h, 5).unwrap() {
            assert_eq!(h.dim() % cs.dim(), 0, "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antipode_reverses_products(which in 0..NAMES.len(), a in prop::collection::vec(0u64..5, 1..8), b in prop::collection::vec(0u64..5, 1..8)) {
        let h = hopf(NAMES[which]);
        let (x, y) = (element(&h, &a), element(&h, &b));
        let lhs = h.apply_antipode(&h.mul(&x, &y));
        let rhs = h.mul(&h.apply_antipode(&y), &h.apply_antipode(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_multiplicative(which in 0..NAMES.len(), a in prop::collection::vec(0u64..5, 1..8), b in prop::collection::vec(0u64..5, 1..8)) {
        let h = hopf(NAMES[which]);
        let f = h.field();
        let (x, y) = (element(&h, &a), element(&h, &b));
        prop_assert_eq!(h.counit(&h.mul(&x, &y)), f.mul(&h.counit(&x), &h.counit(&y)));
    }

    #[test]
    fn comultiplication_is_multiplicative(which in 0..NAMES.len(), a in prop::collection::vec(0u64..5, 1..8), b in prop::collection::vec(0u64..5, 1..8)) {
        let h = hopf(NAMES[which]);
        let (x, y) = (element(&h, &a), element(&h, &b));
        prop_assert_eq!(h.comult(&h.mul(&x, &y)), h.tensor_mul(&h.comult(&x), &h.comult(&y)));
    }
}
