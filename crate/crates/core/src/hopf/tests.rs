use alloc::vec;
use alloc::vec::Vec;

use super::catalog::{group_algebra, sweedler_h4, taft};
use super::*;
use crate::exactla::{GaloisField, Rationals};

fn f3() -> GaloisField {
    GaloisField::prime(3).unwrap()
}

#[test]
fn catalog_validates_over_several_fields() {
    for name in CATALOG {
        let h = builtin(name, &Rationals);
        if name.starts_with("taft") {
            assert!(h.is_err());
            continue;
        }
        let h = h.unwrap();
        assert!(h.validate().is_valid(), "{name} over Q: {:?}", h.validate());
    }
    let f7 = GaloisField::prime(7).unwrap();
    for name in CATALOG {
        let h = builtin(name, &f7).unwrap();
        assert!(h.validate().is_valid(), "{name} over GF(7)");
    }
}

#[test]
fn sweedler_structure() {
    let f = Rationals;
    let h = sweedler_h4(&f).unwrap();
    assert_eq!(h.dim(), 4);
    assert_eq!(h.labels(), &["1", "g", "x", "gx"]);
    assert_eq!(h.antipode_order(8), Some(4));
    // Δ(gx) = gx⊗g + 1⊗gx.
    let d = h.comult(&vecops::unit(&f, 4, 3));
    let mut expect = vec![f.zero(); 16];
    expect[3 * 4 + 1] = f.one();
    expect[3] = f.one();
    assert_eq!(d, expect);
    // s(x) = -gx and s(gx) = x.
    assert_eq!(h.apply_antipode(&vecops::unit(&f, 4, 2)), vecops::from_i64(&f, &[0, 0, 0, -1]));
    assert_eq!(h.apply_antipode(&vecops::unit(&f, 4, 3)), vecops::unit(&f, 4, 2));
    // s² is conjugation by g.
    let s2 = h.antipode().mul(&f, h.antipode());
    let g = vecops::unit(&f, 4, 1);
    for i in 0..4 {
        let b = vecops::unit(&f, 4, i);
        assert_eq!(s2.mul_vec(&f, &b), h.mul(&h.mul(&g, &b), &g));
    }
}

#[test]
fn wrong_antipode_is_reported() {
    let f = Rationals;
    let h = sweedler_h4(&f).unwrap();
    let mut s = h.antipode().clone();
    s.set(3, 2, f.zero());
    s.set(2, 2, f.one());
    let bad = h.with_parts(h.algebra().clone(), h.coalgebra().clone(), s).unwrap();
    let r = bad.validate();
    assert!(r.count("antipode left") > 0 || r.count("antipode right") > 0);
}

#[test]
fn taft_over_gf7() {
    let f7 = GaloisField::prime(7).unwrap();
    let t = taft(&f7, 3).unwrap();
    assert_eq!(t.dim(), 9);
    assert_eq!(t.notes(), &["zeta = 2"]);
    assert!(t.validate().is_valid());
    assert_eq!(t.antipode_order(10), Some(6));
    let err = taft(&GaloisField::prime(5).unwrap(), 3).unwrap_err();
    assert!(matches!(err, Error::Input(ref m) if m.contains("GF(7)")));
}

#[test]
fn group_algebra_over_gf2_is_local() {
    let f2 = GaloisField::prime(2).unwrap();
    let h = builtin("group_algebra(C2)", &f2).unwrap();
    assert_eq!(h.dim(), 2);
    assert!(h.algebra().wedderburn().unwrap().is_local());
}

#[test]
fn duals_and_involutive_antipodes() {
    let f = f3();
    for g in [Group::Cyclic(3), Group::S3] {
        let h = group_algebra(&f, g).unwrap();
        assert_eq!(h.antipode_inverse(), Some(h.antipode()));
        let d = h.dual().unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(d.dual().unwrap(), h);
    }
    let h4 = sweedler_h4(&f).unwrap();
    let back = Coalgebra::dual_of_algebra(&h4.coalgebra().dual_algebra().unwrap()).unwrap();
    assert_eq!(&back, h4.coalgebra());
    let op = h4.opposite_algebra().unwrap();
    assert!(op.validate().is_valid());
}

#[test]
fn s3_is_noncommutative() {
    let h = group_algebra(&Rationals, Group::S3).unwrap();
    assert!(!h.is_commutative());
    assert!(h.is_cocommutative());
    let d = h.dual().unwrap();
    assert!(d.is_commutative());
    assert!(!d.is_cocommutative());
}

#[test]
fn mutations_are_detected() {
    let h = sweedler_h4(&f3()).unwrap();
    let muts = single_constant_mutations(&h);
    assert_eq!(muts.len(), 64 + 4 + 64 + 4 + 16);
    let caught = muts.iter().filter(|(_, m)| !m.validate().is_valid()).count();
    assert!(caught * 100 >= muts.len() * 95, "{caught}/{}", muts.len());
}

#[test]
fn ni89b_certificate_holds() {
    for cert in [ni89b::certificate(&Rationals).unwrap(), ni89b::certificate(&f3()).unwrap()] {
        assert!(cert.holds());
        assert_eq!(cert.symbol_count, 82);
        assert_eq!(cert.entries.len(), 8);
        assert_eq!(cert.conclusion, "X right-invertible, not left-invertible");
        let e11 = &cert.entries[0];
        assert_eq!(e11.matrix, "XY - 1");
        assert_eq!(e11.vanishing.len(), 2);
        let xz21 = cert.entries.iter().find(|e| e.matrix == "XZ" && e.row == 2 && e.col == 1).unwrap();
        assert_eq!(xz21.expansion, "s(c22)c23");
        assert_eq!(xz21.vanishing.len(), 1);
    }
    let q = ni89b::certificate(&Rationals).unwrap();
    let t = ni89b::certificate(&f3()).unwrap();
    assert_eq!(q.entries, t.entries);
    assert!(matches!(ni89b::certificate(&GaloisField::prime(2).unwrap()), Err(Error::Refused(_))));
}

#[test]
fn relation_order_does_not_matter() {
    let f = Rationals;
    let rels = ni89b::relations();
    let fwd: Vec<Vec<_>> = rels.iter().map(|r| vecops::from_i64(&f, &r.vector)).collect();
    let mut rev = fwd.clone();
    rev.reverse();
    let a = crate::exactla::Subspace::span(&f, ni89b::SYMBOL_COUNT, &fwd);
    let b = crate::exactla::Subspace::span(&f, ni89b::SYMBOL_COUNT, &rev);
    assert_eq!(a, b);
}
