use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::Side;
use crate::exactla::{GaloisField, Rationals};

fn labels(n: usize) -> Vec<String> {
    crate::algebra::default_labels("g", n)
}

#[test]
fn grouplike_and_matrix_coalgebras_validate() {
    let f = Rationals;
    assert!(grouplike(&f, labels(2)).unwrap().validate().is_valid());
    assert!(matrix_coalgebra(&f, 3).unwrap().validate().is_valid());
}

#[test]
fn mutated_coproduct_is_reported() {
    let f = Rationals;
    let c = matrix_coalgebra(&f, 2).unwrap();
    let mut comult: Vec<Coproduct<_>> = (0..4).map(|k| c.coproduct(k).to_vec()).collect();
    comult[1][0].2 = f.from_i64(2);
    let bad = Coalgebra::new(f, c.labels().to_vec(), comult, c.counit().to_vec()).unwrap();
    let r = bad.validate();
    assert!(!r.is_valid());
    assert!(r.violations.iter().any(|v| v.indices == vec![1]));
}

#[test]
fn duals() {
    let f = Rationals;
    let g = grouplike(&f, labels(2)).unwrap();
    let a = g.dual_algebra().unwrap();
    assert!(a.validate().is_valid());
    assert!(a.is_commutative());
    assert_eq!(a.wedderburn().unwrap().block_count(), 2);

    let m = matrix_coalgebra(&f, 3).unwrap();
    let ma = m.dual_algebra().unwrap();
    assert_eq!(ma.dim(), 9);
    let w = ma.wedderburn().unwrap();
    assert!(w.radical.is_zero());
    assert_eq!(w.block_count(), 1);
    assert_eq!(w.block_lengths, vec![3]);

    let back = Coalgebra::dual_of_algebra(&ma).unwrap();
    assert_eq!(back, m);
    assert_eq!(back.labels(), m.labels());
}

#[test]
fn coradical_of_simple_examples() {
    let f = GaloisField::prime(5).unwrap();
    let g = grouplike(&f, labels(3)).unwrap();
    let cr = g.coradical_and_simples().unwrap();
    assert!(cr.coradical.is_full());
    assert_eq!(cr.simples.len(), 3);
    assert!(cr.simples.iter().all(|s| s.dim() == 1));

    let m = matrix_coalgebra(&f, 3).unwrap();
    let cr = m.coradical_and_simples().unwrap();
    assert_eq!(cr.simples.len(), 1);
    assert!(cr.simples[0].is_full());
}

#[test]
fn quotient_by_zero_is_identity() {
    let f = Rationals;
    let m = matrix_coalgebra(&f, 2).unwrap();
    let (q, p) = m.quotient(&Subspace::zero(&f, 4)).unwrap();
    assert!(p.is_identity(&f));
    assert_eq!(q.comult_matrix(), m.comult_matrix());
}

#[test]
fn counit_kernel_is_not_a_coideal_of_matrix_coalgebra() {
    let f = Rationals;
    let m = matrix_coalgebra(&f, 2).unwrap();
    // ε vanishes on c11 - c22 but Δ(c11 - c22) is not in I⊗C + C⊗I.
    let s = Subspace::span(&f, 4, &[vecops::from_i64(&f, &[1, 0, 0, -1])]);
    assert!(m.coideal_violation(&s).is_some());
    assert!(matches!(m.quotient(&s), Err(Error::NotCoideal(_))));
    let c12 = Subspace::span(&f, 4, &[vecops::unit(&f, 4, 1)]);
    assert!(m.is_coideal(&c12));
    let (q, p) = m.quotient(&c12).unwrap();
    assert_eq!(q.dim(), 3);
    assert!(q.validate().is_valid());
    assert!(m.is_coalgebra_map(&q, &p));
}

#[test]
fn cotensor_with_regular_comodule() {
    let f = Rationals;
    let d = grouplike(&f, labels(2)).unwrap();
    // w: a left D-comodule of dimension 3: basis vectors of degrees 0, 1, 1.
    let mut lam = Matrix::zeros(&f, 6, 3);
    lam.set(0, 0, f.one());
    lam.set(3 + 1, 1, f.one());
    lam.set(3 + 2, 2, f.one());
    let w = Comodule::new(Side::Left, 3, 2, lam).unwrap();
    assert!(w.validate(&d).is_valid());
    let v = Comodule::regular(&d, Side::Right);
    let ct = cotensor(&f, &v, &w).unwrap();
    assert_eq!(ct.dim(), 3);
    let zero = Comodule::zero(&f, Side::Right, 2);
    assert!(cotensor(&f, &zero, &w).unwrap().is_zero());

    let full = Subspace::full(&f, 2);
    assert_eq!(comodule_part(&d, &w, &full).unwrap().dim(), 3);
    assert!(comodule_part(&d, &w, &Subspace::zero(&f, 2)).unwrap().is_zero());
    let first = Subspace::span(&f, 2, &[vecops::unit(&f, 2, 0)]);
    assert_eq!(comodule_part(&d, &w, &first).unwrap().dim(), 1);
}

#[test]
fn comodule_operations() {
    let f = GaloisField::prime(3).unwrap();
    let m = matrix_coalgebra(&f, 2).unwrap();
    let reg = Comodule::regular(&m, Side::Left);
    assert!(reg.validate(&m).is_valid());
    let two = reg.power(&f, 2);
    assert!(two.validate(&m).is_valid());
    assert_eq!(two.dim(), 8);
    // Columns span{c11, c21} form a left subcomodule.
    let col = Subspace::span(&f, 4, &[vecops::unit(&f, 4, 0), vecops::unit(&f, 4, 2)]);
    assert!(reg.is_subcomodule(&f, &col));
    let r = reg.restrict(&f, &col).unwrap();
    assert!(r.validate(&m).is_valid());
    let q = reg.quotient(&f, &col).unwrap();
    assert!(q.validate(&m).is_valid());
    let homs = comodule::comodule_hom_space(&f, &r, &q).unwrap();
    assert_eq!(homs.dim(), 1);
    let right = Comodule::regular(&m, Side::Right);
    assert!(right.validate(&m).is_valid());
}
