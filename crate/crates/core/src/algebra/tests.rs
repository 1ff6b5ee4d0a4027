use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::ideal::{ideal_closure, nilpotency_index};
use super::module::{hom_space, Module, Side};
use super::oracles::{is_free, is_frobenius, is_projective, is_quasi_frobenius, module_iso, top_multiplicities, Freeness};
use super::{default_labels, Algebra};
use crate::exactla::{vecops, Field, GaloisField, Matrix, Rationals, Subspace};

fn cyclic_group_algebra<F: Field>(f: F, n: usize) -> Algebra<F> {
    let mut unit = vecops::zero(&f, n);
    unit[0] = f.one();
    let one = f.one();
    let zero = f.zero();
    Algebra::from_fn(f, default_labels("g", n), unit, |i, j| {
        let mut v = vec![zero.clone(); n];
        v[(i + j) % n] = one.clone();
        v
    })
    .unwrap()
}

/// Basis 1, g, x, gx with g² = 1, x² = 0, xg = -gx.
fn sweedler<F: Field>(f: F) -> Algebra<F> {
    let idx = |a: usize, b: usize| b * 2 + a;
    let mut unit = vecops::zero(&f, 4);
    unit[0] = f.one();
    let ff = f.clone();
    Algebra::from_fn(f, vec!["1".into(), "g".into(), "x".into(), "gx".into()], unit, move |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        let mut v = vecops::zero(&ff, 4);
        if b + d < 2 {
            let sign = if b * c == 1 { ff.neg(&ff.one()) } else { ff.one() };
            v[idx((a + c) % 2, b + d)] = sign;
        }
        v
    })
    .unwrap()
}

/// Upper triangular 2x2 matrices: basis e11, e12, e22.
fn upper_triangular<F: Field>(f: F) -> Algebra<F> {
    let mut unit = vecops::zero(&f, 3);
    unit[0] = f.one();
    unit[2] = f.one();
    let ff = f.clone();
    // (r, c) pairs for each basis element.
    let rc = [(0, 0), (0, 1), (1, 1)];
    Algebra::from_fn(f, vec!["e11".into(), "e12".into(), "e22".into()], unit, move |i, j| {
        let mut v = vecops::zero(&ff, 3);
        let (a, b) = rc[i];
        let (c, d) = rc[j];
        if b == c {
            let k = rc.iter().position(|&p| p == (a, d)).unwrap();
            v[k] = ff.one();
        }
        v
    })
    .unwrap()
}

/// `k[x]/(x^n)`.
fn truncated<F: Field>(f: F, n: usize) -> Algebra<F> {
    let mut unit = vecops::zero(&f, n);
    unit[0] = f.one();
    let ff = f.clone();
    Algebra::from_fn(f, default_labels("x", n), unit, move |i, j| {
        let mut v = vecops::zero(&ff, n);
        if i + j < n {
            v[i + j] = ff.one();
        }
        v
    })
    .unwrap()
}

/// Brute-force radical over a small finite field: the set of `a` such that
/// `1 - ba` is invertible for every `b`, which is a subspace.
fn brute_radical(alg: &Algebra<GaloisField>) -> Subspace<u64> {
    let f = alg.field();
    let q = f.order().unwrap();
    let d = alg.dim();
    let all: Vec<Vec<u64>> = (0..q.pow(d as u32))
        .map(|mut k| {
            (0..d)
                .map(|_| {
                    let e = k % q;
                    k /= q;
                    e
                })
                .collect()
        })
        .collect();
    let members: Vec<Vec<u64>> = all
        .iter()
        .filter(|a| {
            all.iter().all(|b| {
                let ba = alg.mul(b, a);
                let u = vecops::sub(f, alg.unit(), &ba);
                alg.left_mul_matrix(&u).det(f) != 0
            })
        })
        .cloned()
        .collect();
    let s = Subspace::span(f, d, &members);
    assert_eq!(s.dim() as u32, (members.len() as f64).log(q as f64).round() as u32);
    s
}

#[test]
fn group_algebra_validates() {
    let a = cyclic_group_algebra(Rationals, 3);
    assert!(a.validate().is_valid());
    assert!(a.is_commutative());
    assert!(sweedler(Rationals).validate().is_valid());
    assert!(!sweedler(Rationals).is_commutative());
}

#[test]
fn broken_associativity_detected() {
    let f = Rationals;
    let a = Algebra::from_fn(f, default_labels("b", 2), vec![f.one(), f.zero()], |i, j| match (i, j) {
        (0, k) | (k, 0) => vecops::unit(&Rationals, 2, k),
        _ => vec![Rationals.one(), Rationals.one()],
    })
    .unwrap();
    assert!(a.validate().is_valid());
    let b = Algebra::from_fn(f, default_labels("b", 3), vec![f.one(), f.zero(), f.zero()], |i, j| match (i, j) {
        (0, k) | (k, 0) => vecops::unit(&Rationals, 3, k),
        (1, 1) => vecops::unit(&Rationals, 3, 2),
        (1, 2) => vecops::unit(&Rationals, 3, 1),
        _ => vecops::zero(&Rationals, 3),
    })
    .unwrap();
    let r = b.validate();
    assert!(!r.is_valid());
    assert!(r.violations.iter().any(|v| v.axiom == "associativity"));
}

#[test]
fn radical_of_group_algebras() {
    let q = cyclic_group_algebra(Rationals, 2);
    assert!(q.wedderburn().unwrap().radical.is_zero());
    let f2 = GaloisField::prime(2).unwrap();
    let a = cyclic_group_algebra(f2.clone(), 2);
    let j = &a.wedderburn().unwrap().radical;
    assert_eq!(j.dim(), 1);
    assert!(j.contains(&f2, &[1, 1]));
    let f3 = GaloisField::prime(3).unwrap();
    let c3 = cyclic_group_algebra(f3.clone(), 3);
    let j3 = &c3.wedderburn().unwrap().radical;
    assert_eq!(j3.dim(), 2);
    assert_eq!(nilpotency_index(&c3, j3), Some(3));
}

#[test]
fn radical_of_sweedler() {
    for_each_small_field(|f| {
        let h = sweedler(f.clone());
        let w = h.wedderburn().unwrap();
        assert_eq!(w.radical.dim(), 2);
        assert!(w.radical.contains(&f, &[f.zero(), f.zero(), f.one(), f.zero()]));
        assert!(w.radical.contains(&f, &[f.zero(), f.zero(), f.zero(), f.one()]));
        assert_eq!(w.block_count(), 2);
        assert_eq!(w.block_lengths, vec![1, 1]);
    });
    let h = sweedler(Rationals);
    assert_eq!(h.wedderburn().unwrap().radical.dim(), 2);
}

fn for_each_small_field(mut run: impl FnMut(GaloisField)) {
    for (p, k) in [(3, 1), (5, 1), (3, 2)] {
        run(GaloisField::new(p, k).unwrap());
    }
}

#[test]
fn radical_matches_brute_force() {
    let f2 = GaloisField::prime(2).unwrap();
    let f3 = GaloisField::prime(3).unwrap();
    let cases = vec![
        cyclic_group_algebra(f2.clone(), 4),
        cyclic_group_algebra(f3.clone(), 3),
        upper_triangular(f2.clone()),
        truncated(f3.clone(), 3),
        cyclic_group_algebra(f2.clone(), 2).tensor(&truncated(f2.clone(), 2)).unwrap(),
        sweedler(f3.clone()),
    ];
    for a in cases {
        let r = a.wedderburn().unwrap().radical.clone();
        assert_eq!(r, brute_radical(&a), "{a:?}");
    }
}

#[test]
fn ideal_closure_of_x_in_sweedler() {
    let h = sweedler(Rationals);
    let f = Rationals;
    let i = ideal_closure(&h, &[h.basis_vector(2)]);
    assert_eq!(i.dim(), 2);
    assert!(i.space.contains(&f, &h.basis_vector(3)));
    let u = ideal_closure(&h, &[h.basis_vector(1)]);
    assert!(u.space.is_full());
}

#[test]
fn wedderburn_of_semisimple_algebras() {
    let q = cyclic_group_algebra(Rationals, 3);
    let w = q.wedderburn().unwrap();
    assert!(w.is_semisimple());
    assert_eq!(w.block_count(), 2);
    let mut dd = w.division_dims.clone();
    dd.sort();
    assert_eq!(dd, vec![1, 2]);
    // Over GF(4) the cube roots of unity exist.
    let f4 = GaloisField::new(2, 2).unwrap();
    let a = cyclic_group_algebra(f4, 3);
    let w = a.wedderburn().unwrap();
    assert_eq!(w.block_count(), 3);
    assert!(w.division_dims.iter().all(|&d| d == 1));
}

#[test]
fn full_matrix_algebra_has_one_block() {
    let f3 = GaloisField::prime(3).unwrap();
    let gens = [Matrix::from_i64(&f3, &[&[0, 1], &[0, 0]]), Matrix::from_i64(&f3, &[&[0, 0], &[1, 0]])];
    let m = super::matalg::MatrixAlgebra::generated_by(&f3, 2, &gens).unwrap();
    assert_eq!(m.algebra.dim(), 4);
    let w = m.algebra.wedderburn().unwrap();
    assert_eq!(w.block_count(), 1);
    assert_eq!(w.block_lengths, vec![2]);
    assert_eq!(w.division_dims, vec![1]);
    assert!(m.radical().unwrap().is_zero());
}

#[test]
fn hom_dimensions() {
    let h = sweedler(Rationals);
    let reg = Module::regular(&h, Side::Right);
    assert_eq!(hom_space(&h, &reg, &reg).unwrap().dim(), 4);
    let w = h.wedderburn().unwrap();
    let s0 = w.simple(Side::Right, 0);
    assert_eq!(hom_space(&h, &reg, s0).unwrap().dim(), 1);
    assert_eq!(top_multiplicities(&h, &reg).unwrap(), vec![1, 1]);
}

#[test]
fn projective_and_free() {
    let h = sweedler(Rationals);
    let reg = Module::regular(&h, Side::Right);
    assert!(is_projective(&h, &reg).unwrap().is_yes());
    let w = h.wedderburn().unwrap();
    assert!(!is_projective(&h, w.simple(Side::Right, 0)).unwrap().is_yes());
    let two = reg.power(&h, 2);
    match is_free(&h, &two, 16, 1).unwrap() {
        Freeness::Free { rank, basis } => {
            assert_eq!(rank, 2);
            assert!(super::oracles::verify_free_basis(&h, &two, &basis));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn frobenius_properties() {
    let h = sweedler(Rationals);
    assert!(is_frobenius(&h, 16, 3).unwrap().is_yes());
    assert_eq!(is_quasi_frobenius(&h).unwrap(), super::oracles::QuasiFrobenius::Yes);
    let t = upper_triangular(Rationals);
    assert!(!is_frobenius(&t, 16, 3).unwrap().is_yes());
    assert!(!matches!(is_quasi_frobenius(&t).unwrap(), super::oracles::QuasiFrobenius::Yes));
    let f2 = GaloisField::prime(2).unwrap();
    assert!(is_frobenius(&truncated(f2, 3), 16, 3).unwrap().is_yes());
}

#[test]
fn isomorphism_of_regular_modules() {
    let f3 = GaloisField::prime(3).unwrap();
    let h = sweedler(f3.clone());
    let reg = Module::regular(&h, Side::Left);
    // Pull back along the automorphism g ↦ g, x ↦ 2x.
    let mut phi = Matrix::identity(&f3, 4);
    phi.set(2, 2, 2);
    phi.set(3, 3, 2);
    let twisted = reg.pullback(&f3, &phi);
    assert!(module_iso(&h, &reg, &twisted, 16, 5).unwrap().is_iso());
    let w = h.wedderburn().unwrap();
    let s = w.simple(Side::Left, 0).direct_sum(&f3, w.simple(Side::Left, 1));
    let s2 = s.direct_sum(&f3, &s);
    assert!(!module_iso(&h, &reg, &s2, 16, 5).unwrap().is_iso());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tensor_with_group_algebra_is_associative(n in 1usize..4, m in 1usize..3) {
        let a = cyclic_group_algebra(Rationals, n).tensor(&truncated(Rationals, m)).unwrap();
        prop_assert!(a.validate().is_valid());
        prop_assert_eq!(a.wedderburn().unwrap().radical.dim(), n * (m - 1));
    }

    #[test]
    fn radical_dim_of_modular_group_algebra(k in 1usize..4) {
        // GF(2)[C_{2^k}] is local with radical of codimension 1.
        let a = cyclic_group_algebra(GaloisField::prime(2).unwrap(), 1 << k);
        let w = a.wedderburn().unwrap();
        prop_assert_eq!(w.radical.dim(), (1 << k) - 1);
        prop_assert!(w.is_local());
    }

    #[test]
    fn describe_then_parse_is_identity(nums in proptest::collection::vec(-4i64..5, 4), den in 1i64..4, p in prop::sample::select(vec![3u64, 7])) {
        let labels: Vec<alloc::string::String> = ["1", "g", "x", "gx"].iter().map(|s| (*s).into()).collect();
        let q = Rationals;
        let v: Vec<_> = nums.iter().map(|&n| q.parse(&alloc::format!("{n}/{den}")).unwrap()).collect();
        prop_assert_eq!(super::parse_combination(&q, &labels, &super::describe_vector(&q, &labels, &v)).unwrap(), v);
        let f = GaloisField::new(p, 2).unwrap();
        let w: Vec<_> = nums.iter().map(|&n| f.elem_at((n.unsigned_abs() * 5 + den as u64) % f.order().unwrap())).collect();
        prop_assert_eq!(super::parse_combination(&f, &labels, &super::describe_vector(&f, &labels, &w)).unwrap(), w);
    }
}

#[test]
fn weak_finiteness_probe_is_clean() {
    use super::probe::weak_finiteness_probe;
    let r = weak_finiteness_probe(&truncated(Rationals, 1), 2, 20, 1).unwrap();
    assert!(r.is_clean());
    assert!(r.solvable >= 10);
    let f3 = GaloisField::prime(3).unwrap();
    let r = weak_finiteness_probe(&sweedler(f3.clone()), 2, 100, 7).unwrap();
    assert!(r.is_clean());
    assert!(r.solvable >= 50);
    let f2 = GaloisField::prime(2).unwrap();
    let r = weak_finiteness_probe(&cyclic_group_algebra(f2, 2), 1, 40, 3).unwrap();
    assert!(r.is_clean() && r.solvable > 0 && r.solvable < 40);
}

#[test]
fn convolution_algebras() {
    use super::probe::{convolution_algebra, weak_finiteness_probe};
    use crate::coalgebra::grouplike;
    let f = Rationals;
    let k = truncated(f.clone(), 1);
    let trivial = grouplike(&f, default_labels("e", 1)).unwrap();
    let a = convolution_algebra(&trivial, &k).unwrap();
    assert_eq!(a.dim(), 1);
    // Functions on two points.
    let two = grouplike(&f, default_labels("g", 2)).unwrap();
    let a = convolution_algebra(&two, &k).unwrap();
    assert!(a.validate().is_valid());
    assert!(a.is_commutative());
    let w = a.wedderburn().unwrap();
    assert!(w.is_semisimple());
    assert_eq!(w.block_count(), 2);

    let f3 = GaloisField::prime(3).unwrap();
    let b = cyclic_group_algebra(f3.clone(), 2);
    let c = crate::coalgebra::Coalgebra::dual_of_algebra(&b).unwrap();
    let a = convolution_algebra(&c, &b).unwrap();
    assert_eq!(a.dim(), 4);
    assert!(a.validate().is_valid());
    assert!(weak_finiteness_probe(&a, 1, 50, 11).unwrap().is_clean());
}
