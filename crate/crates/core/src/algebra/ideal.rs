//! One- and two-sided ideals.

use alloc::vec::Vec;

use super::Algebra;
use crate::exactla::{Field, Subspace};

/// A subspace of an algebra together with the closure properties it has
/// been verified to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<E> {
    pub space: Subspace<E>,
    pub left_closed: bool,
    pub right_closed: bool,
}

impl<E: Clone + PartialEq> Ideal<E> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn is_two_sided(&self) -> bool {
        self.left_closed && self.right_closed
    }
}

impl<E: Clone + PartialEq> Ideal<E> {
    /// Checks the closure flags directly and records them.
    pub fn from_space<F: Field<Elem = E>>(alg: &Algebra<F>, space: Subspace<E>) -> Self {
        let left_closed = is_left_closed(alg, &space);
        let right_closed = is_right_closed(alg, &space);
        Ideal { space, left_closed, right_closed }
    }
}

pub fn is_left_closed<F: Field>(alg: &Algebra<F>, s: &Subspace<F::Elem>) -> bool {
    let f = alg.field();
    alg.generator_indices().iter().all(|&g| s.basis().row_iter().all(|v| s.contains(f, &alg.mul_basis_left(g, v))))
}

pub fn is_right_closed<F: Field>(alg: &Algebra<F>, s: &Subspace<F::Elem>) -> bool {
    let f = alg.field();
    alg.generator_indices().iter().all(|&g| s.basis().row_iter().all(|v| s.contains(f, &alg.mul_basis_right(v, g))))
}

/// Closes `seed` under left multiplication (`left`), right multiplication
/// (`right`), or both.
pub fn closure<F: Field>(alg: &Algebra<F>, seed: &[Vec<F::Elem>], left: bool, right: bool) -> Subspace<F::Elem> {
    let f = alg.field();
    let mut space = Subspace::span(f, alg.dim(), seed);
    let mut frontier = space.basis_vectors();
    let gens = alg.generator_indices();
    while !frontier.is_empty() && !space.is_full() {
        let mut new = Vec::new();
        for v in &frontier {
            for &g in gens {
                let mut cands = Vec::with_capacity(2);
                if left {
                    cands.push(alg.mul_basis_left(g, v));
                }
                if right {
                    cands.push(alg.mul_basis_right(v, g));
                }
                for w in cands {
                    if !space.contains(f, &w) {
                        space = space.add_vectors(f, core::slice::from_ref(&w));
                        new.push(w);
                    }
                }
            }
        }
        frontier = new;
    }
    space
}

/// Least two-sided ideal containing the generators.
pub fn ideal_closure<F: Field>(alg: &Algebra<F>, generators: &[Vec<F::Elem>]) -> Ideal<F::Elem> {
    let space = closure(alg, generators, true, true);
    Ideal { space, left_closed: true, right_closed: true }
}

pub fn left_ideal_closure<F: Field>(alg: &Algebra<F>, generators: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
    closure(alg, generators, true, false)
}

pub fn right_ideal_closure<F: Field>(alg: &Algebra<F>, generators: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
    closure(alg, generators, false, true)
}

/// Span of all products `x y` with `x ∈ a`, `y ∈ b`.
pub fn product<F: Field>(alg: &Algebra<F>, a: &Subspace<F::Elem>, b: &Subspace<F::Elem>) -> Subspace<F::Elem> {
    let mut vs = Vec::with_capacity(a.dim() * b.dim());
    for x in a.basis().row_iter() {
        for y in b.basis().row_iter() {
            vs.push(alg.mul(x, y));
        }
    }
    Subspace::span(alg.field(), alg.dim(), &vs)
}

/// Smallest `k ≥ 1` with `I^k = 0`, or `None` if `I` is not nilpotent.
pub fn nilpotency_index<F: Field>(alg: &Algebra<F>, i: &Subspace<F::Elem>) -> Option<usize> {
    if i.is_zero() {
        return Some(1);
    }
    let mut p = i.clone();
    for k in 1..=alg.dim() + 1 {
        if p.is_zero() {
            return Some(k);
        }
        let next = product(alg, &p, i);
        if next == p {
            return None;
        }
        p = next;
    }
    None
}
