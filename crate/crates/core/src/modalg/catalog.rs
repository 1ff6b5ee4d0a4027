//! Built-in module algebras.

use alloc::format;
use alloc::vec::Vec;

use super::HModuleAlgebra;
use crate::algebra::Algebra;
use crate::comodalg::catalog::{dual_numbers, matrix_algebra};
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Matrix};
use crate::hopf::catalog::{dual_group_algebra, group_algebra, sweedler_h4};
use crate::hopf::Group;

pub const MODALG_CATALOG: &[&str] = &[
    "c2-swap",
    "c3-cycle",
    "h4-adjoint",
    "h4-adjoint-mat2",
    "dual-c2-graded-mat2",
    "c2-trivial-dual-numbers",
];

/// `k^n` on the primitive idempotents.
pub fn split_algebra<F: Field>(f: &F, n: usize) -> Result<Algebra<F>> {
    let labels = (0..n).map(|i| format!("e{}", i + 1)).collect();
    let unit = (0..n).map(|_| f.one()).collect();
    Algebra::from_fn(f.clone(), labels, unit, |i, j| if i == j { vecops::unit(f, n, i) } else { vecops::zero(f, n) })
}

/// `C_n` permuting the idempotents of `k^n` cyclically, `g·e_i = e_{i+1}`.
pub fn cyclic_permutation<F: Field>(f: &F, n: usize) -> Result<HModuleAlgebra<F>> {
    let h = group_algebra(f, Group::Cyclic(n))?;
    let a = split_algebra(f, n)?;
    let action = (0..n)
        .map(|k| {
            let mut m = Matrix::zeros(f, n, n);
            for i in 0..n {
                m.set((i + k) % n, i, f.one());
            }
            m
        })
        .collect();
    HModuleAlgebra::new(if n == 2 { "c2-swap".into() } else { format!("c{n}-cycle") }, a, h, action)
}

/// `Mat_2(k)` with `H₄` acting through `g ↦ diag(1, -1)`, `x ↦ E12`.
pub fn h4_adjoint_mat2<F: Field>(f: &F) -> Result<HModuleAlgebra<F>> {
    let h = sweedler_h4(f)?;
    let b = matrix_algebra(f, 2)?;
    let m1 = f.neg(&f.one());
    let diag = alloc::vec![f.one(), f.zero(), f.zero(), m1.clone()];
    let e12 = vecops::unit(f, 4, 1);
    let phi = alloc::vec![b.unit().to_vec(), diag.clone(), e12.clone(), b.mul(&diag, &e12)];
    HModuleAlgebra::inner("h4-adjoint-mat2", &h, &b, &phi)
}

pub fn builtin_module_algebra<F: Field>(name: &str, f: &F) -> Result<HModuleAlgebra<F>> {
    match name.trim() {
        "c2-swap" => cyclic_permutation(f, 2),
        "c3-cycle" => cyclic_permutation(f, 3),
        "h4-adjoint" => {
            let h = sweedler_h4(f)?;
            let phi: Vec<Vec<F::Elem>> = (0..4).map(|k| vecops::unit(f, 4, k)).collect();
            HModuleAlgebra::inner("h4-adjoint", &h, &h.algebra().clone(), &phi)
        }
        "h4-adjoint-mat2" => h4_adjoint_mat2(f),
        "dual-c2-graded-mat2" => {
            // p_e projects onto the diagonal, p_g onto the off-diagonal.
            let h = dual_group_algebra(f, Group::Cyclic(2))?;
            let a = matrix_algebra(f, 2)?;
            let action = (0..2)
                .map(|k| {
                    let mut m = Matrix::zeros(f, 4, 4);
                    for t in 0..4 {
                        if (t / 2 + t % 2) % 2 == k {
                            m.set(t, t, f.one());
                        }
                    }
                    m
                })
                .collect();
            HModuleAlgebra::new("dual-c2-graded-mat2", a, h, action)
        }
        "c2-trivial-dual-numbers" => {
            let h = group_algebra(f, Group::Cyclic(2))?;
            Ok(HModuleAlgebra::trivial(&dual_numbers(f)?, &h)?.with_name("c2-trivial-dual-numbers"))
        }
        other => Err(Error::Input(format!("unknown module algebra {other:?}; known: {}", MODALG_CATALOG.join(", ")))),
    }
}

