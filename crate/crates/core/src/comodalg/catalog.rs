//! Builtin comodule algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ComoduleAlgebra;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{vecops, Field, Matrix, Subspace};
use crate::hopf::catalog::{group_algebra, sweedler_h4};
use crate::hopf::{builtin, Group};

/// Names accepted by [`builtin_comodule_algebra`]. Any Hopf catalog name
/// followed by `-regular` is accepted as well.
pub const COMODALG_CATALOG: &[&str] = &[
    "h4-regular",
    "group_algebra(C2)-regular",
    "mat2-graded",
    "kxk-dual-trivial",
    "h4-coideal-1gx",
    "c2-dual-numbers",
];

pub fn builtin_comodule_algebra<F: Field>(name: &str, f: &F) -> Result<ComoduleAlgebra<F>> {
    let name = name.trim();
    match name {
        "h4-regular" => Ok(ComoduleAlgebra::regular(&sweedler_h4(f)?).with_name(name)),
        "mat2-graded" => mat2_graded(f),
        "kxk-dual-trivial" => {
            let h = group_algebra(f, Group::Cyclic(2))?;
            Ok(ComoduleAlgebra::trivial(&field_times_dual_numbers(f)?, &h)?.with_name(name))
        }
        "h4-coideal-1gx" => {
            let h = sweedler_h4(f)?;
            let span = Subspace::span(f, 4, &[vecops::unit(f, 4, 0), vecops::unit(f, 4, 3)]);
            Ok(ComoduleAlgebra::coideal_subalgebra(&h, &span)?.0.with_name(name))
        }
        "c2-dual-numbers" => {
            let h = group_algebra(f, Group::Cyclic(2))?;
            Ok(ComoduleAlgebra::regular(&h).tensor_left(&dual_numbers(f)?)?.with_name(name))
        }
        _ => match name.strip_suffix("-regular") {
            Some(h) => Ok(ComoduleAlgebra::regular(&builtin(h, f)?).with_name(name)),
            None => Err(Error::Input(format!("unknown comodule algebra {name:?}; known: {}", COMODALG_CATALOG.join(", ")))),
        },
    }
}

/// `k × k[s]/(s²)` on the basis `u = (1,0)`, `v = (0,1)`, `s = (0,s)`.
pub fn field_times_dual_numbers<F: Field>(f: &F) -> Result<Algebra<F>> {
    let labels: Vec<String> = ["u", "v", "s"].iter().map(|s| String::from(*s)).collect();
    Algebra::from_fn(f.clone(), labels, vecops::from_i64(f, &[1, 1, 0]), |i, j| {
        let mut out = vecops::zero(f, 3);
        match (i, j) {
            (0, 0) => out[0] = f.one(),
            (1, 1) => out[1] = f.one(),
            (1, 2) | (2, 1) => out[2] = f.one(),
            _ => {}
        }
        out
    })
}

/// `k[s]/(s²)` on the basis `1, s`.
pub fn dual_numbers<F: Field>(f: &F) -> Result<Algebra<F>> {
    let labels: Vec<String> = ["1", "s"].iter().map(|s| String::from(*s)).collect();
    Algebra::from_fn(f.clone(), labels, vecops::unit(f, 2, 0), |i, j| {
        let mut out = vecops::zero(f, 2);
        if i + j < 2 {
            out[i + j] = f.one();
        }
        out
    })
}

/// `Mat_n(k)` on matrix units `E_ij` at index `i·n + j`.
pub fn matrix_algebra<F: Field>(f: &F, n: usize) -> Result<Algebra<F>> {
    let labels = (0..n * n).map(|t| format!("E{}{}", t / n + 1, t % n + 1)).collect();
    let mut unit = vecops::zero(f, n * n);
    for i in 0..n {
        unit[i * n + i] = f.one();
    }
    Algebra::from_fn(f.clone(), labels, unit, |a, b| {
        let mut out = vecops::zero(f, n * n);
        if a % n == b / n {
            out[(a / n) * n + b % n] = f.one();
        }
        out
    })
}

/// `Mat_2(k)` graded by `C2` (`deg E_ij = i + j`), as a `k[C2]`-comodule
/// algebra.
pub fn mat2_graded<F: Field>(f: &F) -> Result<ComoduleAlgebra<F>> {
    let h = group_algebra(f, Group::Cyclic(2))?;
    let a = matrix_algebra(f, 2)?;
    let mut rho = Matrix::zeros(f, 8, 4);
    for t in 0..4 {
        let deg = (t / 2 + t % 2) % 2;
        rho.set(t * 2 + deg, t, f.one());
    }
    ComoduleAlgebra::new("mat2-graded", a, h, rho)
}
