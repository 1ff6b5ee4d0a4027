//! Weak finiteness probing and convolution algebras.
//!
//! A ring is weakly `n`-finite when `XY = 1` in `Mat_n(R)` forces `YX = 1`.
//! Finite-dimensional algebras always are, so a recorded violation means a
//! bug somewhere below this module.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::{solve_affine, vecops, Field, Matrix};

/// `n x n` matrix over an algebra, row-major, each entry a coordinate vector.
pub type AlgMatrix<E> = Vec<Vec<E>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub algebra_dim: usize,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    /// Samples where `XY = 1` had a solution.
    pub solvable: u64,
    /// Trial indices where `XY = 1` but `YX ≠ 1`.
    pub violations: Vec<u64>,
}

impl ProbeReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn mat_mul<F: Field>(alg: &Algebra<F>, n: usize, x: &AlgMatrix<F::Elem>, y: &AlgMatrix<F::Elem>) -> AlgMatrix<F::Elem> {
    let f = alg.field();
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut acc = alg.zero_vector();
            for k in 0..n {
                acc = vecops::add(f, &acc, &alg.mul(&x[r * n + k], &y[k * n + c]));
            }
            out.push(acc);
        }
    }
    out
}

pub fn mat_identity<F: Field>(alg: &Algebra<F>, n: usize) -> AlgMatrix<F::Elem> {
    (0..n * n).map(|t| if t / n == t % n { alg.unit().to_vec() } else { alg.zero_vector() }).collect()
}

fn flatten<E: Clone>(m: &AlgMatrix<E>) -> Vec<E> {
    m.iter().flat_map(|e| e.iter().cloned()).collect()
}

/// Some `Y` with `XY = 1`, if one exists.
pub fn right_inverse<F: Field>(alg: &Algebra<F>, n: usize, x: &AlgMatrix<F::Elem>) -> Result<Option<AlgMatrix<F::Elem>>> {
    let f = alg.field();
    let d = alg.dim();
    let size = n * n * d;
    // Column (k, c, b) of Y ↦ XY is X times the matrix unit E_kc ⊗ basis b.
    let mut cols = Vec::with_capacity(size);
    for k in 0..n {
        for c in 0..n {
            for b in 0..d {
                let mut col = vecops::zero(f, size);
                for r in 0..n {
                    let prod = alg.mul_basis_right(&x[r * n + k], b);
                    col[(r * n + c) * d..(r * n + c + 1) * d].clone_from_slice(&prod);
                }
                cols.push(col);
            }
        }
    }
    let m = Matrix::from_rows(size, cols).transpose();
    let target = flatten(&mat_identity(alg, n));
    Ok(solve_affine(f, &m, &target, None)?.map(|y| y.chunks(d).map(|c| c.to_vec()).collect()))
}

fn random_element<F: Field>(alg: &Algebra<F>, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    let f = alg.field();
    (0..alg.dim()).map(|_| f.sample(rng, 5)).collect()
}

/// Samples `X`, alternating between uniformly random matrices and products
/// `LU` of unitriangular ones (always invertible), and checks that every
/// right inverse is a left inverse.
pub fn weak_finiteness_probe<F: Field>(alg: &Algebra<F>, n: usize, trials: u64, seed: u64) -> Result<ProbeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ProbeReport { algebra_dim: alg.dim(), n, trials, seed, solvable: 0, violations: Vec::new() };
    let one = mat_identity(alg, n);
    for t in 0..trials {
        let x = if t % 2 == 0 || n == 1 {
            (0..n * n).map(|_| random_element(alg, &mut rng)).collect()
        } else {
            let mut l = mat_identity(alg, n);
            let mut u = mat_identity(alg, n);
            for r in 0..n {
                for c in 0..r {
                    l[r * n + c] = random_element(alg, &mut rng);
                    u[c * n + r] = random_element(alg, &mut rng);
                }
            }
            mat_mul(alg, n, &l, &u)
        };
        if let Some(y) = right_inverse(alg, n, &x)? {
            report.solvable += 1;
            if mat_mul(alg, n, &y, &x) != one {
                report.violations.push(t);
            }
        }
    }
    Ok(report)
}

/// `Hom(C, B)` with the convolution product, modelled as `B ⊗ C*`: basis
/// element `(i, k)` at index `i·dim C + k` is the map `c_m ↦ δ_km b_i`.
pub fn convolution_algebra<F: Field>(c: &Coalgebra<F>, b: &Algebra<F>) -> Result<Algebra<F>> {
    let f = b.field();
    if c.field().spec() != f.spec() {
        return Err(Error::FieldMismatch(format!("{}", c.field().spec()), format!("{}", f.spec())));
    }
    let (dc, db) = (c.dim(), b.dim());
    let d = dc * db;
    // dual[k][l] = Σ_m Δ_m[k, l] c^m: the product of dual basis functionals.
    let mut dual = alloc::vec![alloc::vec![vecops::zero(f, dc); dc]; dc];
    for m in 0..dc {
        for (k, l, coef) in c.coproduct(m) {
            dual[*k][*l][m] = f.add(&dual[*k][*l][m], coef);
        }
    }
    let labels: Vec<String> = (0..d).map(|t| format!("{}⊗{}*", b.label(t / dc), c.label(t % dc))).collect();
    let mut unit = vecops::zero(f, d);
    for (m, e) in c.counit().iter().enumerate() {
        for (i, u) in b.unit().iter().enumerate() {
            unit[i * dc + m] = f.mul(u, e);
        }
    }
    let alg = Algebra::from_fn(f.clone(), labels, unit, |s, t| {
        let (i, k) = (s / dc, s % dc);
        let (j, l) = (t / dc, t % dc);
        let mut v = vecops::zero(f, d);
        for (p, bc) in b.basis_product(i, j) {
            for (m, cc) in dual[k][l].iter().enumerate() {
                if !f.is_zero(cc) {
                    v[p * dc + m] = f.mul(bc, cc);
                }
            }
        }
        v
    })?;
    debug_assert!(alg.validate().is_valid(), "convolution algebra failed validation");
    Ok(alg)
}
