//! The Jacobson radical.
//!
//! Characteristic 0: the radical is the kernel of the trace form
//! `(a, b) ↦ Tr ρ(ab)` for any faithful representation `ρ` (Dickson).
//!
//! Characteristic `p`: the algebra is first viewed over the prime field.
//! With `l = ⌊log_p n⌋` for a faithful representation of degree `n`, set
//! `I_{-1} = A` and
//! `I_i = { a ∈ I_{i-1} : g_i(ab) = 0 for all b }`, where
//! `g_i(x) = (Tr(x̂^{p^i}) mod p^{i+1}) / p^i` on an integer lift `x̂`.
//! Each `g_i` is linear on `I_{i-1}` and `I_l` is the radical (Rónyai;
//! Cohen–Ivanyos–Wales).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::ideal::{is_left_closed, is_right_closed, nilpotency_index};
use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{linear_kernel, vecops, Field, GaloisField, Matrix, Subspace};

/// Quotients of at most this dimension are rechecked for a zero radical in
/// positive characteristic.
const QUOTIENT_RECHECK_DIM: usize = 24;

/// Radical of `alg`, computed from the left regular representation.
pub fn radical<F: Field>(alg: &Algebra<F>) -> Result<Subspace<F::Elem>> {
    let rep: Vec<Matrix<F::Elem>> = (0..alg.dim()).map(|i| alg.left_regular(i)).collect();
    radical_with_rep(alg, &rep)
}

/// Radical of `alg` given a faithful representation (`rep[i]` is the image
/// of basis element `i`). The result is sanity-checked: it must be a
/// nilpotent two-sided ideal with semisimple quotient, otherwise the
/// computation reports [`Error::Inconclusive`].
pub fn radical_with_rep<F: Field>(alg: &Algebra<F>, rep: &[Matrix<F::Elem>]) -> Result<Subspace<F::Elem>> {
    let j = radical_unchecked(alg, rep)?;
    if !is_left_closed(alg, &j) || !is_right_closed(alg, &j) {
        return Err(Error::Inconclusive("radical candidate is not a two-sided ideal".into()));
    }
    if nilpotency_index(alg, &j).is_none() {
        return Err(Error::Inconclusive("radical candidate is not nilpotent".into()));
    }
    if !j.is_full() {
        let f = alg.field();
        let check = f.characteristic() == 0 || alg.dim() - j.dim() <= QUOTIENT_RECHECK_DIM;
        if check {
            let q = alg.quotient(&j)?;
            let qrep: Vec<Matrix<F::Elem>> = (0..q.dim()).map(|i| q.left_regular(i)).collect();
            if !radical_unchecked(&q, &qrep)?.is_zero() {
                return Err(Error::Inconclusive("quotient by the radical candidate is not semisimple".into()));
            }
        }
    }
    Ok(j)
}

pub(crate) fn radical_unchecked<F: Field>(alg: &Algebra<F>, rep: &[Matrix<F::Elem>]) -> Result<Subspace<F::Elem>> {
    let f = alg.field();
    if rep.len() != alg.dim() {
        return Err(Error::DimensionMismatch("representation size differs from the algebra dimension".into()));
    }
    if f.characteristic() == 0 {
        Ok(trace_form_kernel(alg, rep))
    } else {
        modular_radical(alg, rep)
    }
}

fn trace_form_kernel<F: Field>(alg: &Algebra<F>, rep: &[Matrix<F::Elem>]) -> Subspace<F::Elem> {
    let f = alg.field();
    let d = alg.dim();
    let traces: Vec<F::Elem> = rep.iter().map(|m| m.trace(f)).collect();
    // Row j of `t` holds Tr ρ(b_i b_j) for i = 0..d.
    let mut t = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let mut acc = f.zero();
            for (k, c) in alg.basis_product(i, j) {
                f.add_mul_assign(&mut acc, c, &traces[*k]);
            }
            t.set(j, i, acc);
        }
    }
    linear_kernel(f, &t)
}

/// Integer `n x n` matrix with entries reduced modulo `m`.
struct IntMat {
    n: usize,
    data: Vec<u64>,
}

impl IntMat {
    fn mul(&self, other: &IntMat, m: u64) -> IntMat {
        let n = self.n;
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != 0 {
                        data[i * n + j] = ((data[i * n + j] as u128 + a as u128 * b as u128) % m as u128) as u64;
                    }
                }
            }
        }
        IntMat { n, data }
    }

    fn trace(&self, m: u64) -> u64 {
        (0..self.n).fold(0u64, |acc, i| (acc + self.data[i * self.n + i]) % m)
    }

    fn pow_trace(&self, e: u64, m: u64) -> u64 {
        let mut acc: Option<IntMat> = None;
        let mut base = IntMat { n: self.n, data: self.data.iter().map(|x| x % m).collect() };
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => IntMat { n: base.n, data: base.data.clone() },
                    Some(a) => a.mul(&base, m),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, m);
            }
        }
        acc.map_or(self.n as u64 % m, |a| a.trace(m))
    }
}

/// The algebra and representation rewritten over the prime field.
struct PrimeModel {
    p: u64,
    k: usize,
    /// Representation of each prime-field basis element `α^t b_j`
    /// (index `j * k + t`), entries in `[0, p)`, size `k n`.
    rep: Vec<IntMat>,
    /// Structure constants over the prime field, dense, index
    /// `(x * dim + y) * dim + z`.
    table: Vec<u64>,
    dim: usize,
}

impl PrimeModel {
    fn build<F: Field>(alg: &Algebra<F>, rep: &[Matrix<F::Elem>]) -> Self {
        let f = alg.field();
        let p = f.characteristic();
        let k = f.degree() as usize;
        let d = alg.dim();
        let dim = d * k;
        let alpha: Vec<F::Elem> = (0..k)
            .map(|t| {
                let mut dig = vec![0u64; k];
                dig[t] = 1;
                f.from_prime_digits(&dig)
            })
            .collect();
        // Multiplication-by-e matrix over GF(p): column s = digits(e α^s).
        let mult = |e: &F::Elem| -> Vec<u64> {
            let mut m = vec![0u64; k * k];
            for (s, a) in alpha.iter().enumerate() {
                let dg = f.prime_digits(&f.mul(e, a));
                for r in 0..k {
                    m[r * k + s] = dg[r];
                }
            }
            m
        };
        let n = rep.first().map_or(0, |m| m.rows());
        let big = n * k;
        let mut prep = Vec::with_capacity(dim);
        for m in rep {
            for a in &alpha {
                let mut data = vec![0u64; big * big];
                for r in 0..n {
                    for c in 0..n {
                        let e = f.mul(a, m.get(r, c));
                        if f.is_zero(&e) {
                            continue;
                        }
                        let block = mult(&e);
                        for rr in 0..k {
                            for cc in 0..k {
                                data[(r * k + rr) * big + c * k + cc] = block[rr * k + cc];
                            }
                        }
                    }
                }
                prep.push(IntMat { n: big, data });
            }
        }
        // Structure constants: (α^s b_i)(α^t b_j) = α^{s+t} b_i b_j.
        let mut table = vec![0u64; dim * dim * dim];
        for i in 0..d {
            for j in 0..d {
                for s in 0..k {
                    for t in 0..k {
                        let st = f.mul(&alpha[s], &alpha[t]);
                        for (l, c) in alg.basis_product(i, j) {
                            let dg = f.prime_digits(&f.mul(&st, c));
                            for (u, &v) in dg.iter().enumerate() {
                                if v != 0 {
                                    let x = i * k + s;
                                    let y = j * k + t;
                                    let z = l * k + u;
                                    let slot = &mut table[(x * dim + y) * dim + z];
                                    *slot = (*slot + v) % p;
                                }
                            }
                        }
                    }
                }
            }
        }
        PrimeModel { p, k, rep: prep, table, dim }
    }

    fn product_basis(&self, a: &[u64], y: usize) -> Vec<u64> {
        let dim = self.dim;
        let mut out = vec![0u64; dim];
        for (x, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for z in 0..dim {
                let t = self.table[(x * dim + y) * dim + z];
                if t != 0 {
                    out[z] = (out[z] + c * t) % self.p;
                }
            }
        }
        out
    }

    fn rep_of(&self, a: &[u64]) -> IntMat {
        let n = self.rep[0].n;
        let mut data = vec![0u64; n * n];
        for (x, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, v) in data.iter_mut().zip(&self.rep[x].data) {
                *o = (*o + c * v) % self.p;
            }
        }
        IntMat { n, data }
    }
}

fn modular_radical<F: Field>(alg: &Algebra<F>, rep: &[Matrix<F::Elem>]) -> Result<Subspace<F::Elem>> {
    let f = alg.field();
    let model = PrimeModel::build(alg, rep);
    let p = model.p;
    let fp = GaloisField::prime(p)?;
    let dim = model.dim;
    let n = model.rep.first().map_or(1, |m| m.n) as u64;
    let mut l = 0u32;
    while p.checked_pow(l + 1).is_some_and(|v| v <= n) {
        l += 1;
    }
    let mut current = Subspace::full(&fp, dim);
    for i in 0..=l {
        if current.is_zero() {
            break;
        }
        let pi = p.pow(i);
        let modulus = p.checked_pow(i + 1).ok_or_else(|| Error::Inconclusive("modulus overflow".into()))?;
        // Column c of `g` collects g_i(u_c b_y) for y = 0..dim.
        let basis = current.basis_vectors();
        let mut g = Matrix::zeros(&fp, dim, basis.len());
        for (c, u) in basis.iter().enumerate() {
            for y in 0..dim {
                let prod = model.product_basis(u, y);
                if vecops::is_zero(&fp, &prod) {
                    continue;
                }
                let tr = model.rep_of(&prod).pow_trace(pi, modulus);
                if tr % pi != 0 {
                    return Err(Error::Inconclusive(format!("trace power not divisible by {pi}")));
                }
                g.set(y, c, (tr / pi) % p);
            }
        }
        let ker = linear_kernel(&fp, &g);
        let vs: Vec<Vec<u64>> = ker.basis().row_iter().map(|c| current.combine(&fp, c)).collect();
        current = Subspace::span(&fp, dim, &vs);
    }
    // Back to coordinates over the original field.
    let k = model.k;
    let vs: Vec<Vec<F::Elem>> = current
        .basis()
        .row_iter()
        .map(|v| (0..alg.dim()).map(|j| f.from_prime_digits(&v[j * k..(j + 1) * k])).collect())
        .collect();
    let out = Subspace::span(f, alg.dim(), &vs);
    if out.dim() * k != current.dim() {
        return Err(Error::Inconclusive("radical over the prime field is not a subspace over the ground field".into()));
    }
    Ok(out)
}
