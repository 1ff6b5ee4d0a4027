//! Searching a linear space of square matrices for an invertible member.
//!
//! The determinant of a generic member is a polynomial of degree `n` in the
//! coordinates; random evaluation on a sample set `S` misses a nonzero
//! polynomial with probability at most `n / |S|` per trial.

use alloc::format;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Largest number of base-field coordinate tuples enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Failure probability data for a randomized search that found nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissBound {
    /// Matrix size (the determinant degree).
    pub degree: u64,
    pub sample_set: u64,
    pub trials: u64,
}

impl MissBound {
    /// `(degree / sample_set)^trials`, capped at 1.
    pub fn probability(&self) -> f64 {
        let r = (self.degree as f64 / self.sample_set as f64).min(1.0);
        let mut acc = 1.0;
        for _ in 0..self.trials {
            acc *= r;
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetSearch<E> {
    /// An exactly verified invertible member and its coordinates.
    Witness { coords: Vec<E>, matrix: Matrix<E> },
    NotFound {
        /// Every member of the space was checked, or the determinant is
        /// identically zero for a structural reason; the answer is exact.
        exact: bool,
        /// Present when the conclusion rests on random sampling.
        bound: Option<MissBound>,
        /// The determinant was shown nonzero as a polynomial (over an
        /// extension field) but no base-field point was found.
        nonzero_over_extension: bool,
        trials: u64,
    },
}

impl<E> DetSearch<E> {
    pub fn is_witness(&self) -> bool {
        matches!(self, DetSearch::Witness { .. })
    }
}

fn combine<F: Field>(f: &F, n: usize, basis: &[Matrix<F::Elem>], coords: &[F::Elem]) -> Matrix<F::Elem> {
    let mut m = Matrix::zeros(f, n, n);
    for (b, c) in basis.iter().zip(coords) {
        m.add_scaled(f, c, b);
    }
    m
}

/// Looks for an invertible matrix in the span of `basis` (all `n x n`).
pub fn generic_determinant_nonzero<F: Field>(
    f: &F,
    n: usize,
    basis: &[Matrix<F::Elem>],
    trials: u64,
    seed: u64,
) -> Result<DetSearch<F::Elem>> {
    for b in basis {
        if b.rows() != n || b.cols() != n {
            return Err(Error::Input(format!(
                "determinant search needs {n}x{n} matrices, got {}x{}",
                b.rows(),
                b.cols()
            )));
        }
    }
    let not_found = |exact, bound, ext| DetSearch::NotFound { exact, bound, nonzero_over_extension: ext, trials };
    if n == 0 {
        return Ok(DetSearch::Witness { coords: Vec::new(), matrix: Matrix::zeros(f, 0, 0) });
    }
    if basis.is_empty() {
        return Ok(not_found(true, None, false));
    }
    let witness = |coords: Vec<F::Elem>| {
        let matrix = combine(f, n, basis, &coords);
        debug_assert!(!f.is_zero(&matrix.det(f)));
        DetSearch::Witness { coords, matrix }
    };
    if basis.len() == 1 {
        // det(c B) = c^n det(B): exact either way.
        return Ok(if f.is_zero(&basis[0].det(f)) { not_found(true, None, false) } else { witness(alloc::vec![f.one()]) });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_size = 2 * n as u64;
    let dim = basis.len();

    if let Some(q) = f.order().filter(|&q| q <= min_size) {
        // Small field: decide det ≢ 0 in an extension, then look for a
        // base-field point.
        let mut nonzero_poly = false;
        let mut ext_bound = None;
        if let Some((ext, images)) = f.extension_for_sampling(min_size) {
            let lifted: Vec<Matrix<u64>> = basis
                .iter()
                .map(|b| {
                    let data = b.data().iter().map(|e| images[f.index_of(e).expect("finite") as usize]).collect();
                    Matrix::from_vec(n, n, data)
                })
                .collect();
            for _ in 0..trials {
                let coords: Vec<u64> = (0..dim).map(|_| ext.sample(&mut rng, 0)).collect();
                if !ext.is_zero(&combine(&ext, n, &lifted, &coords).det(&ext)) {
                    nonzero_poly = true;
                    break;
                }
            }
            if !nonzero_poly {
                ext_bound = Some(MissBound { degree: n as u64, sample_set: ext.q(), trials });
            }
        }
        if ext_bound.is_some() {
            return Ok(not_found(false, ext_bound, false));
        }
        let total = u32::try_from(dim).ok().and_then(|d| q.checked_pow(d));
        if let Some(total) = total.filter(|&t| t <= EXHAUSTIVE_LIMIT) {
            for idx in 0..total {
                let mut t = idx;
                let coords: Vec<F::Elem> = (0..dim)
                    .map(|_| {
                        let e = f.elem_at(t % q);
                        t /= q;
                        e
                    })
                    .collect();
                if !f.is_zero(&combine(f, n, basis, &coords).det(f)) {
                    return Ok(witness(coords));
                }
            }
            return Ok(not_found(true, None, nonzero_poly));
        }
        for _ in 0..trials {
            let coords: Vec<F::Elem> = (0..dim).map(|_| f.sample(&mut rng, min_size)).collect();
            if !f.is_zero(&combine(f, n, basis, &coords).det(f)) {
                return Ok(witness(coords));
            }
        }
        return Ok(not_found(false, None, nonzero_poly));
    }

    let sample_set = f.sample_set_size(min_size);
    for _ in 0..trials {
        let coords: Vec<F::Elem> = (0..dim).map(|_| f.sample(&mut rng, min_size)).collect();
        if !f.is_zero(&combine(f, n, basis, &coords).det(f)) {
            return Ok(witness(coords));
        }
    }
    Ok(not_found(false, Some(MissBound { degree: n as u64, sample_set, trials }), false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::{GaloisField, Rationals};

    #[test]
    fn identity_span_has_witness() {
        let q = Rationals;
        let r = generic_determinant_nonzero(&q, 2, &[Matrix::identity(&q, 2)], 5, 1).unwrap();
        assert!(r.is_witness());
    }

    #[test]
    fn nilpotent_line_is_exact_not_found() {
        let q = Rationals;
        let r = generic_determinant_nonzero(&q, 2, &[Matrix::unit(&q, 2, 2, 0, 1)], 5, 1).unwrap();
        assert!(matches!(r, DetSearch::NotFound { exact: true, .. }));
    }

    #[test]
    fn diagonal_pair_found_in_one_trial() {
        let q = Rationals;
        let basis = [Matrix::identity(&q, 2), Matrix::from_i64(&q, &[&[1, 0], &[0, -1]])];
        // det(a I + b diag(1,-1)) = (a+b)(a-b), a nonzero polynomial.
        let mut hits = 0;
        for seed in 0..20 {
            if generic_determinant_nonzero(&q, 2, &basis, 1, seed).unwrap().is_witness() {
                hits += 1;
            }
        }
        assert!(hits >= 10);
        assert!(generic_determinant_nonzero(&q, 2, &basis, 20, 0).unwrap().is_witness());
    }

    #[test]
    fn small_field_uses_base_points() {
        // Over GF(2): span{I, [[0,1],[1,1]]}; det(aI + bM) = a^2 + ab + b^2,
        // nonzero at (1, 0).
        let f = GaloisField::prime(2).unwrap();
        let basis = [Matrix::identity(&f, 2), Matrix::from_i64(&f, &[&[0, 1], &[1, 1]])];
        assert!(generic_determinant_nonzero(&f, 2, &basis, 10, 3).unwrap().is_witness());
        // span{E11, E22} over GF(2): det = ab, nonzero at (1, 1).
        let basis = [Matrix::unit(&f, 2, 2, 0, 0), Matrix::unit(&f, 2, 2, 1, 1)];
        assert!(generic_determinant_nonzero(&f, 2, &basis, 10, 3).unwrap().is_witness());
    }

    #[test]
    fn vanishing_on_base_field_detected() {
        // Over GF(2), diag(a, b) + offdiag... use det = a b (a + b) style: the
        // 3x3 diagonal diag(a, b, a + b) vanishes on all of GF(2)^2 but not
        // as a polynomial.
        let f = GaloisField::prime(2).unwrap();
        let mut b1 = Matrix::zeros(&f, 3, 3);
        b1.set(0, 0, 1);
        b1.set(2, 2, 1);
        let mut b2 = Matrix::zeros(&f, 3, 3);
        b2.set(1, 1, 1);
        b2.set(2, 2, 1);
        match generic_determinant_nonzero(&f, 3, &[b1, b2], 10, 0).unwrap() {
            DetSearch::NotFound { exact, nonzero_over_extension, .. } => {
                assert!(exact);
                assert!(nonzero_over_extension);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_shape_rejected() {
        let q = Rationals;
        assert!(generic_determinant_nonzero(&q, 2, &[Matrix::zeros(&q, 2, 3)], 1, 0).is_err());
    }
}
