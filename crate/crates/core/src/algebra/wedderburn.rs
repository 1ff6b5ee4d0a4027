//! Wedderburn data: radical, semisimple quotient, blocks, maximal ideals and
//! simple modules.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::module::{Module, Side};
use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{linear_kernel, poly, solve_affine, vecops, Field, Matrix, Subspace};

/// Random candidates tried when looking for splitting elements.
const SPLIT_TRIES: usize = 96;

#[derive(Clone, Debug)]
pub struct WedderburnData<F: Field> {
    /// Jacobson radical `J` of `A`.
    pub radical: Subspace<F::Elem>,
    /// `S = A/J` on the non-pivot coordinates of `J`.
    pub quotient: Algebra<F>,
    /// Columns are the images in `S` of the basis of `A`.
    pub projection: Matrix<F::Elem>,
    /// Centre of `S`.
    pub center: Subspace<F::Elem>,
    /// Central primitive idempotents of `S`, in `S` coordinates.
    pub central_idempotents: Vec<Vec<F::Elem>>,
    /// `e_i S` as subspaces of `S`.
    pub block_spaces: Vec<Subspace<F::Elem>>,
    /// `e_i S` as algebras with unit `e_i`.
    pub blocks: Vec<Algebra<F>>,
    /// Maximal ideals `Q_i = {a : e_i π(a) = 0}` of `A`; `A/Q_i ≅ e_i S`.
    pub max_ideals: Vec<Subspace<F::Elem>>,
    /// A primitive idempotent of each block, in `S` coordinates.
    pub primitive_idempotents: Vec<Vec<F::Elem>>,
    /// Simple right `A`-modules `f_i S`.
    pub simple_right: Vec<Module<F::Elem>>,
    /// Simple left `A`-modules `S f_i`.
    pub simple_left: Vec<Module<F::Elem>>,
    /// `dim f_i S f_i`, the dimension of the endomorphism division algebra.
    pub division_dims: Vec<usize>,
    /// `dim e_i Z(S)`.
    pub center_dims: Vec<usize>,
    /// Length of `e_i S` as a right module: `dim e_i S / dim f_i S`.
    pub block_lengths: Vec<usize>,
}

impl<F: Field> WedderburnData<F> {
    pub fn block_count(&self) -> usize {
        self.central_idempotents.len()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn is_local(&self) -> bool {
        self.block_count() == 1 && self.block_lengths[0] == 1
    }

    pub fn simple(&self, side: Side, i: usize) -> &Module<F::Elem> {
        match side {
            Side::Left => &self.simple_left[i],
            Side::Right => &self.simple_right[i],
        }
    }

    /// Image in `S` of an element of `A`.
    pub fn project(&self, f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
        self.projection.mul_vec(f, a)
    }

    /// `A/Q_i` is a division ring.
    pub fn block_is_division(&self, i: usize) -> bool {
        self.block_lengths[i] == 1
    }
}

pub(crate) fn compute<F: Field>(alg: &Algebra<F>) -> Result<WedderburnData<F>> {
    let f = alg.field();
    let radical = super::radical::radical(alg)?;
    let s = alg.quotient(&radical)?;
    let projection = {
        let cols: Vec<Vec<F::Elem>> = (0..alg.dim()).map(|k| radical.quotient_coords(f, &alg.basis_vector(k))).collect();
        Matrix::from_rows(s.dim(), cols).transpose()
    };
    let center = s.center();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0057_4544);
    let central_idempotents = split_central(&s, &center, s.unit().to_vec(), &mut rng)?;
    let r = central_idempotents.len();
    let sum = central_idempotents.iter().fold(s.zero_vector(), |acc, e| vecops::add(f, &acc, e));
    debug_assert_eq!(sum, s.unit().to_vec());

    let mut block_spaces = Vec::with_capacity(r);
    let mut blocks = Vec::with_capacity(r);
    let mut max_ideals = Vec::with_capacity(r);
    let mut primitive_idempotents = Vec::with_capacity(r);
    let mut simple_right = Vec::with_capacity(r);
    let mut simple_left = Vec::with_capacity(r);
    let mut division_dims = Vec::with_capacity(r);
    let mut center_dims = Vec::with_capacity(r);
    let mut block_lengths = Vec::with_capacity(r);
    let s_right = Module::regular(&s, Side::Right);
    let s_left = Module::regular(&s, Side::Left);
    for e in &central_idempotents {
        let space = left_mult_span(&s, e, &Subspace::full(f, s.dim()));
        blocks.push(corner_algebra(&s, &space, e)?);
        let ez = left_mult_span(&s, e, &center);
        center_dims.push(ez.dim());
        // Q_i = kernel of a ↦ e π(a).
        let le = s.left_mul_matrix(e);
        max_ideals.push(linear_kernel(f, &le.mul(f, &projection)));
        let prim = primitive_idempotent(&s, e, ez.dim(), &mut rng)?;
        let fs = left_mult_span(&s, &prim, &Subspace::full(f, s.dim()));
        let sf = right_mult_span(&s, &prim, &Subspace::full(f, s.dim()));
        let fsf = right_mult_span(&s, &prim, &fs);
        simple_right.push(s_right.restrict(f, &fs).pullback(f, &projection));
        simple_left.push(s_left.restrict(f, &sf).pullback(f, &projection));
        division_dims.push(fsf.dim());
        if space.dim() % fs.dim() != 0 {
            return Err(Error::Inconclusive("block dimension is not a multiple of the simple dimension".into()));
        }
        block_lengths.push(space.dim() / fs.dim());
        block_spaces.push(space);
        primitive_idempotents.push(prim);
    }
    Ok(WedderburnData {
        radical,
        quotient: s,
        projection,
        center,
        central_idempotents,
        block_spaces,
        blocks,
        max_ideals,
        primitive_idempotents,
        simple_right,
        simple_left,
        division_dims,
        center_dims,
        block_lengths,
    })
}

/// `{ e x : x ∈ space }`.
fn left_mult_span<F: Field>(s: &Algebra<F>, e: &[F::Elem], space: &Subspace<F::Elem>) -> Subspace<F::Elem> {
    let vs: Vec<Vec<F::Elem>> = space.basis().row_iter().map(|x| s.mul(e, x)).collect();
    Subspace::span(s.field(), s.dim(), &vs)
}

/// `{ x e : x ∈ space }`.
fn right_mult_span<F: Field>(s: &Algebra<F>, e: &[F::Elem], space: &Subspace<F::Elem>) -> Subspace<F::Elem> {
    let vs: Vec<Vec<F::Elem>> = space.basis().row_iter().map(|x| s.mul(x, e)).collect();
    Subspace::span(s.field(), s.dim(), &vs)
}

/// The algebra structure on a two-sided ideal `space = eS` with unit `e`.
pub fn corner_algebra<F: Field>(s: &Algebra<F>, space: &Subspace<F::Elem>, e: &[F::Elem]) -> Result<Algebra<F>> {
    let f = s.field();
    let basis = space.basis_vectors();
    let m = basis.len();
    let mut table = Vec::with_capacity(m * m);
    for u in &basis {
        for v in &basis {
            let c = space
                .coordinates(f, &s.mul(u, v))
                .ok_or_else(|| Error::Input("corner is not closed under multiplication".into()))?;
            table.push(c.into_iter().enumerate().filter(|(_, x)| !f.is_zero(x)).collect());
        }
    }
    let unit = space.coordinates(f, e).ok_or_else(|| Error::Input("idempotent not in its corner".into()))?;
    let labels = basis.iter().map(|v| s.describe(v)).collect();
    Algebra::new(f.clone(), labels, table, unit)
}

/// Idempotents `u_i(x)` from the factorisation `μ = Π p_i` (pairwise
/// coprime): `u_i ≡ 1 mod p_i`, `u_i ≡ 0 mod p_j`.
fn crt_idempotents<F: Field>(s: &Algebra<F>, x: &[F::Elem], e: &[F::Elem], mu: &[F::Elem], factors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let f = s.field();
    factors
        .iter()
        .map(|p| {
            let cof = poly::divrem(f, mu, p).0;
            let (_, inv, _) = poly::ext_gcd(f, &cof, p);
            let u = poly::rem(f, &poly::mul(f, &cof, &inv), mu);
            s.eval_poly_in(&u, x, e)
        })
        .collect()
}

/// Splits the central idempotent `e` into central primitive idempotents.
fn split_central<F: Field>(
    s: &Algebra<F>,
    center: &Subspace<F::Elem>,
    e: Vec<F::Elem>,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<F::Elem>>> {
    let f = s.field();
    let ez = left_mult_span(s, &e, center);
    if ez.dim() <= 1 {
        return Ok(vec![e]);
    }
    let candidates: Vec<Vec<F::Elem>> = match f.order() {
        Some(q) => {
            // Fixed points of Frobenius: one dimension per field factor.
            let mut kb = crate::exactla::KernelBuilder::new(f, ez.dim());
            kb.impose_map(f, |c| {
                let z = ez.combine(f, c);
                vecops::sub(f, &s.pow(&z, q), &z)
            });
            let fixed = kb.into_space();
            if fixed.dim() <= 1 {
                return Ok(vec![e]);
            }
            fixed.basis().row_iter().map(|c| ez.combine(f, c)).collect()
        }
        None => {
            let mut c = ez.basis_vectors();
            for _ in 0..SPLIT_TRIES {
                let coeffs: Vec<F::Elem> = (0..ez.dim()).map(|_| f.sample(rng, 16)).collect();
                c.push(ez.combine(f, &coeffs));
            }
            c
        }
    };
    let mut unresolved = None;
    for z in candidates {
        if vecops::is_zero(f, &z) {
            continue;
        }
        let mu = s.min_poly_in(&z, &e);
        let Some(factors) = f.factor_squarefree(&mu) else {
            unresolved = Some(mu);
            continue;
        };
        if factors.len() >= 2 {
            let mut out = Vec::new();
            for u in crt_idempotents(s, &z, &e, &mu, &factors) {
                out.extend(split_central(s, center, u, rng)?);
            }
            return Ok(out);
        }
        if mu.len() - 1 == ez.dim() {
            // z generates eZ, whose minimal polynomial is irreducible: a field.
            return Ok(vec![e]);
        }
    }
    Err(Error::Inconclusive(match unresolved {
        Some(mu) => format!(
            "inconclusive-split: minimal polynomial {} of a central element could not be factored",
            poly_string(f, &mu)
        ),
        None => "inconclusive-split: no splitting element found for the centre".into(),
    }))
}

fn poly_string<F: Field>(f: &F, p: &[F::Elem]) -> alloc::string::String {
    let mut out = alloc::string::String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match i {
            0 => out.push_str(&f.format(c)),
            1 => out.push_str(&format!("{}*x", f.format(c))),
            _ => out.push_str(&format!("{}*x^{i}", f.format(c))),
        }
    }
    out
}

/// Descends from the block idempotent `e` to a primitive idempotent by
/// repeatedly replacing `f` with the left identity of a proper right ideal
/// `y (fSf)` generated by a zero divisor `y`.
fn primitive_idempotent<F: Field>(s: &Algebra<F>, e: &[F::Elem], center_dim: usize, rng: &mut ChaCha8Rng) -> Result<Vec<F::Elem>> {
    let fld = s.field();
    let full = Subspace::full(fld, s.dim());
    let mut fi = e.to_vec();
    loop {
        let corner = right_mult_span(s, &fi, &left_mult_span(s, &fi, &full));
        if corner.dim() == center_dim {
            return Ok(fi);
        }
        let mut candidates = corner.basis_vectors();
        for _ in 0..SPLIT_TRIES {
            let coeffs: Vec<F::Elem> = (0..corner.dim()).map(|_| fld.sample(rng, 16)).collect();
            candidates.push(corner.combine(fld, &coeffs));
        }
        let mut next = None;
        for x in candidates {
            if vecops::is_zero(fld, &x) {
                continue;
            }
            let mu = s.min_poly_in(&x, &fi);
            let sqf = poly::squarefree_part(fld, &mu);
            let y = if sqf.len() < mu.len() {
                s.eval_poly_in(&sqf, &x, &fi)
            } else {
                match fld.factor_squarefree(&mu) {
                    Some(fs) if fs.len() >= 2 => s.eval_poly_in(&fs[0], &x, &fi),
                    _ => continue,
                }
            };
            let r_vs: Vec<Vec<F::Elem>> = corner.basis().row_iter().map(|c| s.mul(&y, c)).collect();
            let r = Subspace::span(fld, s.dim(), &r_vs);
            if r.is_zero() || r.dim() == corner.dim() {
                continue;
            }
            next = Some(left_identity(s, &r)?);
            break;
        }
        match next {
            Some(g) => fi = g,
            None => {
                return Err(Error::Inconclusive(format!(
                    "corner algebra of dimension {} over a centre of dimension {center_dim} shows no zero divisor (possible division algebra)",
                    corner.dim()
                )))
            }
        }
    }
}

/// The idempotent `g ∈ R` with `g r = r` for all `r ∈ R`.
fn left_identity<F: Field>(s: &Algebra<F>, r: &Subspace<F::Elem>) -> Result<Vec<F::Elem>> {
    let f = s.field();
    let basis = r.basis_vectors();
    let m = basis.len();
    let d = s.dim();
    // Unknown g = Σ c_t r_t; equations Σ c_t (r_t r_j) = r_j for all j.
    let mut rows = Vec::with_capacity(m * d);
    let mut target = Vec::with_capacity(m * d);
    let prods: Vec<Vec<Vec<F::Elem>>> = basis.iter().map(|rt| basis.iter().map(|rj| s.mul(rt, rj)).collect()).collect();
    for j in 0..m {
        for k in 0..d {
            rows.push((0..m).map(|t| prods[t][j][k].clone()).collect::<Vec<_>>());
            target.push(basis[j][k].clone());
        }
    }
    let mat = Matrix::from_rows(m, rows);
    let c = solve_affine(f, &mat, &target, None)?
        .ok_or_else(|| Error::Inconclusive("right ideal has no left identity; quotient is not semisimple".into()))?;
    let g = r.combine(f, &c);
    debug_assert_eq!(s.mul(&g, &g), g);
    Ok(g)
}
