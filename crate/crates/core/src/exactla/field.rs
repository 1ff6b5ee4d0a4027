//! Exact scalar fields: the rationals and finite fields `GF(p^k)`.
//!
//! Every structure in the crate is generic over [`Field`]. A field value is a
//! small context object (it carries the modulus and lookup tables for finite
//! fields); elements are plain values manipulated through it.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Largest field order for which extension-field log tables are built.
pub const MAX_TABLE_ORDER: u64 = 1 << 20;

/// Description of a ground field, independent of element representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    /// `GF(p^k)` with the given monic modulus (coefficients low to high).
    Galois { p: u64, k: u32, modulus: Vec<u64> },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Galois { p, k: 1, .. } => write!(f, "GF({p})"),
            FieldSpec::Galois { p, k, .. } => write!(f, "GF({p}^{k})"),
        }
    }
}

/// An exact field.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// Degree over the prime field (1 for the rationals).
    fn degree(&self) -> u32 {
        1
    }

    /// Canonical enumeration index of an element of a finite field.
    fn index_of(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }
    /// Element with a given enumeration index. For the rationals this walks
    /// `0, 1, -1, 2, -2, ...`.
    fn elem_at(&self, idx: u64) -> Self::Elem;

    /// Draws from a sample set of at least `min_size` elements (the whole
    /// field when it is finite and large enough).
    fn sample<R: RngCore + ?Sized>(&self, rng: &mut R, min_size: u64) -> Self::Elem;

    /// Size of the set [`Field::sample`] draws from.
    fn sample_set_size(&self, min_size: u64) -> u64 {
        match self.order() {
            Some(q) => q,
            None => min_size.max(2),
        }
    }

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// Factors a monic squarefree polynomial into monic irreducibles.
    /// Returns `None` if the field's factoring routine cannot decide.
    fn factor_squarefree(&self, f: &[Self::Elem]) -> Option<Vec<Vec<Self::Elem>>>;

    /// If `a` has a `p`-th root in the field (characteristic `p`), returns it.
    fn pth_root(&self, a: &Self::Elem) -> Option<Self::Elem> {
        Some(a.clone())
    }

    /// Coordinates over the prime field `GF(p)` (length [`Field::degree`]);
    /// empty in characteristic zero.
    fn prime_digits(&self, _a: &Self::Elem) -> Vec<u64> {
        Vec::new()
    }

    /// Inverse of [`Field::prime_digits`].
    fn from_prime_digits(&self, _d: &[u64]) -> Self::Elem {
        self.zero()
    }

    /// For small finite fields: an extension of order greater than
    /// `min_order` together with the images of the base elements, indexed by
    /// [`Field::index_of`].
    fn extension_for_sampling(&self, _min_order: u64) -> Option<(GaloisField, Vec<u64>)> {
        None
    }

    // -- derived operations -------------------------------------------------

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        if self.is_zero(a) || self.is_zero(b) {
            return;
        }
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Reduces `m` in place to reduced row echelon form and returns the pivot
    /// columns.
    fn rref(&self, m: &mut Matrix<Self::Elem>) -> Vec<usize> {
        gauss_jordan(self, m)
    }

    /// Exact determinant of a square matrix.
    fn det(&self, m: &Matrix<Self::Elem>) -> Self::Elem {
        gaussian_det(self, m)
    }
}

/// Plain Gauss-Jordan elimination; used by the finite fields.
pub fn gauss_jordan<F: Field + ?Sized>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..cols {
            let v = f.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || f.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..cols {
                if f.is_zero(m.get(r, j)) {
                    continue;
                }
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn gaussian_det<F: Field + ?Sized>(f: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(a.get(i, c))) else {
            return f.zero();
        };
        if p != c {
            a.swap_rows(p, c);
            det = f.neg(&det);
        }
        let piv = a.get(c, c).clone();
        det = f.mul(&det, &piv);
        let inv = f.inv(&piv).expect("nonzero pivot");
        for i in c + 1..n {
            if f.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = f.mul(a.get(i, c), &inv);
            for j in c..n {
                let v = f.sub(a.get(i, j), &f.mul(&factor, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn elem_at(&self, idx: u64) -> BigRational {
        let mag = idx.div_ceil(2) as i64;
        self.from_i64(if idx % 2 == 1 { mag } else { -mag })
    }
    fn sample<R: RngCore + ?Sized>(&self, rng: &mut R, min_size: u64) -> BigRational {
        let n = min_size.max(2);
        let v = rng.random_range(0..n) as i64 - (n / 2) as i64;
        self.from_i64(v)
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational scalar {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in scalar {s:?}")));
        }
        Ok(BigRational::new(n, d))
    }
    fn factor_squarefree(&self, f: &[BigRational]) -> Option<Vec<Vec<BigRational>>> {
        super::poly::factor_rational(f)
    }
    fn add_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *acc += a * b;
    }

    fn rref(&self, m: &mut Matrix<BigRational>) -> Vec<usize> {
        bareiss_rref(m)
    }

    fn det(&self, m: &Matrix<BigRational>) -> BigRational {
        assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
        let n = m.rows();
        if n == 0 {
            return BigRational::one();
        }
        // Clear denominators row by row, then fraction-free elimination.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<&BigRational> = (0..n).map(|j| m.get(i, j)).collect();
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        BigRational::new(sign * &a[n - 1][n - 1], scale)
    }
}

/// Fraction-free Gauss-Jordan elimination (Bareiss) for rational matrices.
///
/// Each row is first scaled to integers; every update
/// `a[i][j] <- (p * a[i][j] - a[i][c] * a[r][j]) / prev` divides exactly.
/// Rows are normalised by their pivot once at the end.
fn bareiss_rref(m: &mut Matrix<BigRational>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let l = (0..cols).fold(BigInt::one(), |acc, j| acc.lcm(m.get(i, j).denom()));
            (0..cols)
                .map(|j| {
                    let x = m.get(i, j);
                    x.numer() * (&l / x.denom())
                })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let (before, rest) = a.split_at_mut(r);
        let (prow, after) = rest.split_first_mut().expect("row r exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let factor = row[c].clone();
            if factor.is_zero() {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &piv / &prev;
                    }
                }
                continue;
            }
            for (x, y) in row.iter_mut().zip(prow.iter()) {
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                let v = &*x * &piv - &factor * y;
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                *x = v / &prev;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    for (i, row) in a.iter().enumerate() {
        if i < pivots.len() {
            let piv = &row[pivots[i]];
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, BigRational::new(x.clone(), piv.clone()));
            }
        } else {
            for j in 0..cols {
                m.set(i, j, BigRational::zero());
            }
        }
    }
    pivots
}

/// Rational number `n` as an exact `i64`, if it fits.
pub fn rational_to_i64(x: &BigRational) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Sign-aware absolute value helper used by the factoring code.
pub(crate) fn abs_int(x: &BigInt) -> BigInt {
    x.abs()
}

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

#[derive(Debug)]
struct GfTables {
    /// `exp[i] = x^i` encoded, for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[e]` for nonzero encoded `e`; `log[0]` unused.
    log: Vec<u32>,
}

/// The finite field `GF(p^k)`.
///
/// Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
/// where `c_0 + c_1 x + ...` is the polynomial representative modulo the
/// field's modulus. For `k = 1` this is the usual residue in `[0, p)`.
#[derive(Clone)]
pub struct GaloisField {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Arc<GfTables>>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for GaloisField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

impl GaloisField {
    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// `GF(p^k)` with the deterministic default modulus: the smallest
    /// primitive monic polynomial of degree `k`, ordered by coefficient
    /// vector read from `x^{k-1}` down to the constant term.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Input(format!("{p} is not a supported prime")));
        }
        if k == 0 {
            return Err(Error::Input("extension degree must be at least 1".into()));
        }
        if k == 1 {
            return Ok(GaloisField { p, k, q: p, modulus: vec![0, 1], tables: None });
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_TABLE_ORDER).ok_or_else(|| {
            Error::Input(format!("GF({p}^{k}) exceeds the supported table size"))
        })?;
        // Enumerate candidate moduli; the candidate index encodes the lower k
        // coefficients with c_{k-1} most significant.
        for idx in 0..q {
            let mut coeffs = vec![0u64; k as usize + 1];
            let mut t = idx;
            for i in (0..k as usize).rev() {
                coeffs[i] = t % p;
                t /= p;
            }
            coeffs[k as usize] = 1;
            if let Some(tables) = primitive_tables(p, k, &coeffs) {
                return Ok(GaloisField { p, k, q, modulus: coeffs, tables: Some(Arc::new(tables)) });
            }
        }
        Err(Error::Input(format!("no primitive polynomial found for GF({p}^{k})")))
    }

    /// `GF(p^k)` with a caller-supplied monic modulus, which must be primitive.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let k = modulus.len().checked_sub(1).filter(|&k| k >= 1).ok_or_else(|| {
            Error::Input("modulus must have degree at least 1".into())
        })? as u32;
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Input(format!("{p} is not a supported prime")));
        }
        if *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Input("modulus must be monic with reduced coefficients".into()));
        }
        if k == 1 {
            return Self::new(p, 1);
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_TABLE_ORDER).ok_or_else(|| {
            Error::Input(format!("GF({p}^{k}) exceeds the supported table size"))
        })?;
        let tables = primitive_tables(p, k, &modulus).ok_or_else(|| {
            Error::Input("modulus is not a primitive polynomial".into())
        })?;
        Ok(GaloisField { p, k, q, modulus, tables: Some(Arc::new(tables)) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Coefficients (low to high) of the polynomial representative.
    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut d = vec![0; self.k as usize];
        for x in d.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    pub fn from_digits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0u64, |acc, &c| acc * self.p + c % self.p)
    }

    /// The class of `x` (a generator of the multiplicative group).
    pub fn generator(&self) -> u64 {
        if self.k == 1 {
            primitive_root(self.p)
        } else {
            self.p
        }
    }
}

/// Least primitive root modulo a prime.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut n = phi;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    (2..p).find(|&g| factors.iter().all(|&f| powmod(g, phi / f, p) != 1)).expect("primitive root exists")
}

/// Builds log/exp tables if `x` generates the multiplicative group of
/// `GF(p)[x]/(modulus)`, i.e. the modulus is primitive.
fn primitive_tables(p: u64, k: u32, modulus: &[u64]) -> Option<GfTables> {
    let k = k as usize;
    let q = p.pow(k as u32);
    if modulus[0] == 0 {
        return None;
    }
    let encode = |d: &[u64]| d.iter().rev().fold(0u64, |acc, &c| acc * p + c);
    let mut cur = vec![0u64; k];
    cur[0] = 1;
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![u32::MAX; q as usize];
    for i in 0..q - 1 {
        let e = encode(&cur);
        if log[e as usize] != u32::MAX {
            return None;
        }
        log[e as usize] = i as u32;
        exp.push(e as u32);
        // multiply by x and reduce
        let top = cur[k - 1];
        for j in (1..k).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..k {
                cur[j] = (cur[j] + p - mulmod(top, modulus[j], p)) % p;
            }
        }
    }
    (encode(&cur) == 1).then_some(GfTables { exp, log })
}

impl Field for GaloisField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Galois { p: self.p, k: self.k, modulus: self.modulus.clone() }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut acc, mut place) = (*a, *b, 0u64, 1u64);
        while a > 0 || b > 0 {
            acc += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        acc
    }
    fn neg(&self, a: &u64) -> u64 {
        if self.k == 1 {
            return if *a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return *a;
        }
        let (mut a, mut acc, mut place) = (*a, 0u64, 1u64);
        while a > 0 {
            acc += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        acc
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        match &self.tables {
            None => mulmod(*a, *b, self.p),
            Some(t) => {
                let s = (t.log[*a as usize] as u64 + t.log[*b as usize] as u64) % (self.q - 1);
                t.exp[s as usize] as u64
            }
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(match &self.tables {
            None => powmod(*a, self.p - 2, self.p),
            Some(t) => {
                let l = t.log[*a as usize] as u64;
                t.exp[((self.q - 1 - l) % (self.q - 1)) as usize] as u64
            }
        })
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.q)
    }
    fn degree(&self) -> u32 {
        self.k
    }
    fn index_of(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn elem_at(&self, idx: u64) -> u64 {
        idx % self.q
    }
    fn sample<R: RngCore + ?Sized>(&self, rng: &mut R, _min_size: u64) -> u64 {
        rng.random_range(0..self.q)
    }
    fn format(&self, a: &u64) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let d: Vec<String> = self.digits(*a).iter().map(|c| c.to_string()).collect();
        format!("({})", d.join(","))
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid GF({}^{}) scalar {s:?}", self.p, self.k));
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let d: Vec<i64> = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if d.len() > self.k as usize {
                return Err(bad());
            }
            let d: Vec<u64> = d.iter().map(|&c| c.rem_euclid(self.p as i64) as u64).collect();
            return Ok(self.from_digits(&d));
        }
        if self.k == 1 {
            // Allow `a/b` in prime fields.
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let n: i64 = n.parse().map_err(|_| bad())?;
            let d: i64 = d.parse().map_err(|_| bad())?;
            let d = self.from_i64(d);
            let inv = self.inv(&d).ok_or_else(|| Error::Parse(format!("zero denominator in {s:?}")))?;
            return Ok(self.mul(&self.from_i64(n), &inv));
        }
        Err(bad())
    }
    fn factor_squarefree(&self, f: &[u64]) -> Option<Vec<Vec<u64>>> {
        Some(super::poly::factor_finite(self, f))
    }
    fn pth_root(&self, a: &u64) -> Option<u64> {
        // a^(q/p) is the p-th root in GF(q).
        Some(self.pow(a, self.q / self.p))
    }
    fn extension_for_sampling(&self, min_order: u64) -> Option<(GaloisField, Vec<u64>)> {
        extension_embedding(self, min_order)
    }
    fn prime_digits(&self, a: &u64) -> Vec<u64> {
        self.digits(*a)
    }
    fn from_prime_digits(&self, d: &[u64]) -> u64 {
        self.from_digits(d)
    }
}

/// Embedding of a small finite field into an extension of order greater than
/// `min_order`. Returns the extension and the image of every base element
/// (indexed by [`Field::index_of`]).
pub fn extension_embedding(base: &GaloisField, min_order: u64) -> Option<(GaloisField, Vec<u64>)> {
    let mut m = 2u32;
    loop {
        let deg = base.k.checked_mul(m)?;
        let order = base.p.checked_pow(deg)?;
        if order > MAX_TABLE_ORDER {
            return None;
        }
        if order > min_order {
            let ext = GaloisField::new(base.p, deg).ok()?;
            // Find a root of the base modulus in the extension.
            let root = if base.k == 1 {
                0
            } else {
                (0..ext.q).find(|&r| {
                    let mut acc = 0u64;
                    for c in base.modulus.iter().rev() {
                        acc = ext.add(&ext.mul(&acc, &r), &(*c % ext.p));
                    }
                    acc == 0
                })?
            };
            let images = (0..base.q)
                .map(|idx| {
                    if base.k == 1 {
                        return idx;
                    }
                    let d = base.digits(idx);
                    let mut acc = 0u64;
                    for c in d.iter().rev() {
                        acc = ext.add(&ext.mul(&acc, &root), c);
                    }
                    acc
                })
                .collect();
            return Some((ext, images));
        }
        m += 1;
    }
}

/// Smallest prime `p` for which `GF(p)` contains a primitive `n`-th root of
/// unity, i.e. `n | p - 1`.
pub fn smallest_prime_with_root_of_unity(n: u64) -> u64 {
    let mut p = 2;
    loop {
        if is_prime(p) && (p - 1) % n == 0 {
            return p;
        }
        p += 1;
    }
}

/// Multiplicative order of a nonzero element, by direct iteration.
pub fn multiplicative_order<F: Field>(f: &F, a: &F::Elem) -> Option<u64> {
    if f.is_zero(a) {
        return None;
    }
    let limit = f.order().map(|q| q - 1).unwrap_or(64);
    let mut cur = a.clone();
    for n in 1..=limit {
        if f.is_one(&cur) {
            return Some(n);
        }
        cur = f.mul(&cur, a);
    }
    None
}
