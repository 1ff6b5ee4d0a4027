//! Univariate polynomials over a [`Field`], stored low degree first, and the
//! factoring routines used to split centres of semisimple algebras.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{abs_int, Field, GaloisField};

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<F: Field>(f: &F, p: &[F::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !f.is_zero(c))
}

pub fn is_zero<F: Field>(f: &F, p: &[F::Elem]) -> bool {
    degree(f, p).is_none()
}

pub fn x<F: Field>(f: &F) -> Poly<F::Elem> {
    vec![f.zero(), f.one()]
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Poly<F::Elem> {
    trim(f, vec![c])
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Poly<F::Elem> {
    trim(f, a.iter().map(|x| f.mul(c, x)).collect())
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            f.add_mul_assign(&mut out[i + j], x, y);
        }
    }
    trim(f, out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let db = degree(f, b).expect("polynomial division by zero");
    let lead_inv = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = trim(f, a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (j, y) in b[..=db].iter().enumerate() {
            let t = f.mul(&c, y);
            r[shift + j] = f.sub(&r[shift + j], &t);
        }
        q[shift] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    divrem(f, a, b).1
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    match degree(f, a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(&a[d]).expect("nonzero");
            scale(f, &inv, a)
        }
    }
}

pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// Returns `(g, s, t)` with `s a + t b = g = gcd(a, b)` monic.
pub fn ext_gcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
    let (mut r0, mut r1) = (trim(f, a.to_vec()), trim(f, b.to_vec()));
    let (mut s0, mut s1) = (constant(f, f.one()), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), constant(f, f.one()));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    match degree(f, &r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = f.inv(&r0[d]).expect("nonzero");
            (scale(f, &inv, &r0), scale(f, &inv, &s0), scale(f, &inv, &t0))
        }
    }
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    if a.len() <= 1 {
        return Vec::new();
    }
    trim(f, a.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect())
}

pub fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

/// `a^e mod m`, with `e` given as little-endian `u64` limbs.
pub fn powmod_big<F: Field>(f: &F, a: &[F::Elem], e: &BigInt, m: &[F::Elem]) -> Poly<F::Elem> {
    let mut acc = rem(f, &constant(f, f.one()), m);
    let base = rem(f, a, m);
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &base, m);
        }
    }
    acc
}

pub fn powmod<F: Field>(f: &F, a: &[F::Elem], e: u64, m: &[F::Elem]) -> Poly<F::Elem> {
    powmod_big(f, a, &BigInt::from(e), m)
}

pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// Squarefree part of a monic polynomial over a perfect field.
pub fn squarefree_part<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    let a = monic(f, a);
    if degree(f, &a).unwrap_or(0) == 0 {
        return a;
    }
    let d = derivative(f, &a);
    if d.is_empty() {
        // a(x) = b(x^p); take p-th roots of the coefficients.
        let p = f.characteristic() as usize;
        let b: Vec<F::Elem> = (0..a.len())
            .step_by(p)
            .map(|i| f.pth_root(&a[i]).expect("perfect field"))
            .collect();
        return squarefree_part(f, &b);
    }
    let g = gcd(f, &a, &d);
    if degree(f, &g) == Some(0) {
        return a;
    }
    let (q, _) = divrem(f, &a, &g);
    // q holds every irreducible factor of a at least once, except factors
    // whose multiplicity is divisible by p; recurse on g for those.
    let rest = squarefree_part(f, &g);
    let extra = divrem(f, &rest, &gcd(f, &rest, &q)).0;
    monic(f, &mul(f, &q, &extra))
}

// ---------------------------------------------------------------------------
// Finite fields: distinct degree + equal degree factorisation
// ---------------------------------------------------------------------------

/// Factors a monic squarefree polynomial over `GF(q)` into monic irreducibles,
/// sorted by degree then coefficients.
pub fn factor_finite(f: &GaloisField, a: &[u64]) -> Vec<Vec<u64>> {
    let a = monic(f, a);
    let Some(da) = degree(f, &a) else {
        return Vec::new();
    };
    if da == 0 {
        return Vec::new();
    }
    let q = BigInt::from(f.q());
    let mut out = Vec::new();
    // Distinct degree factorisation.
    let mut rest = a.clone();
    let mut xq = x(f);
    let mut d = 1usize;
    while let Some(dr) = degree(f, &rest) {
        if dr < 2 * d {
            if dr > 0 {
                out.extend(equal_degree(f, &rest, dr));
            }
            break;
        }
        xq = powmod_big(f, &xq, &q, &rest);
        let g = gcd(f, &rest, &sub(f, &xq, &x(f)));
        if degree(f, &g).unwrap_or(0) > 0 {
            out.extend(equal_degree(f, &g, d));
            rest = divrem(f, &rest, &g).0;
            xq = rem(f, &xq, &rest);
        }
        d += 1;
    }
    out.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
    out
}

/// Splits a product of distinct irreducibles of degree `d` (Cantor–Zassenhaus;
/// trace map in characteristic 2).
fn equal_degree(f: &GaloisField, a: &[u64], d: usize) -> Vec<Vec<u64>> {
    let n = degree(f, a).unwrap_or(0);
    if n == d {
        return vec![monic(f, a)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + n as u64);
    let q = BigInt::from(f.q());
    loop {
        let r: Vec<u64> = (0..n).map(|_| f.sample(&mut rng, 0)).collect();
        let r = trim(f, r);
        if degree(f, &r).unwrap_or(0) == 0 {
            continue;
        }
        let b = if f.p() == 2 {
            // Absolute trace to GF(2) of GF(q^d): sum of r^(2^i).
            let m = f.k() as usize * d;
            let mut acc = Vec::new();
            let mut cur = rem(f, &r, a);
            for _ in 0..m {
                acc = add(f, &acc, &cur);
                cur = mulmod(f, &cur, &cur, a);
            }
            acc
        } else {
            let e = (q.pow(d as u32) - 1u32) / 2u32;
            sub(f, &powmod_big(f, &r, &e, a), &constant(f, 1))
        };
        let g = gcd(f, a, &b);
        let dg = degree(f, &g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(f, a, &g).0;
            let mut out = equal_degree(f, &g, d);
            out.extend(equal_degree(f, &h, d));
            return out;
        }
    }
}

// ---------------------------------------------------------------------------
// Rationals: rational roots and quadratic splitting of quartics
// ---------------------------------------------------------------------------

/// Integers above this bound are not factored by trial division.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 40;

/// All positive divisors of `n`, or `None` when `n` is too large.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = abs_int(n).to_u64().filter(|&n| n <= TRIAL_DIVISION_LIMIT)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small.into_iter().map(BigInt::from).collect())
}

/// Integer coefficients of a primitive integer multiple of `p`.
fn primitive_integer(p: &[BigRational]) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

fn to_rat(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Factors a monic squarefree rational polynomial. Linear factors are found
/// by the rational root test and quartics without roots are split into
/// quadratics when possible. Returns `None` if an unresolved factor of
/// degree at least 5 remains.
pub fn factor_rational(a: &[BigRational]) -> Option<Vec<Vec<BigRational>>> {
    let q = super::field::Rationals;
    let mut rest = monic(&q, a);
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    if degree(&q, &rest).unwrap_or(0) == 0 {
        return Some(out);
    }
    // Rational roots.
    loop {
        let d = degree(&q, &rest).unwrap_or(0);
        if d == 0 {
            break;
        }
        if rest[0].is_zero() {
            out.push(x(&q));
            rest = divrem(&q, &rest, &x(&q)).0;
            continue;
        }
        let ip = primitive_integer(&rest);
        let (Some(num), Some(den)) = (divisors(&ip[0]), divisors(&ip[d])) else {
            return None;
        };
        let mut found = None;
        'search: for nu in &num {
            for de in &den {
                for sign in [1i32, -1] {
                    let r = BigRational::new(nu * sign, de.clone());
                    if eval(&q, &rest, &r).is_zero() {
                        found = Some(r);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                let lin = vec![-r, BigRational::one()];
                rest = divrem(&q, &rest, &lin).0;
                out.push(lin);
            }
            None => break,
        }
    }
    match degree(&q, &rest).unwrap_or(0) {
        0 => {}
        1..=3 => out.push(rest),
        4 => match split_quartic(&rest) {
            Some((u, v)) => {
                out.push(u);
                out.push(v);
            }
            None => out.push(rest),
        },
        _ => return None,
    }
    out.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
    Some(out)
}

/// Splits a monic rational quartic without rational roots into two monic
/// rational quadratics, if such a splitting exists.
fn split_quartic(p: &[BigRational]) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let q = super::field::Rationals;
    // Make it monic with integer coefficients: g(y) = c^4 p(y / c).
    let c = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let g: Vec<BigInt> = (0..5)
        .map(|i| {
            let v = &p[i] * BigRational::from_integer(c.pow(4 - i as u32));
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect();
    let (g0, g1, g2, g3) = (&g[0], &g[1], &g[2], &g[3]);
    let divs = divisors(g0)?;
    for b in divs.iter().flat_map(|d| [d.clone(), -d.clone()]) {
        let d = g0 / &b;
        let mut candidates: Vec<BigInt> = Vec::new();
        if d != b {
            let num = g1 - &b * g3;
            let den = &d - &b;
            if (&num % &den).is_zero() {
                candidates.push(num / den);
            }
        } else {
            // a + c = g3, a c = g2 - 2b.
            let disc = g3 * g3 - BigInt::from(4) * (g2 - BigInt::from(2) * &b);
            if !disc.is_negative() {
                let s = disc.sqrt();
                if &s * &s == disc {
                    for r in [g3 + &s, g3 - &s] {
                        if r.is_even() {
                            candidates.push(r / 2);
                        }
                    }
                }
            }
        }
        for a in candidates {
            let cc = g3 - &a;
            if &b + &d + &a * &cc == *g2 && &a * &d + &b * &cc == *g1 {
                // Undo the substitution: factors in y = c x.
                let ci = BigRational::from_integer(c.clone());
                let u = vec![
                    BigRational::from_integer(b.clone()) / (&ci * &ci),
                    BigRational::from_integer(a.clone()) / &ci,
                    BigRational::one(),
                ];
                let v = vec![
                    BigRational::from_integer(d.clone()) / (&ci * &ci),
                    BigRational::from_integer(cc.clone()) / &ci,
                    BigRational::one(),
                ];
                debug_assert_eq!(mul(&q, &u, &v), p.to_vec());
                return Some((u, v));
            }
        }
    }
    None
}

/// Rational polynomial from integer coefficients (low degree first).
pub fn rat_poly(c: &[i64]) -> Vec<BigRational> {
    to_rat(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::Rationals;
    use proptest::prelude::*;

    #[test]
    fn divrem_and_gcd() {
        let q = Rationals;
        let a = rat_poly(&[-1, 0, 1]);
        let b = rat_poly(&[-1, 1]);
        let (qq, r) = divrem(&q, &a, &b);
        assert_eq!(qq, rat_poly(&[1, 1]));
        assert!(r.is_empty());
        assert_eq!(gcd(&q, &a, &rat_poly(&[1, 1])), rat_poly(&[1, 1]));
        let (g, s, t) = ext_gcd(&q, &rat_poly(&[1, 0, 1]), &rat_poly(&[0, 1]));
        assert_eq!(g, rat_poly(&[1]));
        assert_eq!(
            add(&q, &mul(&q, &s, &rat_poly(&[1, 0, 1])), &mul(&q, &t, &rat_poly(&[0, 1]))),
            rat_poly(&[1])
        );
    }

    #[test]
    fn rational_factoring() {
        // (x - 1)(x + 2)(x^2 + 1)
        let p = mul(&Rationals, &mul(&Rationals, &rat_poly(&[-1, 1]), &rat_poly(&[2, 1])), &rat_poly(&[1, 0, 1]));
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs, vec![rat_poly(&[-1, 1]), rat_poly(&[2, 1]), rat_poly(&[1, 0, 1])]);
        // (x^2 - 2)(x^2 + 3): quartic splitting without roots.
        let p = mul(&Rationals, &rat_poly(&[-2, 0, 1]), &rat_poly(&[3, 0, 1]));
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs, vec![rat_poly(&[-2, 0, 1]), rat_poly(&[3, 0, 1])]);
        // x^4 + 1 is irreducible over Q.
        assert_eq!(factor_rational(&rat_poly(&[1, 0, 0, 0, 1])).unwrap(), vec![rat_poly(&[1, 0, 0, 0, 1])]);
        // Quintic without rational roots is not resolved.
        assert!(factor_rational(&rat_poly(&[-2, 0, 0, 0, 0, 1])).is_none());
    }

    #[test]
    fn finite_factoring_small() {
        let f = GaloisField::prime(2).unwrap();
        // x^3 + x = x (x + 1)^2 is not squarefree; squarefree part x(x+1).
        let sf = squarefree_part(&f, &[0, 1, 0, 1]);
        assert_eq!(sf, vec![0, 1, 1]);
        // x^4 - x over GF(2) = x (x+1) (x^2+x+1)
        let fs = factor_finite(&f, &[0, 1, 0, 0, 1]);
        assert_eq!(fs, vec![vec![0, 1], vec![1, 1], vec![1, 1, 1]]);
        let f4 = GaloisField::new(2, 2).unwrap();
        // x^2 + x + 1 splits over GF(4).
        assert_eq!(factor_finite(&f4, &[1, 1, 1]).len(), 2);
    }

    fn brute_irreducible(f: &GaloisField, p: &[u64]) -> bool {
        // No monic factor of degree 1..=deg/2.
        let n = degree(f, p).unwrap();
        for d in 1..=n / 2 {
            let count = f.q().pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::new();
                let mut t = idx;
                for _ in 0..d {
                    c.push(t % f.q());
                    t /= f.q();
                }
                c.push(1);
                if rem(f, p, &c).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn finite_factors_multiply_back(p in prop::sample::select(vec![2u64, 3, 5]), coeffs in prop::collection::vec(0u64..5, 1..7)) {
            let f = GaloisField::prime(p).unwrap();
            let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
            c.push(1);
            let sf = squarefree_part(&f, &c);
            let fs = factor_finite(&f, &sf);
            let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&f, &acc, g));
            prop_assert_eq!(prod, sf);
            for g in &fs {
                prop_assert!(brute_irreducible(&f, g));
            }
        }

        #[test]
        fn rational_factors_multiply_back(roots in prop::collection::vec(-6i64..6, 0..4), quad in prop::sample::select(vec![vec![1i64, 0, 1], vec![-3, 0, 1], vec![2, 1, 1]])) {
            let q = Rationals;
            let mut rs = roots.clone();
            rs.sort();
            rs.dedup();
            let mut p = quad.iter().map(|&c| BigRational::from_integer(c.into())).collect::<Vec<_>>();
            for r in &rs {
                p = mul(&q, &p, &rat_poly(&[-r, 1]));
            }
            let p = squarefree_part(&q, &p);
            let fs = factor_rational(&p).unwrap();
            let prod = fs.iter().fold(rat_poly(&[1]), |acc, g| mul(&q, &acc, g));
            prop_assert_eq!(prod, p);
        }
    }
}
