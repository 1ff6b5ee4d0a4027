//! Builtin Hopf algebras: group algebras and their duals for small groups,
//! Sweedler's four-dimensional algebra, and Taft algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{tensor_mul, HopfAlgebra};
use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::field::{multiplicative_order, smallest_prime_with_root_of_unity};
use crate::exactla::{vecops, Field, Matrix};

/// Names accepted by [`builtin`], in catalog order. `taft(n)` accepts any
/// `n ≥ 2`; `taft(3)` is listed as the representative.
pub const CATALOG: &[&str] = &[
    "group_algebra(C2)",
    "group_algebra(C3)",
    "group_algebra(C4)",
    "group_algebra(S3)",
    "dual_group_algebra(C2)",
    "dual_group_algebra(C3)",
    "dual_group_algebra(C4)",
    "dual_group_algebra(S3)",
    "sweedler_h4",
    "taft(3)",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Cyclic(usize),
    S3,
}

impl Group {
    pub fn parse(s: &str) -> Result<Group> {
        match s.trim() {
            "C2" => Ok(Group::Cyclic(2)),
            "C3" => Ok(Group::Cyclic(3)),
            "C4" => Ok(Group::Cyclic(4)),
            "S3" => Ok(Group::S3),
            other => Err(Error::Input(format!("unknown group {other:?}; expected C2, C3, C4 or S3"))),
        }
    }

    pub fn name(self) -> String {
        match self {
            Group::Cyclic(n) => format!("C{n}"),
            Group::S3 => "S3".into(),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Group::Cyclic(n) => n,
            Group::S3 => 6,
        }
    }

    /// Element labels; element 0 is the identity.
    pub fn labels(self) -> Vec<String> {
        match self {
            Group::Cyclic(n) => (0..n).map(|i| power_label("g", i)).collect(),
            // r^a s^b at index a + 3b.
            Group::S3 => (0..6)
                .map(|i| {
                    let (a, b) = (i % 3, i / 3);
                    let r = power_label("r", a);
                    match (a, b) {
                        (_, 0) => r,
                        (0, _) => "s".into(),
                        _ => format!("{r}s"),
                    }
                })
                .collect(),
        }
    }

    pub fn mul(self, x: usize, y: usize) -> usize {
        match self {
            Group::Cyclic(n) => (x + y) % n,
            Group::S3 => {
                let (a, b) = (x % 3, x / 3);
                let (c, d) = (y % 3, y / 3);
                // s r = r⁻¹ s.
                let c = if b == 1 { (3 - c) % 3 } else { c };
                (a + c) % 3 + 3 * ((b + d) % 2)
            }
        }
    }

    pub fn inverse(self, x: usize) -> usize {
        (0..self.order()).find(|&y| self.mul(x, y) == 0).expect("group element has an inverse")
    }
}

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}{e}"),
    }
}

/// Looks up a catalog entry by name.
pub fn builtin<F: Field>(name: &str, f: &F) -> Result<HopfAlgebra<F>> {
    let name = name.trim();
    if let Some(g) = strip_call(name, "group_algebra") {
        return group_algebra(f, Group::parse(g)?);
    }
    if let Some(g) = strip_call(name, "dual_group_algebra") {
        return dual_group_algebra(f, Group::parse(g)?);
    }
    if let Some(n) = strip_call(name, "taft") {
        let n: usize = n.trim().parse().map_err(|_| Error::Input(format!("taft needs an integer argument, got {n:?}")))?;
        return taft(f, n);
    }
    match name {
        "sweedler_h4" | "h4" => sweedler_h4(f),
        _ => Err(Error::Input(format!("unknown builtin {name:?}; known: {}", CATALOG.join(", ")))),
    }
}

fn strip_call<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.trim().strip_prefix('(')?.strip_suffix(')')
}

pub fn group_algebra<F: Field>(f: &F, g: Group) -> Result<HopfAlgebra<F>> {
    let n = g.order();
    let labels = g.labels();
    let unit = vecops::unit(f, n, 0);
    let algebra = Algebra::from_fn(f.clone(), labels.clone(), unit, |i, j| vecops::unit(f, n, g.mul(i, j)))?;
    let coalgebra = crate::coalgebra::grouplike(f, labels)?;
    let mut s = Matrix::zeros(f, n, n);
    for x in 0..n {
        s.set(g.inverse(x), x, f.one());
    }
    let h = HopfAlgebra::new(format!("group_algebra({})", g.name()), algebra, coalgebra, s.clone(), Some(s))?;
    Ok(h)
}

pub fn dual_group_algebra<F: Field>(f: &F, g: Group) -> Result<HopfAlgebra<F>> {
    let h = group_algebra(f, g)?.dual()?;
    let d = h.dim();
    let labels: Vec<String> = g.labels().iter().map(|l| format!("p_{l}")).collect();
    let algebra = Algebra::from_fn(f.clone(), labels.clone(), h.one(), |i, j| {
        let mut v = vecops::zero(f, d);
        for (k, c) in h.algebra().basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    })?;
    let coalgebra = Coalgebra::from_matrix(f.clone(), labels, &h.coalgebra().comult_matrix(), h.coalgebra().counit().to_vec())?;
    HopfAlgebra::new(format!("dual_group_algebra({})", g.name()), algebra, coalgebra, h.antipode().clone(), h.antipode_inverse().cloned())
}

/// Sweedler's algebra: basis `1, g, x, gx`, `g² = 1`, `x² = 0`, `xg = -gx`,
/// `Δx = x⊗1 + g⊗x`, `s(x) = -gx`.
pub fn sweedler_h4<F: Field>(f: &F) -> Result<HopfAlgebra<F>> {
    let minus_one = f.neg(&f.one());
    let h = taft_with_root(f, 2, &minus_one)?;
    Ok(HopfAlgebra { name: "sweedler_h4".into(), notes: Vec::new(), ..h })
}

/// Taft algebra of dimension `n²` with `ζ` the least primitive `n`-th root
/// of unity in element order.
pub fn taft<F: Field>(f: &F, n: usize) -> Result<HopfAlgebra<F>> {
    if n < 2 {
        return Err(Error::Input("taft(n) needs n ≥ 2".into()));
    }
    let zeta = least_primitive_root(f, n as u64).ok_or_else(|| {
        Error::Input(format!(
            "{} has no primitive {n}-th root of unity; the smallest prime field with one is GF({})",
            f.spec(),
            smallest_prime_with_root_of_unity(n as u64)
        ))
    })?;
    let h = taft_with_root(f, n, &zeta)?;
    Ok(h.with_note(format!("zeta = {}", f.format(&zeta))))
}

fn least_primitive_root<F: Field>(f: &F, n: u64) -> Option<F::Elem> {
    let q = f.order()?;
    (0..q).map(|i| f.elem_at(i)).find(|z| multiplicative_order(f, z) == Some(n))
}

/// Basis `g^a x^b` at index `a + n b`, with `g^n = 1`, `x^n = 0`,
/// `x g = ζ g x`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
fn taft_with_root<F: Field>(f: &F, n: usize, zeta: &F::Elem) -> Result<HopfAlgebra<F>> {
    let d = n * n;
    let idx = |a: usize, b: usize| a + n * b;
    let labels: Vec<String> = (0..d)
        .map(|t| {
            let (a, b) = (t % n, t / n);
            match (a, b) {
                (0, 0) => "1".into(),
                (_, 0) => power_label("g", a),
                (0, _) => power_label("x", b),
                _ => format!("{}{}", power_label("g", a), power_label("x", b)),
            }
        })
        .collect();
    let algebra = Algebra::from_fn(f.clone(), labels.clone(), vecops::unit(f, d, 0), |i, j| {
        let (a, b) = (i % n, i / n);
        let (c, e) = (j % n, j / n);
        let mut v = vecops::zero(f, d);
        if b + e < n {
            // x^b g^c = ζ^{bc} g^c x^b.
            v[idx((a + c) % n, b + e)] = f.pow(zeta, (b * c) as u64);
        }
        v
    })?;
    // Δ is the algebra map determined by the generators.
    let g = vecops::unit(f, d, idx(1, 0));
    let x = vecops::unit(f, d, idx(0, 1));
    let one = vecops::unit(f, d, 0);
    let dg = vecops::kron(f, &g, &g);
    let dx = vecops::add(f, &vecops::kron(f, &x, &one), &vecops::kron(f, &g, &x));
    let mut delta = Matrix::zeros(f, d * d, d);
    let mut s = Matrix::zeros(f, d, d);
    let g_inv = vecops::unit(f, d, idx(n - 1, 0));
    let sx = vecops::scale(f, &f.neg(&f.one()), &algebra.mul(&g_inv, &x));
    for b in 0..n {
        for a in 0..n {
            let mut t = vecops::kron(f, &one, &one);
            let mut sv = one.clone();
            for _ in 0..a {
                t = tensor_mul(&algebra, &algebra, &t, &dg);
            }
            for _ in 0..b {
                t = tensor_mul(&algebra, &algebra, &t, &dx);
            }
            // s(g^a x^b) = s(x)^b s(g)^a.
            for _ in 0..b {
                sv = algebra.mul(&sv, &sx);
            }
            for _ in 0..a {
                sv = algebra.mul(&sv, &g_inv);
            }
            let k = idx(a, b);
            for (r, c) in t.into_iter().enumerate() {
                delta.set(r, k, c);
            }
            for (r, c) in sv.into_iter().enumerate() {
                s.set(r, k, c);
            }
        }
    }
    let counit = (0..d).map(|t| if t / n == 0 { f.one() } else { f.zero() }).collect();
    let coalgebra = Coalgebra::from_matrix(f.clone(), labels, &delta, counit)?;
    let h = HopfAlgebra::new(format!("taft({n})"), algebra, coalgebra, s, None)?.with_antipode_inverse();
    Ok(h)
}
