//! Symbolic certificate that a Hopf algebra containing a grouplike `g` and a
//! 3x3 matrix coalgebra `c_ij` with `g c_ij = λ_i λ_j c_ij`
//! (`λ = (1, 1, -1)`) is not weakly 2-finite.
//!
//! Only products `s(c_lt) c_ij` occur, so the computation lives in the
//! formal span of the 82 symbols `1` and `s(c_lt)c_ij`, modulo
//!
//! * `s(c_lt) c_ij = 0` whenever `λ_i λ_j ≠ λ_l λ_t`, and
//! * `Σ_i s(c_li) c_ij = δ_lj · 1`.
//!
//! With `X = [[s(c11+c13), s(c12)], [s(c21+c23), s(c22)]]`,
//! `Y = [[c11+c31, c12+c32], [c21, c22]]` and `Z = [[0, 0], [c23, 0]]` the
//! entries of `XY - 1` and `XZ` reduce to zero. Since `Z ≠ 0`, `X` has a
//! right inverse and no left inverse.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::{solve_affine, vecops, Field, Matrix, Subspace};

const LAMBDA: [i64; 3] = [1, 1, -1];
/// `1` plus `s(c_lt) c_ij` for `l, t, i, j ∈ 1..=3`.
pub const SYMBOL_COUNT: usize = 82;

/// Integer combination of `s(c_lt)` or of `c_ij`, as `(coefficient, (row, col))`
/// with 0-based indices.
type Combo = Vec<(i64, (usize, usize))>;

fn symbol_index(l: usize, t: usize, i: usize, j: usize) -> usize {
    1 + ((l * 3 + t) * 3 + i) * 3 + j
}

pub fn symbol_name(k: usize) -> String {
    if k == 0 {
        return "1".into();
    }
    let r = k - 1;
    let (l, t, i, j) = (r / 27, (r / 9) % 3, (r / 3) % 3, r % 3);
    format!("s(c{}{})c{}{}", l + 1, t + 1, i + 1, j + 1)
}

fn vanishes(l: usize, t: usize, i: usize, j: usize) -> bool {
    LAMBDA[i] * LAMBDA[j] != LAMBDA[l] * LAMBDA[t]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub vector: Vec<i64>,
}

/// Relations in the order: vanishing products (by symbol index), then the
/// nine antipode identities `(l, j)`.
pub fn relations() -> Vec<Relation> {
    let mut out = Vec::new();
    for l in 0..3 {
        for t in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    if vanishes(l, t, i, j) {
                        let mut v = vec![0i64; SYMBOL_COUNT];
                        v[symbol_index(l, t, i, j)] = 1;
                        out.push(Relation {
                            label: format!(
                                "{} = 0 since λ{}λ{} = {} ≠ {} = λ{}λ{}",
                                symbol_name(symbol_index(l, t, i, j)),
                                i + 1,
                                j + 1,
                                LAMBDA[i] * LAMBDA[j],
                                LAMBDA[l] * LAMBDA[t],
                                l + 1,
                                t + 1
                            ),
                            vector: v,
                        });
                    }
                }
            }
        }
    }
    for l in 0..3 {
        for j in 0..3 {
            let mut v = vec![0i64; SYMBOL_COUNT];
            for i in 0..3 {
                v[symbol_index(l, i, i, j)] = 1;
            }
            if l == j {
                v[0] = -1;
            }
            out.push(Relation { label: format!("Σ_i s(c{0}i)ci{1} = δ{0}{1}", l + 1, j + 1), vector: v });
        }
    }
    out
}

fn matrices() -> ([[Combo; 2]; 2], [[Combo; 2]; 2], [[Combo; 2]; 2]) {
    let x = [[vec![(1, (0, 0)), (1, (0, 2))], vec![(1, (0, 1))]], [vec![(1, (1, 0)), (1, (1, 2))], vec![(1, (1, 1))]]];
    let y = [[vec![(1, (0, 0)), (1, (2, 0))], vec![(1, (0, 1)), (1, (2, 1))]], [vec![(1, (1, 0))], vec![(1, (1, 1))]]];
    let z = [[vec![], vec![]], [vec![(1, (1, 2))], vec![]]];
    (x, y, z)
}

/// Entry `(r, c)` of `P Q` expanded in the symbol basis.
fn expand(p: &[[Combo; 2]; 2], q: &[[Combo; 2]; 2], r: usize, c: usize) -> Vec<i64> {
    let mut v = vec![0i64; SYMBOL_COUNT];
    for k in 0..2 {
        for (a, (l, t)) in &p[r][k] {
            for (b, (i, j)) in &q[k][c] {
                v[symbol_index(*l, *t, *i, *j)] += a * b;
            }
        }
    }
    v
}

fn describe(v: &[i64]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(k, c)| match c {
            1 => symbol_name(k),
            -1 => format!("-{}", symbol_name(k)),
            _ => format!("{c}*{}", symbol_name(k)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryCheck {
    /// `"XY - 1"` or `"XZ"`.
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub expansion: String,
    /// Labels of the vanishing relations that kill a term of the expansion.
    pub vanishing: Vec<String>,
    /// Antipode identities used, with their coefficients.
    pub identities: Vec<(String, String)>,
    pub reduces_to_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub field: String,
    pub symbol_count: usize,
    pub relation_count: usize,
    pub relation_rank: usize,
    pub entries: Vec<EntryCheck>,
    /// `Z` has the entry `c23`, a basis element of the matrix coalgebra.
    pub z_nonzero: String,
    pub conclusion: String,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.reduces_to_zero)
    }
}

pub fn certificate<F: Field>(f: &F) -> Result<Certificate> {
    if f.characteristic() == 2 {
        return Err(Error::Refused("the certificate needs characteristic ≠ 2 (λ3 = -1 must differ from 1)".into()));
    }
    let rels = relations();
    let lift = |v: &[i64]| vecops::from_i64(f, v);
    let rel_vecs: Vec<Vec<F::Elem>> = rels.iter().map(|r| lift(&r.vector)).collect();
    let rel_space = Subspace::span(f, SYMBOL_COUNT, &rel_vecs);
    let identities: Vec<&Relation> = rels.iter().filter(|r| r.label.starts_with('Σ')).collect();
    let (x, y, z) = matrices();
    let mut entries = Vec::new();
    for (name, q, subtract_one) in [("XY - 1", &y, true), ("XZ", &z, false)] {
        for r in 0..2 {
            for c in 0..2 {
                let mut v = expand(&x, q, r, c);
                if subtract_one && r == c {
                    v[0] -= 1;
                }
                let expansion = describe(&v);
                let mut vanishing = Vec::new();
                let mut rest = v.clone();
                for (k, coeff) in v.iter().enumerate().skip(1) {
                    if *coeff == 0 {
                        continue;
                    }
                    let s = k - 1;
                    let (l, t, i, j) = (s / 27, (s / 9) % 3, (s / 3) % 3, s % 3);
                    if vanishes(l, t, i, j) {
                        let rel = rels.iter().find(|rr| rr.vector[k] == 1 && rr.vector.iter().filter(|e| **e != 0).count() == 1).expect("vanishing relation");
                        vanishing.push(rel.label.clone());
                        rest[k] = 0;
                    }
                }
                // Express the remainder through the antipode identities.
                let rest_f = lift(&rest);
                let mut used = Vec::new();
                let mut ok = vecops::is_zero(f, &rest_f);
                if !ok {
                    let cols: Vec<Vec<F::Elem>> = identities.iter().map(|r| lift(&r.vector)).collect();
                    let m = Matrix::from_rows(SYMBOL_COUNT, cols).transpose();
                    if let Some(sol) = solve_affine(f, &m, &rest_f, None)? {
                        for (coef, rel) in sol.iter().zip(&identities) {
                            if !f.is_zero(coef) {
                                used.push((rel.label.clone(), f.format(coef)));
                            }
                        }
                        ok = true;
                    }
                }
                // Independent check against the canonical relation space.
                let in_span = rel_space.contains(f, &lift(&v));
                entries.push(EntryCheck {
                    matrix: name.into(),
                    row: r + 1,
                    col: c + 1,
                    expansion,
                    vanishing,
                    identities: used,
                    reduces_to_zero: ok && in_span,
                });
            }
        }
    }
    let holds = entries.iter().all(|e| e.reduces_to_zero);
    let cert = Certificate {
        field: format!("{}", f.spec()),
        symbol_count: SYMBOL_COUNT,
        relation_count: rels.len(),
        relation_rank: rel_space.dim(),
        entries,
        z_nonzero: "Z[2,1] = c23, a basis element of the matrix coalgebra C".into(),
        conclusion: if holds { "X right-invertible, not left-invertible".into() } else { "reduction failed".into() },
    };
    Ok(cert)
}
