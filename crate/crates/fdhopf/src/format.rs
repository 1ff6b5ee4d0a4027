//! Presentation files: JSON documents carrying structure constants as exact
//! scalar strings.
//!
//! Every index in a file is a 0-based basis index. Sparse tables list only
//! nonzero entries:
//!
//! * algebra `mul`: `[i, j, k, c]` means `b_i b_j` has coefficient `c` at `b_k`;
//! * coalgebra `comult`: `[k, i, j, c]` means `Δ(b_k)` has `c · b_i ⊗ b_j`;
//! * `antipode`: `[i, j, c]` means `S(b_j)` has coefficient `c` at `b_i`;
//! * module `action`: `[i, v, w, c]` means `b_i` sends `e_v` to `c · e_w + ...`;
//! * right coactions: `[v, w, h, c]` means `ρ(e_v)` has `c · e_w ⊗ h_h`;
//! * module algebra `action`: `[h, a, b, c]` means `h_h · b_a` has `c · b_b`.
//!
//! Nested objects may be given inline or as a `"builtin:NAME"` string.

use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use fdhopf_core::algebra::{Algebra, Module, Side};
use fdhopf_core::coalgebra::{Coalgebra, Comodule};
use fdhopf_core::comodalg::{builtin_comodule_algebra, ComoduleAlgebra, HopfModule};
use fdhopf_core::exactla::{Field, FieldSpec, GaloisField, Matrix, Subspace};
use fdhopf_core::hopf::{builtin, HopfAlgebra};
use fdhopf_core::modalg::{builtin_module_algebra, HModuleAlgebra};
use fdhopf_core::report::ValidationReport;

use crate::error::{CliError, CliResult, ParseError};

pub const FORMAT_VERSION: u32 = 1;

// ---------------------------------------------------------------------------
// Scalars and references
// ---------------------------------------------------------------------------

/// A scalar as written in a file. Syntax is checked on deserialization (so
/// errors carry a position); membership in the field is checked on build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub String);

fn check_scalar_syntax(s: &str) -> Result<(), String> {
    let t = s.trim();
    let int = |x: &str| {
        let d = x.strip_prefix('-').unwrap_or(x);
        !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())
    };
    if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        return if inner.split(',').all(|c| int(c.trim())) { Ok(()) } else { Err(format!("invalid coefficient tuple {s:?}")) };
    }
    match t.split_once('/') {
        Some((n, d)) if int(n) && int(d) => {
            if d.bytes().all(|b| b == b'0' || b == b'-') {
                Err(format!("zero denominator in scalar {s:?}"))
            } else {
                Ok(())
            }
        }
        None if int(t) => Ok(()),
        _ => Err(format!("invalid scalar {s:?} (expected an integer, \"p/q\" or a coefficient tuple)")),
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a scalar string such as \"3\", \"-1/2\" or \"(1,0)\"")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Scalar, E> {
                check_scalar_syntax(s).map_err(E::custom)?;
                Ok(Scalar(s.to_string()))
            }
        }
        d.deserialize_str(V)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// Either a catalog name (`"builtin:NAME"`) or an inline payload.
#[derive(Clone, Debug, PartialEq)]
pub enum Ref<T> {
    Builtin(String),
    Inline(Box<T>),
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Ref<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Ref<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a \"builtin:NAME\" string or an inline object")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Ref<T>, E> {
                match s.strip_prefix("builtin:") {
                    Some(n) => Ok(Ref::Builtin(n.to_string())),
                    None => Err(E::custom(format!("references must use the builtin: scheme, got {s:?}"))),
                }
            }
            fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<Ref<T>, A::Error> {
                T::deserialize(de::value::MapAccessDeserializer::new(map)).map(|t| Ref::Inline(Box::new(t)))
            }
        }
        d.deserialize_any(V(PhantomData))
    }
}

impl<T: Serialize> Serialize for Ref<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Ref::Builtin(n) => s.serialize_str(&format!("builtin:{n}")),
            Ref::Inline(t) => t.serialize(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideName {
    Left,
    Right,
}

impl From<SideName> for Side {
    fn from(s: SideName) -> Side {
        match s {
            SideName::Left => Side::Left,
            SideName::Right => Side::Right,
        }
    }
}

impl From<Side> for SideName {
    fn from(s: Side) -> SideName {
        match s {
            Side::Left => SideName::Left,
            Side::Right => SideName::Right,
        }
    }
}

// ---------------------------------------------------------------------------
// Payloads
// ---------------------------------------------------------------------------

type Entry3 = (usize, usize, Scalar);
type Entry4 = (usize, usize, usize, Scalar);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraData {
    pub labels: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mul: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraData {
    pub labels: Vec<String>,
    pub counit: Vec<Scalar>,
    pub comult: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mul: Vec<Entry4>,
    pub counit: Vec<Scalar>,
    pub comult: Vec<Entry4>,
    pub antipode: Vec<Entry3>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleAlgebraData {
    pub name: String,
    pub hopf: Ref<HopfData>,
    pub algebra: AlgebraData,
    pub coaction: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleAlgebraData {
    pub name: String,
    pub hopf: Ref<HopfData>,
    pub algebra: AlgebraData,
    pub action: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleData {
    pub algebra: Ref<AlgebraData>,
    pub side: SideName,
    pub dim: usize,
    pub action: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfModuleData {
    pub comodule_algebra: Ref<ComoduleAlgebraData>,
    pub side: SideName,
    pub dim: usize,
    pub action: Vec<Entry4>,
    pub coaction: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoidealData {
    pub hopf: Ref<HopfData>,
    /// Spanning vectors in `H`-coordinates.
    pub span: Vec<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Algebra,
    Coalgebra,
    Hopf,
    ComoduleAlgebra,
    ModuleAlgebra,
    Module,
    HopfModule,
    CoidealSubalgebra,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Hopf => "hopf",
            Kind::ComoduleAlgebra => "comodule_algebra",
            Kind::ModuleAlgebra => "module_algebra",
            Kind::Module => "module",
            Kind::HopfModule => "hopf_module",
            Kind::CoidealSubalgebra => "coideal_subalgebra",
        }
    }
}

/// A whole presentation file. Exactly the payload named by `kind` is present.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub format_version: u32,
    pub field: String,
    /// Defining polynomial of `GF(p^k)`, coefficients low to high.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<CoalgebraData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule_algebra: Option<ComoduleAlgebraData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_algebra: Option<ModuleAlgebraData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf_module: Option<HopfModuleData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coideal_subalgebra: Option<CoidealData>,
}

impl PresentationFile {
    fn empty(field: &FieldSpec, kind: Kind) -> Self {
        let modulus = match field {
            FieldSpec::Galois { k, modulus, .. } if *k > 1 => Some(modulus.clone()),
            _ => None,
        };
        PresentationFile {
            format_version: FORMAT_VERSION,
            field: field.to_string(),
            modulus,
            kind,
            algebra: None,
            coalgebra: None,
            hopf: None,
            comodule_algebra: None,
            module_algebra: None,
            module: None,
            hopf_module: None,
            coideal_subalgebra: None,
        }
    }

    fn present_kinds(&self) -> Vec<Kind> {
        let mut out = Vec::new();
        let flags = [
            (self.algebra.is_some(), Kind::Algebra),
            (self.coalgebra.is_some(), Kind::Coalgebra),
            (self.hopf.is_some(), Kind::Hopf),
            (self.comodule_algebra.is_some(), Kind::ComoduleAlgebra),
            (self.module_algebra.is_some(), Kind::ModuleAlgebra),
            (self.module.is_some(), Kind::Module),
            (self.hopf_module.is_some(), Kind::HopfModule),
            (self.coideal_subalgebra.is_some(), Kind::CoidealSubalgebra),
        ];
        for (present, k) in flags {
            if present {
                out.push(k);
            }
        }
        out
    }

    pub fn field_choice(&self) -> Result<FieldChoice, ParseError> {
        parse_field(&self.field, self.modulus.as_deref()).map_err(|m| ParseError::at("field", m))
    }

    /// Serializes to the canonical text form (two-space indentation, one
    /// table entry per line, trailing newline).
    pub fn to_text(&self) -> String {
        let v = serde_json::to_value(self).expect("presentation files serialize");
        let mut out = String::new();
        write_canonical(&v, 0, &mut out);
        out.push('\n');
        out
    }
}

/// Pretty-prints with arrays of scalars and table entries kept on one line.
fn write_canonical(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    let flat = |v: &Value| match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.as_array().is_some_and(|y| y.iter().any(|z| z.is_array() || z.is_object()))),
        Value::Object(_) => false,
        _ => true,
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            let n = m.len();
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).unwrap());
                out.push_str(": ");
                write_canonical(x, indent + 1, out);
                if i + 1 < n {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(a) if !a.is_empty() && !flat(v) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_canonical(x, indent + 1, out);
                if i + 1 < a.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        _ => out.push_str(&inline(v)),
    }
}

fn inline(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        _ => serde_json::to_string(v).unwrap(),
    }
}

/// Parses the text of a presentation file. Scalars are checked for syntax;
/// building against the field happens in [`build`].
pub fn parse_presentation(text: &str) -> Result<PresentationFile, ParseError> {
    let file: PresentationFile = serde_json::from_str(text).map_err(ParseError::from)?;
    if file.format_version != FORMAT_VERSION {
        return Err(ParseError::at("format_version", format!("unsupported format version {} (expected {FORMAT_VERSION})", file.format_version)));
    }
    let present = file.present_kinds();
    if present != [file.kind] {
        let names: Vec<&str> = present.iter().map(|k| k.name()).collect();
        return Err(ParseError::at("kind", format!("kind {:?} needs exactly the {:?} payload, found [{}]", file.kind.name(), file.kind.name(), names.join(", "))));
    }
    file.field_choice()?;
    Ok(file)
}

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum FieldChoice {
    Rationals,
    Galois(GaloisField),
}

impl FieldChoice {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldChoice::Rationals => FieldSpec::Rationals,
            FieldChoice::Galois(g) => g.spec(),
        }
    }
}

/// Accepts `Q`, `GF(p)`, `GF(p^k)` and `GF(q)` for a prime power `q`.
pub fn parse_field(s: &str, modulus: Option<&[u64]>) -> Result<FieldChoice, String> {
    let t = s.trim();
    if matches!(t, "Q" | "QQ" | "rationals") {
        if modulus.is_some() {
            return Err("a modulus only makes sense for GF(p^k)".into());
        }
        return Ok(FieldChoice::Rationals);
    }
    let inner = t
        .strip_prefix("GF(")
        .or_else(|| t.strip_prefix("F("))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("unknown field {s:?} (expected Q, GF(p) or GF(p^k))"))?;
    let num = |x: &str| x.trim().parse::<u64>().map_err(|_| format!("invalid field size in {s:?}"));
    let (p, k) = match inner.split_once('^') {
        Some((p, k)) => (num(p)?, num(k)? as u32),
        None => prime_power(num(inner)?).ok_or_else(|| format!("{inner} is not a prime power"))?,
    };
    let g = match modulus {
        Some(m) => {
            let g = GaloisField::with_modulus(p, m.to_vec()).map_err(|e| e.to_string())?;
            if g.k() != k {
                return Err(format!("modulus has degree {} but the field is GF({p}^{k})", g.k()));
            }
            g
        }
        None => GaloisField::new(p, k).map_err(|e| e.to_string())?,
    };
    Ok(FieldChoice::Galois(g))
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Runs `$body` with `$f` bound to the concrete field of a [`FieldChoice`].
#[macro_export]
macro_rules! with_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            $crate::format::FieldChoice::Rationals => {
                let $f = &fdhopf_core::exactla::Rationals;
                $body
            }
            $crate::format::FieldChoice::Galois(g) => {
                let $f = g;
                $body
            }
        }
    };
}

// ---------------------------------------------------------------------------
// Building structures
// ---------------------------------------------------------------------------

/// A built structure together with whatever it lives over.
#[derive(Clone, Debug)]
pub enum Structure<F: Field> {
    Algebra(Algebra<F>),
    Coalgebra(Coalgebra<F>),
    Hopf(HopfAlgebra<F>),
    ComoduleAlgebra(ComoduleAlgebra<F>),
    ModuleAlgebra(HModuleAlgebra<F>),
    Module(Algebra<F>, Module<F::Elem>),
    HopfModule(ComoduleAlgebra<F>, HopfModule<F::Elem>),
    CoidealSubalgebra(HopfAlgebra<F>, Subspace<F::Elem>),
}

impl<F: Field> Structure<F> {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Algebra(_) => Kind::Algebra,
            Structure::Coalgebra(_) => Kind::Coalgebra,
            Structure::Hopf(_) => Kind::Hopf,
            Structure::ComoduleAlgebra(_) => Kind::ComoduleAlgebra,
            Structure::ModuleAlgebra(_) => Kind::ModuleAlgebra,
            Structure::Module(..) => Kind::Module,
            Structure::HopfModule(..) => Kind::HopfModule,
            Structure::CoidealSubalgebra(..) => Kind::CoidealSubalgebra,
        }
    }

    /// Runs the validator of the structure and of everything it lives over.
    pub fn validate(&self) -> ValidationReport {
        match self {
            Structure::Algebra(a) => a.validate(),
            Structure::Coalgebra(c) => c.validate(),
            Structure::Hopf(h) => h.validate(),
            Structure::ComoduleAlgebra(ca) => ca.validate(),
            Structure::ModuleAlgebra(ma) => ma.validate(),
            Structure::Module(a, m) => {
                let mut r = a.validate().prefixed("algebra");
                r.extend(m.validate(a));
                r
            }
            Structure::HopfModule(ca, m) => {
                let mut r = ca.validate().prefixed("comodule_algebra");
                r.extend(m.validate(ca));
                r
            }
            Structure::CoidealSubalgebra(h, s) => {
                let mut r = h.validate().prefixed("hopf");
                if let Some(v) = fdhopf_core::coideal::coideal_violation(h, s) {
                    r.push("right coideal subalgebra", Vec::new(), v);
                }
                r
            }
        }
    }

    /// The underlying algebra, where there is one.
    pub fn algebra(&self) -> Option<&Algebra<F>> {
        match self {
            Structure::Algebra(a) | Structure::Module(a, _) => Some(a),
            Structure::Hopf(h) | Structure::CoidealSubalgebra(h, _) => Some(h.algebra()),
            Structure::ComoduleAlgebra(ca) | Structure::HopfModule(ca, _) => Some(ca.algebra()),
            Structure::ModuleAlgebra(ma) => Some(ma.algebra()),
            Structure::Coalgebra(_) => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Structure::Algebra(a) => format!("algebra of dimension {}", a.dim()),
            Structure::Coalgebra(c) => format!("coalgebra of dimension {}", c.dim()),
            Structure::Hopf(h) => format!("Hopf algebra {} of dimension {}", h.name(), h.dim()),
            Structure::ComoduleAlgebra(ca) => format!("comodule algebra {} (dim {}) over {}", ca.name(), ca.dim(), ca.hopf().name()),
            Structure::ModuleAlgebra(ma) => format!("module algebra {} (dim {}) over {}", ma.name(), ma.dim(), ma.hopf().name()),
            Structure::Module(a, m) => format!("{} module of dimension {} over an algebra of dimension {}", m.side().name(), m.dim(), a.dim()),
            Structure::HopfModule(ca, m) => format!("{} Hopf module of dimension {} over {}", m.side().name(), m.dim(), ca.name()),
            Structure::CoidealSubalgebra(h, s) => format!("subspace of dimension {} in {}", s.dim(), h.name()),
        }
    }
}

struct Ctx<'a, F: Field> {
    f: &'a F,
}

impl<F: Field> Ctx<'_, F> {
    fn scalar(&self, s: &Scalar, loc: impl Fn() -> String) -> Result<F::Elem, ParseError> {
        self.f.parse(&s.0).map_err(|e| ParseError::at(loc(), e.to_string()))
    }

    fn dense(&self, v: &[Scalar], n: usize, loc: &str) -> Result<Vec<F::Elem>, ParseError> {
        if v.len() != n {
            return Err(ParseError::at(loc, format!("expected {n} scalars, found {}", v.len())));
        }
        v.iter().enumerate().map(|(i, s)| self.scalar(s, || format!("{loc}[{i}]"))).collect()
    }

    fn bound(&self, loc: &str, idx: usize, values: &[usize], bounds: &[usize]) -> Result<(), ParseError> {
        for (v, b) in values.iter().zip(bounds) {
            if v >= b {
                return Err(ParseError::at(format!("{loc}[{idx}]"), format!("index {v} out of range (must be below {b})")));
            }
        }
        Ok(())
    }

    fn algebra(&self, d: &AlgebraData, loc: &str) -> Result<Algebra<F>, ParseError> {
        let n = d.labels.len();
        let unit = self.dense(&d.unit, n, &format!("{loc}.unit"))?;
        let mut table = vec![Vec::new(); n * n];
        let mloc = format!("{loc}.mul");
        for (t, (i, j, k, c)) in d.mul.iter().enumerate() {
            self.bound(&mloc, t, &[*i, *j, *k], &[n, n, n])?;
            table[i * n + j].push((*k, self.scalar(c, || format!("{mloc}[{t}]"))?));
        }
        Algebra::new(self.f.clone(), d.labels.clone(), table, unit).map_err(|e| ParseError::at(loc, e.to_string()))
    }

    fn coalgebra(&self, labels: &[String], counit: &[Scalar], comult: &[Entry4], loc: &str) -> Result<Coalgebra<F>, ParseError> {
        let n = labels.len();
        let eps = self.dense(counit, n, &format!("{loc}.counit"))?;
        let mut delta = vec![Vec::new(); n];
        let cloc = format!("{loc}.comult");
        for (t, (k, i, j, c)) in comult.iter().enumerate() {
            self.bound(&cloc, t, &[*k, *i, *j], &[n, n, n])?;
            delta[*k].push((*i, *j, self.scalar(c, || format!("{cloc}[{t}]"))?));
        }
        Coalgebra::new(self.f.clone(), labels.to_vec(), delta, eps).map_err(|e| ParseError::at(loc, e.to_string()))
    }

    fn matrix3(&self, rows: usize, cols: usize, entries: &[Entry3], loc: &str) -> Result<Matrix<F::Elem>, ParseError> {
        let mut m = Matrix::filled(rows, cols, self.f.zero());
        for (t, (i, j, c)) in entries.iter().enumerate() {
            self.bound(loc, t, &[*i, *j], &[rows, cols])?;
            let x = self.f.add(m.get(*i, *j), &self.scalar(c, || format!("{loc}[{t}]"))?);
            m.set(*i, *j, x);
        }
        Ok(m)
    }

    /// `[v, w, h, c]` entries into a `(dim · cdim) x dim` coaction matrix.
    fn coaction(&self, dim: usize, cdim: usize, entries: &[Entry4], loc: &str) -> Result<Matrix<F::Elem>, ParseError> {
        let e3: Vec<Entry3> = entries.iter().map(|(v, w, h, c)| (w * cdim + h, *v, c.clone())).collect();
        for (t, (v, w, h, _)) in entries.iter().enumerate() {
            self.bound(loc, t, &[*v, *w, *h], &[dim, dim, cdim])?;
        }
        self.matrix3(dim * cdim, dim, &e3, loc)
    }

    /// `[i, v, w, c]` entries into one `dim x dim` matrix per `i < count`.
    fn actions(&self, count: usize, dim: usize, entries: &[Entry4], loc: &str) -> Result<Vec<Matrix<F::Elem>>, ParseError> {
        let mut out = vec![Matrix::filled(dim, dim, self.f.zero()); count];
        for (t, (i, v, w, c)) in entries.iter().enumerate() {
            self.bound(loc, t, &[*i, *v, *w], &[count, dim, dim])?;
            let x = self.f.add(out[*i].get(*w, *v), &self.scalar(c, || format!("{loc}[{t}]"))?);
            out[*i].set(*w, *v, x);
        }
        Ok(out)
    }

    fn hopf(&self, r: &Ref<HopfData>, loc: &str) -> CliResult<HopfAlgebra<F>> {
        match r {
            Ref::Builtin(name) => Ok(builtin(name, self.f)?),
            Ref::Inline(d) => {
                let n = d.labels.len();
                let alg = self.algebra(&AlgebraData { labels: d.labels.clone(), unit: d.unit.clone(), mul: d.mul.clone() }, loc).map_err(parse_err)?;
                let coalg = self.coalgebra(&d.labels, &d.counit, &d.comult, loc).map_err(parse_err)?;
                let s = self.matrix3(n, n, &d.antipode, &format!("{loc}.antipode")).map_err(parse_err)?;
                Ok(HopfAlgebra::new(d.name.clone(), alg, coalg, s, None)?.with_antipode_inverse())
            }
        }
    }

    fn comodule_algebra(&self, r: &Ref<ComoduleAlgebraData>, loc: &str) -> CliResult<ComoduleAlgebra<F>> {
        match r {
            Ref::Builtin(name) => Ok(builtin_comodule_algebra(name, self.f)?),
            Ref::Inline(d) => {
                let h = self.hopf(&d.hopf, &format!("{loc}.hopf"))?;
                let a = self.algebra(&d.algebra, &format!("{loc}.algebra")).map_err(parse_err)?;
                let rho = self.coaction(a.dim(), h.dim(), &d.coaction, &format!("{loc}.coaction")).map_err(parse_err)?;
                Ok(ComoduleAlgebra::new(d.name.clone(), a, h, rho)?)
            }
        }
    }

    fn module_algebra(&self, r: &Ref<ModuleAlgebraData>, loc: &str) -> CliResult<HModuleAlgebra<F>> {
        match r {
            Ref::Builtin(name) => Ok(builtin_module_algebra(name, self.f)?),
            Ref::Inline(d) => {
                let h = self.hopf(&d.hopf, &format!("{loc}.hopf"))?;
                let a = self.algebra(&d.algebra, &format!("{loc}.algebra")).map_err(parse_err)?;
                let action = self.actions(h.dim(), a.dim(), &d.action, &format!("{loc}.action")).map_err(parse_err)?;
                Ok(HModuleAlgebra::new(d.name.clone(), a, h, action)?)
            }
        }
    }

    fn algebra_ref(&self, r: &Ref<AlgebraData>, loc: &str) -> CliResult<Algebra<F>> {
        match r {
            Ref::Builtin(name) => builtin_algebra(name, self.f),
            Ref::Inline(d) => self.algebra(d, loc).map_err(parse_err),
        }
    }
}

fn parse_err(error: ParseError) -> CliError {
    CliError::Parse { source_name: String::new(), error }
}

/// The algebra underlying a catalog object of any kind.
pub fn builtin_algebra<F: Field>(name: &str, f: &F) -> CliResult<Algebra<F>> {
    match builtin_structure(name, f)? {
        Structure::Coalgebra(_) => Err(CliError::Usage(format!("builtin:{name} has no underlying algebra"))),
        s => Ok(s.algebra().expect("catalog objects carry algebras").clone()),
    }
}

/// Looks a name up in the Hopf, comodule algebra and module algebra
/// catalogs, in that order.
pub fn builtin_structure<F: Field>(name: &str, f: &F) -> CliResult<Structure<F>> {
    if let Ok(h) = builtin(name, f) {
        return Ok(Structure::Hopf(h));
    }
    if let Ok(ca) = builtin_comodule_algebra(name, f) {
        return Ok(Structure::ComoduleAlgebra(ca));
    }
    match builtin_module_algebra(name, f) {
        Ok(ma) => Ok(Structure::ModuleAlgebra(ma)),
        Err(_) => {
            // Report the Hopf catalog error, it carries the most likely intended list.
            builtin(name, f).map(Structure::Hopf).map_err(|e| CliError::Usage(format!("{e}; see `fdhopf catalog`")))
        }
    }
}

/// Builds the structure a parsed file describes over the field `f`.
pub fn build<F: Field>(file: &PresentationFile, f: &F) -> CliResult<Structure<F>> {
    let cx = Ctx { f };
    let s = match file.kind {
        Kind::Algebra => Structure::Algebra(cx.algebra(file.algebra.as_ref().unwrap(), "algebra").map_err(parse_err)?),
        Kind::Coalgebra => {
            let d = file.coalgebra.as_ref().unwrap();
            Structure::Coalgebra(cx.coalgebra(&d.labels, &d.counit, &d.comult, "coalgebra").map_err(parse_err)?)
        }
        Kind::Hopf => Structure::Hopf(cx.hopf(&Ref::Inline(Box::new(file.hopf.clone().unwrap())), "hopf")?),
        Kind::ComoduleAlgebra => {
            Structure::ComoduleAlgebra(cx.comodule_algebra(&Ref::Inline(Box::new(file.comodule_algebra.clone().unwrap())), "comodule_algebra")?)
        }
        Kind::ModuleAlgebra => {
            Structure::ModuleAlgebra(cx.module_algebra(&Ref::Inline(Box::new(file.module_algebra.clone().unwrap())), "module_algebra")?)
        }
        Kind::Module => {
            let d = file.module.as_ref().unwrap();
            let a = cx.algebra_ref(&d.algebra, "module.algebra")?;
            let action = cx.actions(a.dim(), d.dim, &d.action, "module.action").map_err(parse_err)?;
            let m = Module::new(&a, d.side.into(), d.dim, action)?;
            Structure::Module(a, m)
        }
        Kind::HopfModule => {
            let d = file.hopf_module.as_ref().unwrap();
            let ca = cx.comodule_algebra(&d.comodule_algebra, "hopf_module.comodule_algebra")?;
            let action = cx.actions(ca.dim(), d.dim, &d.action, "hopf_module.action").map_err(parse_err)?;
            let rho = cx.coaction(d.dim, ca.hopf().dim(), &d.coaction, "hopf_module.coaction").map_err(parse_err)?;
            let module = Module::new(ca.algebra(), d.side.into(), d.dim, action)?;
            let coaction = Comodule::new(Side::Right, d.dim, ca.hopf().dim(), rho)?;
            let m = HopfModule::new(&ca, module, coaction)?;
            Structure::HopfModule(ca, m)
        }
        Kind::CoidealSubalgebra => {
            let d = file.coideal_subalgebra.as_ref().unwrap();
            let h = cx.hopf(&d.hopf, "coideal_subalgebra.hopf")?;
            let vecs = d
                .span
                .iter()
                .enumerate()
                .map(|(i, v)| cx.dense(v, h.dim(), &format!("coideal_subalgebra.span[{i}]")))
                .collect::<Result<Vec<_>, _>>()
                .map_err(parse_err)?;
            let s = Subspace::span(f, h.dim(), &vecs);
            Structure::CoidealSubalgebra(h, s)
        }
    };
    Ok(s)
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

fn scalar<F: Field>(f: &F, x: &F::Elem) -> Scalar {
    Scalar(f.format(x))
}

fn dense_out<F: Field>(f: &F, v: &[F::Elem]) -> Vec<Scalar> {
    v.iter().map(|x| scalar(f, x)).collect()
}

fn algebra_data<F: Field>(a: &Algebra<F>) -> AlgebraData {
    let f = a.field();
    let n = a.dim();
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j) {
                mul.push((i, j, *k, scalar(f, c)));
            }
        }
    }
    AlgebraData { labels: a.labels().to_vec(), unit: dense_out(f, a.unit()), mul }
}

fn coalgebra_parts<F: Field>(c: &Coalgebra<F>) -> (Vec<Scalar>, Vec<Entry4>) {
    let f = c.field();
    let mut comult = Vec::new();
    for k in 0..c.dim() {
        for (i, j, x) in c.coproduct(k) {
            comult.push((k, *i, *j, scalar(f, x)));
        }
    }
    (dense_out(f, c.counit()), comult)
}

fn matrix_entries<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Entry3> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !f.is_zero(m.get(i, j)) {
                out.push((i, j, scalar(f, m.get(i, j))));
            }
        }
    }
    out
}

fn coaction_entries<F: Field>(f: &F, rho: &Matrix<F::Elem>, dim: usize, cdim: usize) -> Vec<Entry4> {
    let mut out = Vec::new();
    for v in 0..dim {
        for w in 0..dim {
            for h in 0..cdim {
                let c = rho.get(w * cdim + h, v);
                if !f.is_zero(c) {
                    out.push((v, w, h, scalar(f, c)));
                }
            }
        }
    }
    out
}

fn action_entries<F: Field>(f: &F, actions: &[Matrix<F::Elem>]) -> Vec<Entry4> {
    let mut out = Vec::new();
    for (i, m) in actions.iter().enumerate() {
        for v in 0..m.cols() {
            for w in 0..m.rows() {
                if !f.is_zero(m.get(w, v)) {
                    out.push((i, v, w, scalar(f, m.get(w, v))));
                }
            }
        }
    }
    out
}

fn hopf_data<F: Field>(h: &HopfAlgebra<F>) -> HopfData {
    let a = algebra_data(h.algebra());
    let (counit, comult) = coalgebra_parts(h.coalgebra());
    HopfData { name: h.name().to_string(), labels: a.labels, unit: a.unit, mul: a.mul, counit, comult, antipode: matrix_entries(h.field(), h.antipode()) }
}

fn comodule_algebra_data<F: Field>(ca: &ComoduleAlgebra<F>) -> ComoduleAlgebraData {
    ComoduleAlgebraData {
        name: ca.name().to_string(),
        hopf: Ref::Inline(Box::new(hopf_data(ca.hopf()))),
        algebra: algebra_data(ca.algebra()),
        coaction: coaction_entries(ca.field(), ca.rho(), ca.dim(), ca.hopf().dim()),
    }
}

/// The canonical, self-contained file for a structure.
pub fn export<F: Field>(s: &Structure<F>, f: &F) -> PresentationFile {
    let mut file = PresentationFile::empty(&f.spec(), s.kind());
    match s {
        Structure::Algebra(a) => file.algebra = Some(algebra_data(a)),
        Structure::Coalgebra(c) => {
            let (counit, comult) = coalgebra_parts(c);
            file.coalgebra = Some(CoalgebraData { labels: c.labels().to_vec(), counit, comult });
        }
        Structure::Hopf(h) => file.hopf = Some(hopf_data(h)),
        Structure::ComoduleAlgebra(ca) => file.comodule_algebra = Some(comodule_algebra_data(ca)),
        Structure::ModuleAlgebra(ma) => {
            file.module_algebra = Some(ModuleAlgebraData {
                name: ma.name().to_string(),
                hopf: Ref::Inline(Box::new(hopf_data(ma.hopf()))),
                algebra: algebra_data(ma.algebra()),
                action: action_entries(f, ma.action()),
            })
        }
        Structure::Module(a, m) => {
            file.module = Some(ModuleData { algebra: Ref::Inline(Box::new(algebra_data(a))), side: m.side().into(), dim: m.dim(), action: action_entries(f, m.actions()) })
        }
        Structure::HopfModule(ca, m) => {
            file.hopf_module = Some(HopfModuleData {
                comodule_algebra: Ref::Inline(Box::new(comodule_algebra_data(ca))),
                side: m.side().into(),
                dim: m.dim(),
                action: action_entries(f, m.module().actions()),
                coaction: coaction_entries(f, m.coaction().coaction(), m.dim(), ca.hopf().dim()),
            })
        }
        Structure::CoidealSubalgebra(h, sp) => {
            file.coideal_subalgebra = Some(CoidealData { hopf: Ref::Inline(Box::new(hopf_data(h))), span: sp.basis_vectors().iter().map(|v| dense_out(f, v)).collect() })
        }
    }
    file
}

// ---------------------------------------------------------------------------
// Loading inputs named on the command line
// ---------------------------------------------------------------------------

/// A command-line input: a file path or a `builtin:NAME` reference.
#[derive(Clone, Debug)]
pub enum Input {
    Builtin(String),
    File { path: String, file: PresentationFile },
}

impl Input {
    pub fn open(arg: &str) -> CliResult<Input> {
        if let Some(name) = arg.strip_prefix("builtin:") {
            return Ok(Input::Builtin(name.to_string()));
        }
        let text = std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))?;
        let file = parse_presentation(&text).map_err(|error| CliError::Parse { source_name: arg.to_string(), error })?;
        Ok(Input::File { path: arg.to_string(), file })
    }

    pub fn name(&self) -> String {
        match self {
            Input::Builtin(n) => format!("builtin:{n}"),
            Input::File { path, .. } => path.clone(),
        }
    }

    /// The field a file declares; builtins take whatever field is requested.
    pub fn field(&self) -> Option<FieldChoice> {
        match self {
            Input::Builtin(_) => None,
            Input::File { file, .. } => file.field_choice().ok(),
        }
    }

    pub fn build<F: Field>(&self, f: &F) -> CliResult<Structure<F>> {
        match self {
            Input::Builtin(n) => builtin_structure(n, f),
            Input::File { path, file } => {
                if file.field_choice().map(|c| c.spec()).ok() != Some(f.spec()) {
                    return Err(CliError::Usage(format!("{path} is over {} but the command runs over {}", file.field, f.spec())));
                }
                build(file, f).map_err(|e| match e {
                    CliError::Parse { error, .. } => CliError::Parse { source_name: path.clone(), error },
                    other => other,
                })
            }
        }
    }
}
