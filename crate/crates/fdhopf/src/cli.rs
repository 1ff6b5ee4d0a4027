//! Command-line interface: argument parsing, command dispatch and exit codes.

use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use fdhopf_core::algebra::module::is_homomorphism;
use fdhopf_core::algebra::oracles::{
    free_module, gram_matrix, is_free, is_frobenius, is_projective, is_quasi_frobenius, verify_free_basis, Freeness, Frobenius, Projectivity,
    QuasiFrobenius, DEFAULT_TRIALS,
};
use fdhopf_core::algebra::{default_labels, describe_vector, parse_combination, Algebra, Module, Side};
use fdhopf_core::coideal::{verify_coideal_theorem, CoidealInputs, CoidealSubalgebra, COIDEAL_THEOREMS};
use fdhopf_core::comodalg::{verify_comodalg_theorem, ComodalgInputs, ComoduleAlgebra, Simplicity, COMODALG_CATALOG, COMODALG_THEOREMS};
use fdhopf_core::exactla::{Field, Matrix, Subspace};
use fdhopf_core::fitting::{fitting_ledger, verify_fitting_property, FittingInputs, FITTING_PROPERTIES};
use fdhopf_core::hopf::{ni89b, CATALOG};
use fdhopf_core::modalg::{verify_modalg_theorem, HModuleAlgebra, ModalgInputs, MODALG_CATALOG, MODALG_THEOREMS};
use fdhopf_core::report::{Check, Status, TheoremReport};
use fdhopf_core::Error;

use crate::error::{CliError, CliResult};
use crate::format::{builtin_structure, export, parse_field, FieldChoice, Input, Structure};
use crate::report::{anchor, emit_report, Invocation, OutputFormat, Report, Section, Versions};
use crate::with_field;

#[derive(Parser, Debug, Clone)]
#[command(name = "fdhopf", version, about = "Exact checks for finite-dimensional Hopf algebras, comodule algebras and module algebras")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Trials for randomized searches.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, global = true, value_enum, default_value = "markdown")]
    pub format: OutputFormat,
    /// Ground field for builtin inputs: Q, GF(p) or GF(p^k). Files carry their own.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Record the wall-clock time in the report.
    #[arg(long, global = true)]
    pub timestamp: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check the axioms of a presentation file or builtin.
    Validate { input: String },
    /// Jacobson radical of the underlying algebra.
    Radical { input: String },
    /// Block decomposition of the underlying algebra.
    Wedderburn { input: String },
    /// Decide freeness of a module (`free M [over A]`).
    Free {
        module: String,
        #[arg(num_args = 0..=2)]
        over: Vec<String>,
    },
    /// Decide projectivity of a module (`projective M [over A]`).
    Projective {
        module: String,
        #[arg(num_args = 0..=2)]
        over: Vec<String>,
    },
    /// Decide whether the underlying algebra is Frobenius.
    Frobenius { input: String },
    /// Decide whether the underlying algebra is quasi-Frobenius.
    Qf { input: String },
    /// Decide H-simplicity of a comodule or module algebra.
    Hsimple { input: String },
    /// Smallest (co)stable ideal containing the given elements.
    CostableClosure {
        input: String,
        /// Comma-separated elements, e.g. "x, g+x".
        #[arg(long)]
        seeds: String,
    },
    /// Fitting ideals of a module over a commutative algebra.
    Fitting {
        module: String,
        #[arg(long = "i", allow_negative_numbers = true)]
        i: Option<isize>,
    },
    /// Analyse a right coideal subalgebra given by spanning elements.
    Coideal {
        hopf: String,
        /// Comma-separated spanning elements, e.g. "1,gx".
        #[arg(long)]
        span: String,
        /// Use the opposite multiplication of H.
        #[arg(long)]
        anti: bool,
    },
    /// Run theorem drivers by id (comma-separated, or "all").
    Verify(VerifyArgs),
    /// Certificate for the weak finiteness counterexample.
    Ni89b,
    /// List and validate the builtin catalog.
    Catalog,
    /// Print the canonical presentation file of an input.
    Export { input: String },
    /// Re-run a JSON report and re-verify its witnesses.
    Replay { report: String },
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    pub ids: String,
    #[arg(long)]
    pub hopf: Option<String>,
    #[arg(long)]
    pub span: Option<String>,
    #[arg(long)]
    pub anti: bool,
    #[arg(long)]
    pub comodalg: Option<String>,
    #[arg(long)]
    pub modalg: Option<String>,
    /// Algebra for the Fitting properties when no comodule algebra is given.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Extra Hopf modules (files) appended to the battery.
    #[arg(long)]
    pub extra: Vec<String>,
}

/// Result of one invocation: the text to print and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
    pub report: Option<Report>,
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> CliResult<Outcome>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(std::iter::once("fdhopf".to_string()).chain(args.iter().cloned())).map_err(|e| CliError::Usage(e.to_string()))?;
    run_parsed(&cli, args)
}

pub fn run_parsed(cli: &Cli, args: Vec<String>) -> CliResult<Outcome> {
    if let Command::Replay { report } = &cli.command {
        let r = replay(report)?;
        let code = r.exit_code();
        return Ok(Outcome { text: emit_report(&r, cli.opts.format), exit_code: code, report: Some(r) });
    }
    let field = resolve_field(cli)?;
    let (sections, override_code, text) = with_field!(&field, |f| execute(f, cli))?;
    if let Some(text) = text {
        return Ok(Outcome { text, exit_code: 0, report: None });
    }
    let mut report = Report::new(Invocation {
        command: args,
        seed: cli.opts.seed,
        trials: cli.opts.trials,
        field: field.spec().to_string(),
        versions: Versions::default(),
    });
    if cli.opts.timestamp {
        let t = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        report.timestamp = Some(format!("unix:{t}"));
    }
    for s in sections {
        report.push(s);
    }
    let code = override_code.unwrap_or_else(|| report.exit_code());
    Ok(Outcome { text: emit_report(&report, cli.opts.format), exit_code: code, report: Some(report) })
}

/// Arguments naming inputs, in order.
fn input_args(cmd: &Command) -> Vec<&str> {
    match cmd {
        Command::Validate { input }
        | Command::Radical { input }
        | Command::Wedderburn { input }
        | Command::Frobenius { input }
        | Command::Qf { input }
        | Command::Hsimple { input }
        | Command::CostableClosure { input, .. }
        | Command::Export { input } => vec![input],
        Command::Free { module, over } | Command::Projective { module, over } => {
            let mut v = vec![module.as_str()];
            v.extend(over.iter().filter(|o| *o != "over").map(String::as_str));
            v
        }
        Command::Fitting { module, .. } => vec![module],
        Command::Coideal { hopf, .. } => vec![hopf],
        Command::Verify(v) => {
            let mut out: Vec<&str> = [&v.hopf, &v.comodalg, &v.modalg, &v.algebra].into_iter().flatten().map(String::as_str).collect();
            out.extend(v.extra.iter().map(String::as_str));
            out
        }
        Command::Ni89b | Command::Catalog | Command::Replay { .. } => Vec::new(),
    }
}

/// `--field` if given, else the field of the first file input, else `Q`.
fn resolve_field(cli: &Cli) -> CliResult<FieldChoice> {
    if let Some(s) = &cli.opts.field {
        return parse_field(s, None).map_err(CliError::Usage);
    }
    for arg in input_args(&cli.command) {
        if arg.starts_with("builtin:") {
            continue;
        }
        if let Some(fc) = Input::open(arg)?.field() {
            return Ok(fc);
        }
    }
    Ok(FieldChoice::Rationals)
}

type Executed = (Vec<Section>, Option<i32>, Option<String>);

fn execute<F: Field>(f: &F, cli: &Cli) -> CliResult<Executed> {
    let o = &cli.opts;
    let sections = match &cli.command {
        Command::Validate { input } => {
            let s = Input::open(input)?.build(f)?;
            let sec = validate_section(&s, input);
            let code = if sec.status() == Status::Pass { None } else { Some(2) };
            return Ok((vec![sec], code, None));
        }
        Command::Export { input } => {
            let s = Input::open(input)?.build(f)?;
            return Ok((Vec::new(), None, Some(export(&s, f).to_text())));
        }
        Command::Radical { input } => vec![radical_section(algebra_of(&load(f, input)?, input)?)?],
        Command::Wedderburn { input } => vec![wedderburn_section(algebra_of(&load(f, input)?, input)?)?],
        Command::Free { module, over } => {
            let (a, m, name) = load_module(f, module, over)?;
            vec![free_section(&a, &m, &name, o.trials, o.seed)?]
        }
        Command::Projective { module, over } => {
            let (a, m, name) = load_module(f, module, over)?;
            vec![projective_section(&a, &m, &name)?]
        }
        Command::Frobenius { input } => vec![frobenius_section(algebra_of(&load(f, input)?, input)?, o.trials, o.seed)?],
        Command::Qf { input } => vec![qf_section(algebra_of(&load(f, input)?, input)?)?],
        Command::Hsimple { input } => vec![hsimple_section(&load(f, input)?, input)?],
        Command::CostableClosure { input, seeds } => vec![closure_section(&load(f, input)?, input, seeds)?],
        Command::Fitting { module, i } => {
            let (a, m, name) = load_module(f, module, &[])?;
            vec![fitting_section(&a, &m, &name, *i)?]
        }
        Command::Coideal { hopf, span, anti } => {
            let cs = coideal_from_args(f, hopf, Some(span), *anti)?;
            vec![coideal_section(&cs, o.trials, o.seed)?]
        }
        Command::Verify(v) => verify_sections(f, v, o)?,
        Command::Ni89b => vec![guard("ni89b", ni89b_section(f))?],
        Command::Catalog => vec![catalog_section(f)],
        Command::Replay { .. } => unreachable!("handled before field dispatch"),
    };
    Ok((sections, None, None))
}

// ---------------------------------------------------------------------------
// Loading helpers
// ---------------------------------------------------------------------------

fn require_valid<F: Field>(s: &Structure<F>, what: &str) -> CliResult<()> {
    let r = s.validate();
    if r.is_valid() {
        Ok(())
    } else {
        Err(CliError::Validation { what: what.to_string(), report: r })
    }
}

fn load<F: Field>(f: &F, arg: &str) -> CliResult<Structure<F>> {
    let s = Input::open(arg)?.build(f)?;
    require_valid(&s, arg)?;
    Ok(s)
}

fn algebra_of<'a, F: Field>(s: &'a Structure<F>, what: &str) -> CliResult<&'a Algebra<F>> {
    s.algebra().ok_or_else(|| CliError::Usage(format!("{what} has no underlying algebra")))
}

/// A module from a `module` or `hopf_module` input, or the regular right
/// module of a builtin algebra written `builtin:regular(NAME)`.
fn load_module<F: Field>(f: &F, arg: &str, over: &[String]) -> CliResult<(Algebra<F>, Module<F::Elem>, String)> {
    let (a, m) = if let Some(inner) = arg.strip_prefix("builtin:regular(").and_then(|r| r.strip_suffix(')')) {
        let a = crate::format::builtin_algebra(inner, f)?;
        let m = Module::regular(&a, Side::Right);
        (a, m)
    } else {
        match load(f, arg)? {
            Structure::Module(a, m) => (a, m),
            Structure::HopfModule(ca, m) => (ca.algebra().clone(), m.module().clone()),
            other => return Err(CliError::Usage(format!("{arg} is a {}, expected a module", other.kind().name()))),
        }
    };
    let over: Vec<&String> = over.iter().filter(|o| *o != "over").collect();
    if let Some(alg_arg) = over.first() {
        let s = load(f, alg_arg)?;
        let b = algebra_of(&s, alg_arg)?;
        if *b != a {
            return Err(CliError::Usage(format!("{arg} is not a module over {alg_arg}")));
        }
    }
    Ok((a, m, arg.to_string()))
}

fn parse_elements<F: Field>(f: &F, labels: &[String], text: &str) -> CliResult<Vec<Vec<F::Elem>>> {
    text.split(',').filter(|t| !t.trim().is_empty()).map(|t| parse_combination(f, labels, t.trim()).map_err(CliError::from)).collect()
}

fn coideal_from_args<F: Field>(f: &F, hopf: &str, span: Option<&String>, anti: bool) -> CliResult<CoidealSubalgebra<F>> {
    let (h, file_span) = match load(f, hopf)? {
        Structure::Hopf(h) => (h, None),
        Structure::CoidealSubalgebra(h, s) => (h, Some(s)),
        other => return Err(CliError::Usage(format!("{hopf} is a {}, expected a Hopf algebra", other.kind().name()))),
    };
    let h = if anti { h.opposite_algebra()? } else { h };
    let s = match (span, file_span) {
        (Some(text), _) => Subspace::span(f, h.dim(), &parse_elements(f, h.labels(), text)?),
        (None, Some(s)) => s,
        (None, None) => return Err(CliError::Usage("a coideal subalgebra needs --span".into())),
    };
    Ok(CoidealSubalgebra::detect(&h, &s)?)
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

fn vec_json<F: Field>(f: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(f.format(x))).collect())
}

fn matrix_json<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| Value::String(f.format(m.get(i, j)))).collect())).collect())
}

fn parse_vec<F: Field>(f: &F, v: &Value) -> Option<Vec<F::Elem>> {
    v.as_array()?.iter().map(|x| f.parse(x.as_str()?).ok()).collect()
}

fn parse_matrix<F: Field>(f: &F, v: &Value) -> Option<Matrix<F::Elem>> {
    let rows: Vec<Vec<F::Elem>> = v.as_array()?.iter().map(|r| parse_vec(f, r)).collect::<Option<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    rows.iter().all(|r| r.len() == cols).then(|| Matrix::from_rows(cols, rows))
}

fn describe_in<F: Field>(f: &F, v: &[F::Elem]) -> String {
    describe_vector(f, &default_labels("e", v.len()), v)
}

fn describe_space<F: Field>(alg: &Algebra<F>, s: &Subspace<F::Elem>) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis_vectors().iter().map(|v| alg.describe(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn single(id: &str, anchor_text: &str, statement: &str, c: Check) -> Section {
    let mut s = Section::new(id, format!("{id}: {anchor_text}"), statement);
    s.push(&c);
    s
}

/// Turns driver refusals into a section carrying the matching status;
/// other errors propagate.
fn guard(id: &str, r: CliResult<Section>) -> CliResult<Section> {
    let (status, what) = match r {
        Ok(s) => return Ok(s),
        Err(CliError::Core(Error::HypothesisFailure { stage, reason })) => (Status::HypothesisFailure, format!("hypothesis {stage} fails: {reason}")),
        Err(CliError::Core(Error::Refused(reason))) => (Status::HypothesisFailure, format!("refused: {reason}")),
        Err(CliError::Core(Error::Inconclusive(reason))) => (Status::Inconclusive, format!("inconclusive: {reason}")),
        Err(e) => return Err(e),
    };
    let mut s = Section::new(id, anchor(id), "");
    s.push(&Check::new(id, "inputs").conclude(what, status));
    Ok(s)
}

fn theorem(id: &str, r: fdhopf_core::Result<TheoremReport>) -> CliResult<Section> {
    guard(id, r.map(|t| Section::from_theorem(&t)).map_err(CliError::from))
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn validate_section<F: Field>(s: &Structure<F>, name: &str) -> Section {
    let r = s.validate();
    let mut c = Check::new("validate", format!("{name}: {}", s.describe()));
    let mut by_axiom: Vec<(String, usize)> = Vec::new();
    for v in &r.violations {
        match by_axiom.iter_mut().find(|(a, _)| *a == v.axiom) {
            Some(e) => e.1 += 1,
            None => by_axiom.push((v.axiom.clone(), 1)),
        }
    }
    const SHOWN: usize = 40;
    for v in r.violations.iter().take(SHOWN) {
        c = c.witness(format!("{} {:?}: {}", v.axiom, v.indices, v.detail));
    }
    if r.violations.len() > SHOWN {
        c = c.witness(format!("... {} more violations", r.violations.len() - SHOWN));
    }
    let conclusion = if r.is_valid() {
        "all axioms hold".to_string()
    } else {
        let parts: Vec<String> = by_axiom.iter().map(|(a, n)| format!("{a} ({n})")).collect();
        format!("axioms fail: {}", parts.join(", "))
    };
    let c = c.conclude(conclusion, Status::from_bool(r.is_valid()));
    let violations: Vec<Value> = r.violations.iter().map(|v| json!({"axiom": v.axiom, "indices": v.indices, "detail": v.detail})).collect();
    single("validate", &format!("axioms of a {}", s.kind().name()), "", c).with_data(json!({"kind": s.kind().name(), "violations": violations}))
}

fn radical_section<F: Field>(alg: &Algebra<F>) -> CliResult<Section> {
    let f = alg.field();
    let w = alg.wedderburn()?;
    let j = &w.radical;
    // Exact re-check: J is a two-sided ideal and nilpotent.
    let ideal = (0..alg.dim()).all(|i| j.basis_vectors().iter().all(|v| j.contains(f, &alg.mul(&alg.basis_vector(i), v)) && j.contains(f, &alg.mul(v, &alg.basis_vector(i)))));
    let mut power = j.clone();
    let mut index = 1;
    while !power.is_zero() && index <= alg.dim() + 1 {
        let prods: Vec<Vec<F::Elem>> = power.basis_vectors().iter().flat_map(|p| j.basis_vectors().into_iter().map(move |q| (p.clone(), q))).map(|(p, q)| alg.mul(&p, &q)).collect();
        power = Subspace::span(f, alg.dim(), &prods);
        index += 1;
    }
    let nilpotent = power.is_zero();
    let c = Check::new("radical", format!("algebra of dimension {}", alg.dim()))
        .hypothesis(format!("J is a two-sided ideal: {ideal}"))
        .witness(format!("J = {}", describe_space(alg, j)))
        .witness(format!("J^{index} = 0"))
        .conclude(format!("dim J = {}, nilpotency index {}", j.dim(), if j.is_zero() { 1 } else { index }), Status::from_bool(ideal && nilpotent));
    let basis: Vec<Value> = j.basis_vectors().iter().map(|v| vec_json(f, v)).collect();
    Ok(single("radical", "Jacobson radical", "the radical is a nilpotent ideal with semisimple quotient", c).with_data(json!({"dim": j.dim(), "basis": basis})))
}

fn wedderburn_section<F: Field>(alg: &Algebra<F>) -> CliResult<Section> {
    let w = alg.wedderburn()?;
    let mut c = Check::new("wedderburn", format!("algebra of dimension {}", alg.dim())).witness(format!("radical: dimension {}", w.radical.dim()));
    let mut blocks = Vec::new();
    for i in 0..w.block_count() {
        let d = w.blocks[i].dim();
        c = c.witness(format!(
            "block {i}: dimension {d}, matrix size {}, division algebra dimension {}, centre dimension {}",
            w.block_lengths[i], w.division_dims[i], w.center_dims[i]
        ));
        blocks.push(json!({"dim": d, "matrix_size": w.block_lengths[i], "division_dim": w.division_dims[i], "center_dim": w.center_dims[i]}));
    }
    let total: usize = w.blocks.iter().map(|b| b.dim()).sum();
    let ok = total + w.radical.dim() == alg.dim() && w.blocks.iter().all(|b| b.validate().is_valid());
    let c = c.conclude(format!("{} simple blocks, dimensions add up to dim A - dim J = {total}", w.block_count()), Status::from_bool(ok));
    Ok(single("wedderburn", "block decomposition", "A/J is a product of simple blocks", c).with_data(json!({"radical_dim": w.radical.dim(), "blocks": blocks})))
}

fn free_section<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, name: &str, trials: u64, seed: u64) -> CliResult<Section> {
    let f = alg.field();
    let subject = format!("{name}: {} module of dimension {}", m.side().name(), m.dim());
    let (c, data) = match is_free(alg, m, trials, seed)? {
        Freeness::Free { rank, basis } => {
            let ok = verify_free_basis(alg, m, &basis);
            let mut c = Check::new("free", subject);
            for b in &basis {
                c = c.witness(format!("basis element {}", describe_in(f, b)));
            }
            let c = c.conclude(format!("free of rank {rank}"), Status::from_bool(ok));
            (c, json!({"free": true, "rank": rank, "basis": basis.iter().map(|b| vec_json(f, b)).collect::<Vec<_>>()}))
        }
        Freeness::NotFree { stage, detail } => {
            (Check::new("free", subject).witness(detail.clone()).conclude(format!("not free ({stage:?} obstruction)"), Status::Pass), json!({"free": false, "detail": detail}))
        }
    };
    Ok(single("free", "freeness", "decides whether M is a free A-module", c).with_data(data))
}

fn projective_section<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, name: &str) -> CliResult<Section> {
    let f = alg.field();
    let subject = format!("{name}: {} module of dimension {}", m.side().name(), m.dim());
    let (c, data) = match is_projective(alg, m)? {
        Projectivity::Yes { generators, pi, sigma } => {
            let g = generators.len();
            let ok = pi.mul(f, &sigma) == Matrix::identity(f, m.dim()) && is_homomorphism(f, m, &free_module(alg, m.side(), g), &sigma);
            let c = Check::new("projective", subject)
                .witness(format!("{g} generators; a splitting of A^{g} → M verified"))
                .conclude("projective", Status::from_bool(ok));
            let gens: Vec<Value> = generators.iter().map(|v| vec_json(f, v)).collect();
            (c, json!({"projective": true, "generators": gens, "sigma": matrix_json(f, &sigma)}))
        }
        Projectivity::No { reason, .. } => {
            (Check::new("projective", subject).witness(reason.clone()).conclude("not projective", Status::Pass), json!({"projective": false, "reason": reason}))
        }
    };
    Ok(single("projective", "projectivity", "decides whether M is a projective A-module", c).with_data(data))
}

fn frobenius_section<F: Field>(alg: &Algebra<F>, trials: u64, seed: u64) -> CliResult<Section> {
    let f = alg.field();
    let subject = format!("algebra of dimension {}", alg.dim());
    let (c, data) = match is_frobenius(alg, trials, seed)? {
        Frobenius::Yes { functional } => {
            let ok = gram_matrix(alg, &functional).inverse(f).is_some();
            let c = Check::new("frobenius", subject)
                .witness(format!("functional λ = ({})", functional.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(", ")))
                .conclude("Frobenius: (a, b) ↦ λ(ab) is nondegenerate", Status::from_bool(ok));
            (c, json!({"frobenius": true, "functional": vec_json(f, &functional)}))
        }
        Frobenius::No { reason } => (Check::new("frobenius", subject).witness(reason.clone()).conclude("not Frobenius", Status::Pass), json!({"frobenius": false, "reason": reason})),
    };
    Ok(single("frobenius", "Frobenius algebra", "decides whether A ≅ A* as right modules", c).with_data(data))
}

fn qf_section<F: Field>(alg: &Algebra<F>) -> CliResult<Section> {
    let c = Check::new("qf", format!("algebra of dimension {}", alg.dim()));
    let c = match is_quasi_frobenius(alg)? {
        QuasiFrobenius::Yes => c.witness("the duals of both regular modules are projective").conclude("quasi-Frobenius", Status::Pass),
        QuasiFrobenius::No { reason, .. } => c.witness(reason).conclude("not quasi-Frobenius", Status::Pass),
    };
    Ok(single("qf", "quasi-Frobenius algebra", "decides self-injectivity on both sides", c))
}

fn simplicity_check<F: Field>(alg: &Algebra<F>, subject: String, s: Simplicity<F::Elem>, stable: impl Fn(&Subspace<F::Elem>) -> bool) -> Check {
    let c = Check::new("hsimple", subject);
    match s {
        Simplicity::Simple { end_dim } => c.witness(format!("commutant of the ideal operators has dimension {end_dim}")).conclude("H-simple", Status::Pass),
        Simplicity::NotSimple { witness } => {
            let ok = stable(&witness) && !witness.is_zero() && !witness.is_full();
            c.witness(format!("proper invariant ideal {}", describe_space(alg, &witness))).conclude("not H-simple", Status::from_bool(ok))
        }
        Simplicity::Inconclusive { reason } => c.conclude(format!("undecided: {reason}"), Status::Inconclusive),
    }
}

fn hsimple_section<F: Field>(s: &Structure<F>, name: &str) -> CliResult<Section> {
    let c = match s {
        Structure::ComoduleAlgebra(ca) => hsimple_comodalg(ca, name)?,
        Structure::Hopf(h) => hsimple_comodalg(&ComoduleAlgebra::regular(h), name)?,
        Structure::ModuleAlgebra(ma) => {
            let alg = ma.algebra();
            let st = ma.is_h_simple()?;
            simplicity_check(alg, format!("{name}: module algebra {}", ma.name()), st, |w| ma.is_stable(w) && is_two_sided(alg, w))
        }
        other => return Err(CliError::Usage(format!("{name} is a {}, expected a comodule or module algebra", other.kind().name()))),
    };
    Ok(single("hsimple", "H-simplicity", "no proper nonzero (co)stable two-sided ideals", c))
}

fn hsimple_comodalg<F: Field>(ca: &ComoduleAlgebra<F>, name: &str) -> CliResult<Check> {
    let alg = ca.algebra();
    let st = ca.is_h_simple()?;
    Ok(simplicity_check(alg, format!("{name}: comodule algebra {}", ca.name()), st, |w| ca.is_costable(w) && is_two_sided(alg, w)))
}

fn is_two_sided<F: Field>(alg: &Algebra<F>, s: &Subspace<F::Elem>) -> bool {
    let f = alg.field();
    (0..alg.dim()).all(|i| {
        let b = alg.basis_vector(i);
        s.basis_vectors().iter().all(|v| s.contains(f, &alg.mul(&b, v)) && s.contains(f, &alg.mul(v, &b)))
    })
}

fn closure_section<F: Field>(s: &Structure<F>, name: &str, seeds: &str) -> CliResult<Section> {
    let (alg, c) = match s {
        Structure::ComoduleAlgebra(ca) => {
            let alg = ca.algebra();
            let gens = parse_elements(alg.field(), alg.labels(), seeds)?;
            let cl = ca.costable_closure(&gens);
            let ok = cl.costable && is_two_sided(alg, &cl.space) && gens.iter().all(|g| cl.space.contains(alg.field(), g));
            let c = Check::new("costable-closure", format!("{name}: seeds {seeds}"))
                .witness(format!("closure = {}", describe_space(alg, &cl.space)))
                .witness(format!("fixpoint after {} rounds", cl.rounds))
                .conclude(format!("costable ideal of dimension {}", cl.space.dim()), Status::from_bool(ok));
            (alg, (c, cl.space))
        }
        Structure::ModuleAlgebra(ma) => {
            let alg = ma.algebra();
            let gens = parse_elements(alg.field(), alg.labels(), seeds)?;
            let sp = ma.stable_closure(&gens);
            let ok = ma.is_stable(&sp) && is_two_sided(alg, &sp) && gens.iter().all(|g| sp.contains(alg.field(), g));
            let c = Check::new("costable-closure", format!("{name}: seeds {seeds}"))
                .witness(format!("closure = {}", describe_space(alg, &sp)))
                .conclude(format!("stable ideal of dimension {}", sp.dim()), Status::from_bool(ok));
            (alg, (c, sp))
        }
        other => return Err(CliError::Usage(format!("{name} is a {}, expected a comodule or module algebra", other.kind().name()))),
    };
    let (c, space) = c;
    let basis: Vec<Value> = space.basis_vectors().iter().map(|v| vec_json(alg.field(), v)).collect();
    Ok(single("costable-closure", "smallest (co)stable ideal", "smallest (co)stable two-sided ideal containing the seeds", c).with_data(json!({"basis": basis})))
}

fn fitting_section<F: Field>(alg: &Algebra<F>, m: &Module<F::Elem>, name: &str, only: Option<isize>) -> CliResult<Section> {
    if !alg.is_commutative() {
        return Err(Error::hypothesis("A commutative", "Fitting ideals are computed over commutative algebras").into());
    }
    let l = fitting_ledger(alg, m)?;
    let n = l.rank() as isize;
    let range: Vec<isize> = match only {
        Some(i) => vec![i],
        None => (-1..=n).collect(),
    };
    let mut sec = Section::new("fitting", "fitting: Fitting ideals", "ideals of minors of a presentation matrix");
    let mut data = Vec::new();
    for i in range {
        if i < -1 {
            return Err(CliError::Usage("Fitting ideals start at index -1".into()));
        }
        let s = l.fitt(i);
        let c = Check::new(format!("Fitt_{i}"), format!("{name}: presentation with {} generators", l.rank()))
            .witness(describe_space(alg, s))
            .conclude(format!("Fitt_{i} has dimension {}", s.dim()), Status::from_bool(is_two_sided(alg, s)));
        sec.push(&c);
        data.push(json!({"i": i, "dim": s.dim(), "basis": s.basis_vectors().iter().map(|v| vec_json(alg.field(), v)).collect::<Vec<_>>()}));
    }
    if let Some(r) = l.constant_rank() {
        sec.push(&Check::new("rank", name).conclude(format!("projective of constant rank {r}"), Status::Pass));
    }
    Ok(sec.with_data(Value::Array(data)))
}

fn coideal_section<F: Field>(cs: &CoidealSubalgebra<F>, trials: u64, seed: u64) -> CliResult<Section> {
    let f = cs.field();
    let h = cs.hopf();
    let a = cs.algebra();
    let mut sec = Section::new("coideal", "coideal: right coideal subalgebra", "structure of H over a right coideal subalgebra A");
    let span = describe_space(h.algebra(), cs.span());
    sec.push(
        &Check::new("detect", format!("A = {span} in {}", h.name()))
            .witness("1 ∈ A, A·A ⊆ A and Δ(A) ⊆ A ⊗ H checked on a basis")
            .conclude(format!("right coideal subalgebra of dimension {}{}", cs.dim(), if cs.is_hopf_subalgebra() { ", a Hopf subalgebra" } else { "" }), Status::Pass),
    );
    let mut data = json!({"dim": cs.dim(), "hopf_dim": h.dim(), "hopf_subalgebra": cs.is_hopf_subalgebra()});
    match is_frobenius(a, trials, seed)? {
        Frobenius::Yes { functional } => {
            let ok = gram_matrix(a, &functional).inverse(f).is_some();
            sec.push(&Check::new("frobenius", "A").witness(format!("functional λ = ({})", functional.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(", "))).conclude("A is Frobenius", Status::from_bool(ok)));
            data["functional"] = vec_json(f, &functional);
        }
        Frobenius::No { reason } => sec.push(&Check::new("frobenius", "A").witness(reason).conclude("A is not Frobenius", Status::Pass)),
    }
    for side in [Side::Right, Side::Left] {
        let m = cs.hopf_as_module(side);
        let key = side.name();
        match is_free(a, m.module(), trials, seed)? {
            Freeness::Free { rank, basis } => {
                let ok = verify_free_basis(a, m.module(), &basis);
                let mut c = Check::new(format!("free-{key}"), format!("H as a {key} A-module"));
                for b in &basis {
                    c = c.witness(format!("basis element {}", h.algebra().describe(b)));
                }
                sec.push(&c.conclude(format!("free of rank {rank}"), Status::from_bool(ok)));
                data[format!("basis_{key}")] = Value::Array(basis.iter().map(|b| vec_json(f, b)).collect());
            }
            Freeness::NotFree { detail, .. } => sec.push(&Check::new(format!("free-{key}"), format!("H as a {key} A-module")).witness(detail).conclude("not free", Status::Fail)),
        }
    }
    let qp = cs.quotient_pair()?;
    let (d, dp) = (qp.coalgebra(Side::Right).dim(), qp.coalgebra(Side::Left).dim());
    let ok = d * cs.dim() == h.dim() && dp * cs.dim() == h.dim() && qp.coalgebra(Side::Right).validate().is_valid() && qp.coalgebra(Side::Left).validate().is_valid();
    sec.push(&Check::new("quotients", "D = H/HA⁺ and D′ = H/A⁺H").witness(format!("dim D = {d}, dim D′ = {dp}")).conclude("quotient coalgebras of dimension dim H / dim A", Status::from_bool(ok)));
    data["dim_d"] = json!(d);
    data["dim_d_prime"] = json!(dp);
    Ok(sec.with_data(data))
}

fn ni89b_section<F: Field>(f: &F) -> CliResult<Section> {
    let cert = ni89b::certificate(f)?;
    let mut sec = Section::new("ni89b", anchor("ni89b"), "XY = 1 and XZ = 0 in 2x2 matrices over the convolution algebra, with Z ≠ 0");
    let mut trace = Vec::new();
    for e in &cert.entries {
        let mut c = Check::new(format!("{} [{},{}]", e.matrix, e.row, e.col), format!("over {}", cert.field)).witness(format!("expansion: {}", e.expansion));
        if !e.vanishing.is_empty() {
            c = c.witness(format!("cross terms killed by: {}", e.vanishing.join(", ")));
        }
        if !e.identities.is_empty() {
            let ids: Vec<String> = e.identities.iter().map(|(l, k)| format!("{k}·({l})")).collect();
            c = c.witness(format!("remainder = {}", ids.join(" + ")));
        }
        sec.push(&c.conclude("reduces to 0 modulo the relations", Status::from_bool(e.reduces_to_zero)));
        trace.push(json!({
            "matrix": e.matrix, "row": e.row, "col": e.col, "expansion": e.expansion,
            "vanishing": e.vanishing, "identities": e.identities.iter().map(|(l, k)| json!([l, k])).collect::<Vec<_>>(),
            "reduces_to_zero": e.reduces_to_zero,
        }));
    }
    sec.push(
        &Check::new("Z ≠ 0", format!("over {}", cert.field))
            .witness(format!("{} symbols, {} relations of rank {}", cert.symbol_count, cert.relation_count, cert.relation_rank))
            .witness(cert.z_nonzero.clone())
            .conclude(cert.conclusion.clone(), Status::from_bool(cert.holds())),
    );
    Ok(sec.with_data(json!({"field": cert.field, "trace": trace})))
}

fn catalog_section<F: Field>(f: &F) -> Section {
    let mut sec = Section::new("catalog", "catalog: builtin objects", format!("builtin objects over {}, each validated", f.spec()));
    let mut unavailable = Vec::new();
    let mut names = Vec::new();
    let all = CATALOG.iter().chain(COMODALG_CATALOG).chain(MODALG_CATALOG);
    for name in all {
        match builtin_structure(name, f) {
            Ok(s) => {
                let r = s.validate();
                sec.push(&Check::new(format!("builtin:{name}"), s.describe()).conclude(if r.is_valid() { "valid" } else { "invalid" }, Status::from_bool(r.is_valid())));
                names.push(json!({"name": format!("builtin:{name}"), "kind": s.kind().name(), "dim": s.algebra().map(|a| a.dim())}));
            }
            Err(e) => unavailable.push(json!({"name": format!("builtin:{name}"), "reason": e.to_string()})),
        }
    }
    sec.with_data(json!({"available": names, "unavailable": unavailable}))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Comodalg,
    Coideal,
    Modalg,
    Fitting,
    Other,
}

fn family(id: &str) -> Option<Family> {
    if COMODALG_THEOREMS.contains(&id) {
        Some(Family::Comodalg)
    } else if COIDEAL_THEOREMS.contains(&id) {
        Some(Family::Coideal)
    } else if MODALG_THEOREMS.contains(&id) {
        Some(Family::Modalg)
    } else if FITTING_PROPERTIES.contains(&id) {
        Some(Family::Fitting)
    } else if matches!(id, "ni89b" | "localization") {
        Some(Family::Other)
    } else {
        None
    }
}

fn expand_ids(v: &VerifyArgs) -> CliResult<Vec<String>> {
    let mut out = Vec::new();
    for id in v.ids.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if id == "all" {
            let fam: &[&str] = if v.hopf.is_some() {
                COIDEAL_THEOREMS
            } else if v.modalg.is_some() {
                MODALG_THEOREMS
            } else if v.comodalg.is_some() {
                COMODALG_THEOREMS
            } else if v.algebra.is_some() {
                FITTING_PROPERTIES
            } else {
                return Err(CliError::Usage("verify all needs --hopf, --comodalg, --modalg or --algebra".into()));
            };
            out.extend(fam.iter().map(|s| s.to_string()));
        } else if family(id).is_some() {
            out.push(id.to_string());
        } else {
            let known: Vec<&str> = [COMODALG_THEOREMS, COIDEAL_THEOREMS, MODALG_THEOREMS, FITTING_PROPERTIES].concat();
            return Err(CliError::Usage(format!("unknown theorem id {id:?}; known: {}, ni89b, localization", known.join(", "))));
        }
    }
    Ok(out)
}

fn need<'a>(opt: &'a Option<String>, flag: &str, id: &str) -> CliResult<&'a str> {
    opt.as_deref().ok_or_else(|| CliError::Usage(format!("verify {id} needs --{flag}")))
}

fn verify_sections<F: Field>(f: &F, v: &VerifyArgs, o: &GlobalOpts) -> CliResult<Vec<Section>> {
    let ids = expand_ids(v)?;
    let mut out = Vec::new();
    // Inputs are loaded once, on first use.
    let mut ca_cache: Option<ComoduleAlgebra<F>> = None;
    let mut ma_cache: Option<HModuleAlgebra<F>> = None;
    let mut cs_cache: Option<CoidealSubalgebra<F>> = None;
    let mut fit_cache: Option<FittingInputs<F>> = None;
    for id in &ids {
        let sec = match family(id).expect("ids are checked") {
            Family::Comodalg => {
                if ca_cache.is_none() {
                    ca_cache = Some(load_comodalg(f, need(&v.comodalg, "comodalg", id)?)?);
                }
                let ca = ca_cache.as_ref().unwrap();
                let inputs = ComodalgInputs { battery: extra_battery(f, ca, &v.extra)?, trials: o.trials, ..Default::default() };
                theorem(id, verify_comodalg_theorem(id, ca, &inputs, o.seed))?
            }
            Family::Coideal => {
                if cs_cache.is_none() {
                    cs_cache = Some(coideal_from_args(f, need(&v.hopf, "hopf", id)?, v.span.as_ref(), v.anti)?);
                }
                let inputs = CoidealInputs { trials: o.trials, ..Default::default() };
                theorem(id, verify_coideal_theorem(id, cs_cache.as_ref().unwrap(), &inputs, o.seed))?
            }
            Family::Modalg => {
                if ma_cache.is_none() {
                    ma_cache = Some(match load(f, need(&v.modalg, "modalg", id)?)? {
                        Structure::ModuleAlgebra(ma) => ma,
                        other => return Err(CliError::Usage(format!("--modalg expects a module algebra, got a {}", other.kind().name()))),
                    });
                }
                let inputs = ModalgInputs { trials: o.trials, ..Default::default() };
                theorem(id, verify_modalg_theorem(id, ma_cache.as_ref().unwrap(), &inputs, o.seed))?
            }
            Family::Fitting => {
                if fit_cache.is_none() {
                    let mut fi = if let Some(c) = &v.comodalg {
                        FittingInputs::for_comodule_algebra(&load_comodalg(f, c)?, o.seed)?
                    } else {
                        let arg = need(&v.algebra, "algebra or --comodalg", id)?;
                        let s = load(f, arg)?;
                        FittingInputs::for_algebra(algebra_of(&s, arg)?, o.seed)?
                    };
                    fi.trials = o.trials;
                    fit_cache = Some(fi);
                }
                theorem(id, verify_fitting_property(id, fit_cache.as_ref().unwrap()))?
            }
            Family::Other if id == "ni89b" => guard(id, ni89b_section(f))?,
            Family::Other => single(
                "localization",
                "right localizability of semiprime ideals",
                "",
                Check::new("localization", "any module algebra").conclude("open question; this tool has no finite certificate for it", Status::Inconclusive),
            ),
        };
        out.push(sec);
    }
    Ok(out)
}

fn load_comodalg<F: Field>(f: &F, arg: &str) -> CliResult<ComoduleAlgebra<F>> {
    match load(f, arg)? {
        Structure::ComoduleAlgebra(ca) => Ok(ca),
        Structure::Hopf(h) => Ok(ComoduleAlgebra::regular(&h)),
        other => Err(CliError::Usage(format!("--comodalg expects a comodule algebra, got a {}", other.kind().name()))),
    }
}

fn extra_battery<F: Field>(f: &F, ca: &ComoduleAlgebra<F>, files: &[String]) -> CliResult<Vec<(String, fdhopf_core::comodalg::HopfModule<F::Elem>)>> {
    let mut out = Vec::new();
    for path in files {
        match load(f, path)? {
            Structure::HopfModule(ca2, m) if ca2.algebra() == ca.algebra() && ca2.rho() == ca.rho() => out.push((path.clone(), m)),
            Structure::HopfModule(..) => return Err(CliError::Usage(format!("{path} is a Hopf module over a different comodule algebra"))),
            other => return Err(CliError::Usage(format!("{path} is a {}, expected a hopf_module", other.kind().name()))),
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

/// Re-runs the command recorded in a JSON report, checks that the result
/// is identical, and re-verifies each structured witness from the inputs
/// alone.
pub fn replay(path: &str) -> CliResult<Report> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    let old = Report::from_json(&text).map_err(|e| CliError::Parse { source_name: path.to_string(), error: e.into() })?;
    let cmd = old.invocation.command.clone();
    let cli = Cli::try_parse_from(std::iter::once("fdhopf".to_string()).chain(cmd.iter().cloned())).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut report = Report::new(Invocation {
        command: vec!["replay".into(), path.to_string()],
        seed: old.invocation.seed,
        trials: old.invocation.trials,
        field: old.invocation.field.clone(),
        versions: Versions::default(),
    });
    let mut sec = Section::new("replay", "replay: re-run and re-verify", format!("replays `fdhopf {}`", cmd.join(" ")));
    let rerun = run_parsed(&cli, cmd.clone())?;
    let same = rerun.report.as_ref().is_some_and(|r| r.sections == old.sections && r.status == old.status);
    sec.push(&Check::new("rerun", "recorded command").conclude(if same { "identical sections" } else { "sections differ from the recorded report" }, Status::from_bool(same)));
    let field = resolve_field(&cli)?;
    for s in &old.sections {
        for c in with_field!(&field, |f| reverify(f, &cli, s))? {
            sec.push(&c);
        }
    }
    report.push(sec);
    Ok(report)
}

/// Checks the structured witnesses of one recorded section against freshly
/// loaded inputs, using only the validators.
fn reverify<F: Field>(f: &F, cli: &Cli, s: &Section) -> CliResult<Vec<Check>> {
    let d = &s.data;
    let mut out = Vec::new();
    let check = |id: &str, ok: bool, what: &str| Check::new(format!("{}/{id}", s.id), what.to_string()).conclude(if ok { "re-verified" } else { "witness fails" }, Status::from_bool(ok));
    match (&cli.command, s.id.as_str()) {
        (Command::Free { module, over }, "free") if d["free"] == json!(true) => {
            let (a, m, _) = load_module(f, module, over)?;
            let basis: Option<Vec<Vec<F::Elem>>> = d["basis"].as_array().and_then(|b| b.iter().map(|v| parse_vec(f, v)).collect());
            out.push(check("basis", basis.is_some_and(|b| verify_free_basis(&a, &m, &b)), "A^n → M is bijective on the recorded basis"));
        }
        (Command::Projective { module, over }, "projective") if d["projective"] == json!(true) => {
            let (a, m, _) = load_module(f, module, over)?;
            let gens: Option<Vec<Vec<F::Elem>>> = d["generators"].as_array().and_then(|b| b.iter().map(|v| parse_vec(f, v)).collect());
            let sigma = parse_matrix(f, &d["sigma"]);
            let ok = match (gens, sigma) {
                (Some(g), Some(sigma)) => {
                    let pi = fdhopf_core::fitting::presentation_map(&a, &m, &g);
                    sigma.rows() == pi.cols() && pi.mul(f, &sigma) == Matrix::identity(f, m.dim()) && is_homomorphism(f, &m, &free_module(&a, m.side(), g.len()), &sigma)
                }
                _ => false,
            };
            out.push(check("splitting", ok, "the recorded section splits A^g → M and is A-linear"));
        }
        (Command::Frobenius { input }, "frobenius") if d["frobenius"] == json!(true) => {
            let st = load(f, input)?;
            let a = algebra_of(&st, input)?;
            let ok = parse_vec(f, &d["functional"]).is_some_and(|l| l.len() == a.dim() && gram_matrix(a, &l).inverse(f).is_some());
            out.push(check("functional", ok, "the recorded functional has a nondegenerate Gram matrix"));
        }
        (Command::Coideal { hopf, span, anti }, "coideal") => {
            let cs = coideal_from_args(f, hopf, Some(span), *anti)?;
            for side in [Side::Right, Side::Left] {
                let key = format!("basis_{}", side.name());
                if let Some(b) = d[&key].as_array() {
                    let basis: Option<Vec<Vec<F::Elem>>> = b.iter().map(|v| parse_vec(f, v)).collect();
                    let m = cs.hopf_as_module(side);
                    out.push(check(&key, basis.is_some_and(|b| verify_free_basis(cs.algebra(), m.module(), &b)), "H is free over A on the recorded basis"));
                }
            }
            if let Some(l) = parse_vec(f, &d["functional"]) {
                out.push(check("functional", gram_matrix(cs.algebra(), &l).inverse(f).is_some(), "the recorded Frobenius functional is nondegenerate"));
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Process entry point: prints the outcome and returns the exit code.
pub fn main_with_args(args: Vec<String>) -> i32 {
    match Cli::try_parse_from(std::iter::once("fdhopf".to_string()).chain(args.iter().cloned())) {
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            code
        }
        Ok(cli) => match run_parsed(&cli, args) {
            Ok(out) => {
                print!("{}", out.text);
                out.exit_code
            }
            Err(e) => {
                eprintln!("error: {e}");
                if let CliError::Validation { report, .. } = &e {
                    for v in report.violations.iter().take(20) {
                        eprintln!("  {} {:?}: {}", v.axiom, v.indices, v.detail);
                    }
                }
                e.exit_code()
            }
        },
    }
}
