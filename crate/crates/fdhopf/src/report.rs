//! Run reports: a versioned JSON schema and a markdown rendering.
//!
//! The JSON form is deterministic for a fixed command line and seed; the
//! only field that may differ between runs is the optional `timestamp`.

use serde::{Deserialize, Serialize};

use fdhopf_core::report::{Check, Status, TheoremReport};

pub const SCHEMA: &str = "fdhopf.report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Versions {
    pub fdhopf: String,
    pub fdhopf_core: String,
}

impl Default for Versions {
    fn default() -> Self {
        Versions { fdhopf: env!("CARGO_PKG_VERSION").into(), fdhopf_core: fdhopf_core::VERSION.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Invocation {
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub seed: u64,
    pub trials: u64,
    pub field: String,
    pub versions: Versions,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub subject: String,
    pub hypotheses: Vec<String>,
    pub conclusion: String,
    pub witnesses: Vec<String>,
    pub status: String,
    /// Miss probability bound of an unsuccessful randomized search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            id: c.id.clone(),
            subject: c.subject.clone(),
            hypotheses: c.hypotheses.clone(),
            conclusion: c.conclusion.clone(),
            witnesses: c.witnesses.clone(),
            status: c.status.name().into(),
            bound: match &c.status {
                Status::Unknown { bound } => Some(bound.clone()),
                _ => None,
            },
        }
    }
}

impl CheckRecord {
    pub fn status(&self) -> Status {
        status_from_name(&self.status, self.bound.clone())
    }
}

fn status_from_name(name: &str, bound: Option<String>) -> Status {
    match name {
        "pass" => Status::Pass,
        "fail" => Status::Fail,
        "hypothesis-failure" => Status::HypothesisFailure,
        "inconclusive" => Status::Inconclusive,
        _ => Status::Unknown { bound: bound.unwrap_or_default() },
    }
}

/// One command or theorem run inside a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub id: String,
    /// Short name of the statement checked, used as the heading.
    pub anchor: String,
    pub statement: String,
    pub status: String,
    pub checks: Vec<CheckRecord>,
    /// Structured witnesses that `replay` re-verifies.
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
}

impl Section {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, statement: impl Into<String>) -> Self {
        Section { id: id.into(), anchor: anchor.into(), statement: statement.into(), status: "pass".into(), checks: Vec::new(), data: serde_json::Value::Null }
    }

    pub fn from_theorem(r: &TheoremReport) -> Self {
        let mut s = Section::new(r.theorem.clone(), anchor(&r.theorem), r.statement.clone());
        for c in &r.checks {
            s.push(c);
        }
        s
    }

    pub fn push(&mut self, c: &Check) {
        self.checks.push(c.into());
        self.status = worst(self.checks.iter().map(|c| c.status())).name().into();
    }

    pub fn with_data(mut self, data: serde_json::Value) -> Self {
        self.data = data;
        self
    }

    pub fn status(&self) -> Status {
        worst(self.checks.iter().map(|c| c.status()))
    }
}

fn severity(s: &Status) -> u8 {
    match s {
        Status::Pass => 0,
        Status::Unknown { .. } => 1,
        Status::Inconclusive => 2,
        Status::HypothesisFailure => 3,
        Status::Fail => 4,
    }
}

fn worst(it: impl Iterator<Item = Status>) -> Status {
    it.max_by_key(severity).unwrap_or(Status::Pass)
}

/// Short names for the checked statements, keyed by CLI token.
pub fn anchor(id: &str) -> String {
    let name = match id {
        "3.5" => "projectivity of Hopf modules over an H-simple comodule algebra",
        "3.6" => "freeness when some quotient by a maximal ideal is a division ring",
        "3.7" => "clean maximal ideals force H-simplicity",
        "3.8" => "tensoring with a simple algebra preserves H-simplicity",
        "4.2" => "H-simple comodule algebras are Frobenius",
        "5.2" => "quasi-Frobenius and semisimple H-simple comodule algebras",
        "5.3" => "the intersection of the maximal ideals is costable",
        "5.4" => "dimension divisibility for Hopf modules",
        "6.1i" => "coideal subalgebras are Frobenius and H-simple",
        "6.1ii" => "H is free over a coideal subalgebra on both sides",
        "6.1iii" => "Hopf modules over A against comodules over the quotient coalgebras",
        "6.1iv" => "normal bases for H over A",
        "6.2" => "exactness of the equivalence for right Hopf modules",
        "6.3" => "subcoalgebra criterion for normal bases",
        "6.4" => "normal bases of supplied Hopf modules",
        "7.1" => "weak finiteness of convolution algebras",
        "7.2" => "generators of Hom(H, M) over the convolution algebra",
        "7.3" => "stable ideal sandwiches for module algebras",
        "7.6" => "projectivity and freeness over H-simple module algebras",
        "7.7" => "smash product modules are projective over A",
        "F1" => "Fitting ideals under base change",
        "F2" => "projective of constant rank via Fitting ideals",
        "P1.1" => "Fitting ideals of Hopf modules are costable",
        "C1.6" => "constant rank over an H-simple commutative base",
        "ni89b" => "weak finiteness counterexample certificate",
        "localization" => "right localizability of semiprime ideals",
        _ => return id.to_string(),
    };
    format!("{id}: {name}")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub schema_version: u32,
    pub invocation: Invocation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub status: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(invocation: Invocation) -> Self {
        Report { schema: SCHEMA.into(), schema_version: SCHEMA_VERSION, invocation, timestamp: None, status: "pass".into(), sections: Vec::new() }
    }

    pub fn push(&mut self, s: Section) {
        self.sections.push(s);
        self.status = self.status().name().into();
    }

    pub fn status(&self) -> Status {
        worst(self.sections.iter().map(|s| s.status()))
    }

    /// 0 when every check passed, else the code of the worst status.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 4,
            Status::HypothesisFailure => 3,
            Status::Inconclusive | Status::Unknown { .. } => 5,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let inv = &self.invocation;
        out.push_str("# fdhopf report\n\n");
        out.push_str(&format!("- command: `fdhopf {}`\n", inv.command.join(" ")));
        out.push_str(&format!("- field: {}, seed: {}, trials: {}\n", inv.field, inv.seed, inv.trials));
        out.push_str(&format!("- fdhopf {} (core {})\n", inv.versions.fdhopf, inv.versions.fdhopf_core));
        if let Some(t) = &self.timestamp {
            out.push_str(&format!("- timestamp: {t}\n"));
        }
        out.push_str(&format!("- status: **{}**\n", self.status));
        for s in &self.sections {
            out.push_str(&format!("\n## {}\n\n", s.anchor));
            if !s.statement.is_empty() {
                out.push_str(&format!("{}\n\n", s.statement));
            }
            out.push_str(&format!("Status: **{}**\n", s.status));
            for c in &s.checks {
                out.push_str(&format!("\n### {} [{}]\n\n", c.id, c.status));
                out.push_str(&format!("- subject: {}\n", c.subject));
                for h in &c.hypotheses {
                    out.push_str(&format!("- hypothesis: {h}\n"));
                }
                out.push_str(&format!("- conclusion: {}\n", c.conclusion));
                if let Some(b) = &c.bound {
                    out.push_str(&format!("- miss probability bound: {b}\n"));
                }
                for w in &c.witnesses {
                    out.push_str(&format!("- witness: {w}\n"));
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Markdown,
}

pub fn emit_report(r: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => r.to_json(),
        OutputFormat::Markdown => r.to_markdown(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv() -> Invocation {
        Invocation { command: vec!["catalog".into()], seed: 0, trials: 1, field: "Q".into(), versions: Versions::default() }
    }

    #[test]
    fn empty_report_is_valid() {
        let r = Report::new(inv());
        assert_eq!(r.exit_code(), 0);
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_markdown().contains("status: **pass**"));
    }

    #[test]
    fn worst_status_wins() {
        let mut r = Report::new(inv());
        let mut s = Section::new("x", "x", "");
        s.push(&Check::new("a", "s").conclude("ok", Status::Pass));
        s.push(&Check::new("b", "s").conclude("missed", Status::Unknown { bound: "1/8".into() }));
        r.push(s.clone());
        assert_eq!(r.exit_code(), 5);
        s.push(&Check::new("c", "s").conclude("broken", Status::Fail));
        r.push(s);
        assert_eq!(r.exit_code(), 4);
        assert_eq!(r.status, "fail");
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back.sections[0].checks[1].bound.as_deref(), Some("1/8"));
    }
}
