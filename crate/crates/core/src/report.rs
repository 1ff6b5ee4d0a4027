//! Validation reports and theorem-check records shared by every module.

use alloc::string::String;
use alloc::vec::Vec;

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Short axiom name, e.g. `"associativity"`.
    pub axiom: String,
    /// Basis indices locating the instance.
    pub indices: Vec<usize>,
    /// Human-readable description naming the basis elements.
    pub detail: String,
}

/// Outcome of checking the axioms of a structure. Empty iff valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
    pub fn push(&mut self, axiom: &str, indices: Vec<usize>, detail: String) {
        self.violations.push(Violation { axiom: axiom.into(), indices, detail });
    }
    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
    /// Prefixes every axiom name, used when combining sub-reports.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.axiom = alloc::format!("{prefix}.{}", v.axiom);
        }
        self
    }
    pub fn count(&self, axiom: &str) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }
}

/// Outcome of one check inside a theorem run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    HypothesisFailure,
    Inconclusive,
    /// A randomized search missed; `bound` is the miss probability bound.
    Unknown { bound: String },
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisFailure => "hypothesis-failure",
            Status::Inconclusive => "inconclusive",
            Status::Unknown { .. } => "unknown-probabilistic",
        }
    }

    /// Higher is worse; used to aggregate statuses.
    fn severity(&self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Unknown { .. } => 1,
            Status::Inconclusive => 2,
            Status::HypothesisFailure => 3,
            Status::Fail => 4,
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One verified statement about one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// What the check was run on.
    pub subject: String,
    /// Hypotheses established before the conclusion was tested, each with
    /// how it was established.
    pub hypotheses: Vec<String>,
    pub conclusion: String,
    pub witnesses: Vec<String>,
    pub status: Status,
}

impl Check {
    pub fn new(id: impl Into<String>, subject: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            subject: subject.into(),
            hypotheses: Vec::new(),
            conclusion: String::new(),
            witnesses: Vec::new(),
            status: Status::Pass,
        }
    }
    pub fn hypothesis(mut self, h: impl Into<String>) -> Self {
        self.hypotheses.push(h.into());
        self
    }
    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }
    pub fn conclude(mut self, conclusion: impl Into<String>, status: Status) -> Self {
        self.conclusion = conclusion.into();
        self.status = status;
        self
    }
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Result of a theorem driver: the checks it ran, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    /// One-line statement of what is verified.
    pub statement: String,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>, statement: impl Into<String>) -> Self {
        TheoremReport { theorem: theorem.into(), statement: statement.into(), checks: Vec::new() }
    }
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
    /// The worst status among the checks; `Pass` when there are none.
    pub fn status(&self) -> Status {
        self.checks.iter().map(|c| &c.status).max_by_key(|s| s.severity()).cloned().unwrap_or(Status::Pass)
    }
    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
