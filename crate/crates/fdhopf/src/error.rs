use std::fmt;

use fdhopf_core::report::ValidationReport;

/// Position of a syntax or scalar error in a presentation file. Line and
/// column are 1-based; 0 means the error was found after parsing and
/// `location` names the offending entry instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub location: String,
    pub message: String,
}

impl ParseError {
    pub fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError { line: 0, column: 0, location: location.into(), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        } else {
            write!(f, "{}: {}", self.location, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; the position is kept separately.
        let msg = e.to_string();
        let message = match msg.rfind(" at line ") {
            Some(i) => msg[..i].to_string(),
            None => msg,
        };
        ParseError { line: e.line(), column: e.column(), location: String::new(), message }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}: {error}")]
    Parse { source_name: String, error: ParseError },
    /// Bad command line or unreadable input.
    #[error("{0}")]
    Usage(String),
    #[error("{what} fails validation ({} violations); first: {}", report.violations.len(), first_violation(report))]
    Validation { what: String, report: ValidationReport },
    #[error(transparent)]
    Core(#[from] fdhopf_core::Error),
}

fn first_violation(r: &ValidationReport) -> String {
    r.violations.first().map(|v| format!("{}: {}", v.axiom, v.detail)).unwrap_or_default()
}

impl CliError {
    /// Process exit code for the failure class.
    pub fn exit_code(&self) -> i32 {
        use fdhopf_core::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => 1,
            CliError::Validation { .. } => 2,
            CliError::Core(e) => match e {
                E::Parse(_) | E::Input(_) | E::DimensionMismatch(_) | E::FieldMismatch(..) => 1,
                E::NotCoideal(_) => 2,
                E::HypothesisFailure { .. } | E::Refused(_) => 3,
                E::Inconclusive(_) => 5,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
