//! Command-line front end for `fdhopf-core`: presentation files, reports
//! and the `fdhopf` binary.

pub mod cli;
pub mod error;
pub mod format;
pub mod report;

pub use error::{CliError, CliResult, ParseError};
