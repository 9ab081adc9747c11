//! File-based front end for `qta-core`: JSON documents in, reports out.
//!
//! Exit statuses: 0 when every check passes, 1 when a check fails, 2 on
//! input errors.

pub mod catalog;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use commands::{execute, run, Cli, Command, Outcome, Settings};
pub use document::{parse, print, Document};
pub use error::{CliError, CliResult};
pub use report::{Report, Verdict};
