//! Command-line front end for `ccrop-core`: JSON configs, verification
//! suites and deterministic reports.

pub mod cli;
pub mod codec;
pub mod config;
pub mod error;
pub mod psd;
pub mod report;
pub mod sampling;
pub mod suites;

pub use error::{CliError, CliResult};

/// Exit code for unreadable or invalid input.
pub const EXIT_INPUT: i32 = 3;
