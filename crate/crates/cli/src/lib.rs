//! Command-line front end for `chorded-spectra-core`: graph input, JSON and
//! TSV output, the parallel enumeration lab, and the subcommands.

pub mod commands;
pub mod input;
pub mod output;
pub mod parallel;

pub use commands::{CliError, CommandResult, Status};
