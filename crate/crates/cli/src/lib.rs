//! Command-line front end for `coordring`: an expression parser, JSON and
//! text reports, and the `coordring` subcommands.

pub mod app;
pub mod config;
pub mod error;
pub mod expr;
pub mod report;

pub use app::{run, run_command, Cli, Outcome};
pub use error::CliError;
pub use expr::{parse_expression, Universe};
pub use report::Report;
