//! Instance files, reports and the experiment harness behind the
//! `matroid-biopt` binary.

pub mod commands;
pub mod error;
pub mod experiment;
pub mod format;
pub mod report;

pub use commands::{solve, Algorithm, SolveOptions};
pub use error::{CliError, CliResult};
pub use format::{parse, write, InstanceFile};
pub use report::Report;
