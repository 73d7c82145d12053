//! File formats, reports and the command-line front end for `cloneforge-core`.
//!
//! Algebras, group tables and reports are JSON with sorted keys. Every report
//! embeds its input algebra so that `cloneforge --replay` can recheck it alone.

pub mod cli;
pub mod error;
pub mod format;
pub mod report;

pub use cli::{run, Cli, Command};
pub use error::{CliError, Result};
pub use format::{algebra_to_json, AlgebraFile, parse_algebra, parse_algebra_str, parse_group, parse_group_str, to_canonical_json};
pub use report::{replay, Report};
