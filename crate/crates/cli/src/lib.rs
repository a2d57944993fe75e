//! Command-line front-end for `cremona-core`: argument types, command
//! dispatch, rendering and the `verify-all` suites.

pub mod commands;
pub mod report;
pub mod suite;

pub use commands::{run_command, Command, UsageError, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
pub use report::{Format, Report};
