//! Command-line front end: verification suites, scenario files and
//! coefficient listings.
//!
//! Exit codes are 0 when every check passes, 1 when a check fails and 2 for
//! usage or input errors.

pub mod commands;
pub mod error;
pub mod io;
pub mod report;
pub mod suites;

pub use error::{CliError, CliResult};
pub use io::{load_scenario, parse_scenario, save_scenario};
pub use report::{Entry, Summary, VerifyReport};
pub use suites::{run_suite, Suite};
