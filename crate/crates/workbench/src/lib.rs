//! Workbench library: serialization, verification reports, and the
//! check suites behind the command-line front end.

pub mod config;
pub mod io;
pub mod report;
pub mod suites;

pub use config::WorkbenchConfig;
pub use io::{export_algebra, import_algebra, AlgebraJson, WorkbenchError};
pub use report::{Check, VerificationReport};
pub use suites::{run_suite, SUITES};
