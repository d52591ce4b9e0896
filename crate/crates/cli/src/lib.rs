//! Text format, JSON reports and command dispatch for `exactlim-core`.

pub mod commands;
pub mod dsl;
pub mod report;
pub mod workspace;

pub use commands::{execute, run, Cli};
pub use workspace::{DslError, Workspace};
