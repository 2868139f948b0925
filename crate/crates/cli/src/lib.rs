//! Instance parsing, command dispatch and report emission for the `pqn`
//! tool.

pub mod commands;
pub mod instance;
pub mod report;

pub use commands::{execute, exit_code, render, run_command, Cli, Command, Format};
pub use instance::{parse_instance, Instance, InstanceDocument, InstanceError};
pub use report::ReportDocument;
