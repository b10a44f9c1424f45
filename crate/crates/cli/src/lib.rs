//! Document format and command implementations behind the `tricalc` binary.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, Failure, Outcome};
pub use format::{parse, serialize, DocError, Document};
