//! Serialization schema and command-line driver for the finite bicategory
//! kernel. Every command is a thin wrapper over `bicat-core`; results are
//! identical to direct library calls.

pub mod commands;
pub mod schema;

pub use commands::{run, Cli};
pub use schema::{CliError, Document};
