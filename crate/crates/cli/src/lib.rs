//! Library side of the `unimodal` command: run configuration, table export,
//! the on-disk cache and the subcommands themselves.

pub mod cache;
pub mod commands;
pub mod config;
pub mod export;

pub use commands::run;
pub use config::{Command, ConfigError, Format, RunConfig, Target};
