//! Validated run configuration shared by every subcommand.

use std::path::PathBuf;

use clap::ValueEnum;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Table,
    Verify,
    Bijections,
    Diagnostics,
    Export,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Checks run by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Target {
    Unimodality,
    LogConcavity,
    LogConcavitySupport,
    Cor52,
    Identities,
    OsptBounds,
    Conjecture,
    U45Bounds,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::Unimodality,
        Target::LogConcavity,
        Target::LogConcavitySupport,
        Target::Cor52,
        Target::Identities,
        Target::OsptBounds,
        Target::Conjecture,
        Target::U45Bounds,
    ];

    /// Upper weight used when `--n-max` is not given.
    pub fn default_n_max(self) -> usize {
        match self {
            Target::Unimodality | Target::OsptBounds => 300,
            Target::LogConcavity | Target::LogConcavitySupport => 500,
            Target::Cor52 | Target::Identities => 200,
            Target::Conjecture => 2000,
            Target::U45Bounds => 50,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Unimodality => "unimodality",
            Target::LogConcavity => "log-concavity",
            Target::LogConcavitySupport => "log-concavity-support",
            Target::Cor52 => "cor52",
            Target::Identities => "identities",
            Target::OsptBounds => "ospt-bounds",
            Target::Conjecture => "conjecture",
            Target::U45Bounds => "u45-bounds",
        }
    }
}

/// Upper end of the conjecture range with `--conjecture-full`.
pub const CONJECTURE_FULL_N: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("--threads must be at least 1")]
    ZeroThreads,
    #[error("--n-max {n_max} is below the smallest weight {min} the command needs")]
    NMaxTooSmall { n_max: usize, min: usize },
    #[error("{0} needs an output path (--output)")]
    MissingOutput(&'static str),
    #[error("diagnostic weights must be positive")]
    ZeroPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` picks each command's or target's default range.
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub targets: Vec<Target>,
    pub format: Format,
    pub cache_path: Option<PathBuf>,
    pub threads: usize,
    pub output: Option<PathBuf>,
    /// Weights at which `diagnostics` reports ratios.
    pub points: Vec<usize>,
    pub conjecture_full: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            n_max: None,
            m_max: None,
            targets: Vec::new(),
            format: Format::Csv,
            cache_path: None,
            threads: 1,
            output: None,
            points: vec![100, 300, 500],
            conjecture_full: false,
        }
    }

    /// `UNIMODAL_CACHE` wins over `--cache-path`.
    pub fn with_env_cache(mut self) -> Self {
        if let Some(p) = std::env::var_os("UNIMODAL_CACHE").filter(|p| !p.is_empty()) {
            self.cache_path = Some(PathBuf::from(p));
        }
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.threads == 0 {
            return Err(ConfigError::ZeroThreads);
        }
        if self.command == Command::Export && self.output.is_none() {
            return Err(ConfigError::MissingOutput("export"));
        }
        if self.command == Command::Diagnostics && self.points.contains(&0) {
            return Err(ConfigError::ZeroPoint);
        }
        Ok(())
    }

    /// Targets to run, in canonical order; all of them when none were named.
    pub fn selected_targets(&self) -> Vec<Target> {
        let mut t = if self.targets.is_empty() { Target::ALL.to_vec() } else { self.targets.clone() };
        t.sort();
        t.dedup();
        t
    }
}
