//! `unimodal`: tables, verification suites, map checks and exports for rank
//! statistics of strongly unimodal sequences.
//!
//! Exit status: 0 when everything passed, 1 when a check failed, 2 on a
//! usage, configuration or cache error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use unimodal_cli::{run, Command, Format, RunConfig, Target};

#[derive(Parser)]
#[command(name = "unimodal", version, about = "Rank statistics of strongly unimodal sequences")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Table cache file; UNIMODAL_CACHE overrides it.
    #[arg(long, global = true)]
    cache_path: Option<PathBuf>,
}

#[derive(Args)]
struct Range {
    /// Largest weight n.
    #[arg(long)]
    n_max: Option<usize>,

    /// Largest rank m.
    #[arg(long)]
    m_max: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print n, p, N0, M0, ospt and u(m, n) for m = 0..m_max.
    Table {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run exact checks; JSON report on stdout, summary on stderr.
    Verify {
        #[command(flatten)]
        range: Range,
        /// Comma-separated checks (default: all).
        #[arg(long, value_enum, value_delimiter = ',')]
        targets: Vec<Target>,
        /// Extend the conjecture check to n = 10000.
        #[arg(long)]
        conjecture_full: bool,
    },
    /// Verify every map and the worked examples; `--m-max` bounds Phi's m.
    Bijections {
        #[command(flatten)]
        range: Range,
    },
    /// Ratios of exact values to asymptotic main terms.
    Diagnostics {
        /// Weights to report.
        #[arg(long, value_delimiter = ',', default_values_t = [100, 300, 500])]
        at: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Write the table to a file.
    Export {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, short)]
        output: PathBuf,
    },
}

fn config(cli: Cli) -> RunConfig {
    let base = |command| RunConfig {
        threads: cli.threads,
        cache_path: cli.cache_path.clone(),
        ..RunConfig::new(command)
    };
    let with_range = |cfg: RunConfig, r: Range| RunConfig { n_max: r.n_max, m_max: r.m_max, ..cfg };
    let cfg = match cli.command {
        Cmd::Table { range, format } => RunConfig { format, ..with_range(base(Command::Table), range) },
        Cmd::Verify { range, targets, conjecture_full } => {
            RunConfig { targets, conjecture_full, ..with_range(base(Command::Verify), range) }
        }
        Cmd::Bijections { range } => with_range(base(Command::Bijections), range),
        Cmd::Diagnostics { at, format } => RunConfig { points: at, format, ..base(Command::Diagnostics) },
        Cmd::Export { range, format, output } => {
            RunConfig { format, output: Some(output), ..with_range(base(Command::Export), range) }
        }
    };
    cfg.with_env_cache()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = config(cli);
    let mut out = std::io::stdout();
    let mut log = std::io::stderr();
    match run(&cfg, &mut out, &mut log) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", anyhow::Error::new(e));
            ExitCode::from(2)
        }
    }
}
