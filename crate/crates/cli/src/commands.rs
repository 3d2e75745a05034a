//! The subcommands. Each writes its main output to `out`, a human summary to
//! `log`, and returns whether every check passed.

use std::fs;
use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;
use unimodal_core::maps::{check_goldens, verify_suite, GoldenResult, MapId, VerificationReport};
use unimodal_core::stats::{self, CheckReport, StatTable};

use crate::cache::{self, CacheError};
use crate::config::{Command, ConfigError, Format, RunConfig, Target, CONJECTURE_FULL_N};
use crate::export;

const TABLE_DEFAULT_N: usize = 100;
const TABLE_DEFAULT_M: usize = 3;
const UNIMODALITY_DEFAULT_M: usize = 8;
const BIJECTION_DEFAULT_N: usize = 45;
const PHI_DEFAULT_M: usize = 4;
const CONJECTURE_LO: usize = 8;
/// Failures printed per report in the summary.
const SUMMARY_FAILURES: usize = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

/// Runs `cfg` inside a worker pool of `cfg.threads` threads.
pub fn run(
    cfg: &RunConfig,
    out: &mut (dyn Write + Send),
    log: &mut (dyn Write + Send),
) -> Result<bool, CliError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| CliError::Pool(e.to_string()))?;
    pool.install(|| match cfg.command {
        Command::Table => cmd_table(cfg, out).map(|()| true),
        Command::Export => cmd_export(cfg, log).map(|()| true),
        Command::Verify => cmd_verify(cfg, out, log),
        Command::Bijections => cmd_bijections(cfg, out, log),
        Command::Diagnostics => cmd_diagnostics(cfg, out).map(|()| true),
    })
}

fn render_table(cfg: &RunConfig) -> Result<String, CliError> {
    let n_max = cfg.n_max.unwrap_or(TABLE_DEFAULT_N);
    let m_max = cfg.m_max.unwrap_or(TABLE_DEFAULT_M);
    let table = cache::table(cfg.cache_path.as_deref(), n_max, m_max)?;
    Ok(match cfg.format {
        Format::Csv => export::to_csv(&table, m_max),
        Format::Json => export::to_json(&table, m_max),
    })
}

fn cmd_table(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    out.write_all(render_table(cfg)?.as_bytes())?;
    Ok(())
}

fn cmd_export(cfg: &RunConfig, log: &mut dyn Write) -> Result<(), CliError> {
    let path = cfg.output.as_ref().ok_or(ConfigError::MissingOutput("export"))?;
    let text = render_table(cfg)?;
    fs::write(path, &text)?;
    writeln!(log, "wrote {} bytes to {}", text.len(), path.display())?;
    Ok(())
}

/// Largest `|m|` whose log-concavity threshold `|m|(|m|+1)/2 + 1` is at most `n`.
fn log_concavity_m(n: usize) -> usize {
    let mut m = 0;
    while (m + 1) * (m + 2) / 2 < n {
        m += 1;
    }
    m
}

fn target_range(cfg: &RunConfig, t: Target) -> usize {
    if t == Target::Conjecture && cfg.conjecture_full {
        return CONJECTURE_FULL_N;
    }
    cfg.n_max.unwrap_or_else(|| t.default_n_max())
}

fn target_m(cfg: &RunConfig, t: Target, n: usize) -> usize {
    match t {
        Target::Unimodality => cfg.m_max.unwrap_or(UNIMODALITY_DEFAULT_M),
        Target::LogConcavity | Target::LogConcavitySupport => log_concavity_m(n),
        _ => 1,
    }
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write, log: &mut dyn Write) -> Result<bool, CliError> {
    let targets = cfg.selected_targets();
    let n_need = targets.iter().map(|&t| target_range(cfg, t)).max().unwrap_or(0);
    let m_need = targets.iter().map(|&t| target_m(cfg, t, target_range(cfg, t)) + 1).max().unwrap_or(1);
    let table = cache::table(cfg.cache_path.as_deref(), n_need, m_need)?;
    let dp_n = targets
        .iter()
        .filter(|t| matches!(t, Target::Cor52 | Target::Identities))
        .map(|&t| target_range(cfg, t))
        .max();
    let (ranks, cranks) = match dp_n {
        Some(n) => {
            let (r, c) = rayon::join(|| stats::rank_counts(n, n), || stats::crank_counts(n, n));
            (Some(r), Some(c))
        }
        None => (None, None),
    };
    let mut reports: Vec<CheckReport> = Vec::new();
    for &t in &targets {
        let n = target_range(cfg, t);
        let m = target_m(cfg, t, n);
        let r = match t {
            Target::Unimodality => stats::check_unimodality(&table, n, m),
            Target::LogConcavity => stats::check_log_concavity(&table, n, m),
            Target::LogConcavitySupport => stats::check_log_concavity_on_support(&table, n, m),
            Target::Cor52 => stats::check_identity_cor52(&table, ranks.as_ref().expect("built"), 2, n),
            Target::Identities => stats::check_identities(
                &table,
                ranks.as_ref().expect("built"),
                cranks.as_ref().expect("built"),
                2,
                n,
            ),
            Target::OsptBounds => stats::check_ospt_bounds(&table, n),
            Target::Conjecture => stats::check_conjecture(&table, CONJECTURE_LO, n),
            Target::U45Bounds => stats::check_u45_bounds(&table, 1, n),
        };
        summarize_check(log, &r)?;
        reports.push(r);
    }
    let passed = reports.iter().all(CheckReport::passed);
    write_json(out, &reports)?;
    Ok(passed)
}

fn summarize_check(log: &mut dyn Write, r: &CheckReport) -> io::Result<()> {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(
        log,
        "{verdict} {} n={}..{} checked={} failures={} notes={}",
        r.name,
        r.n_lo,
        r.n_hi,
        r.checked,
        r.failures.len(),
        r.notes.len()
    )?;
    for f in r.failures.iter().take(SUMMARY_FAILURES) {
        let m = f.m.map(|m| format!(" m={m}")).unwrap_or_default();
        writeln!(log, "    n={}{m}: {}", f.n, f.detail)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct BijectionReport<'a> {
    maps: &'a [VerificationReport],
    goldens: &'a [GoldenResult],
}

fn cmd_bijections(cfg: &RunConfig, out: &mut dyn Write, log: &mut dyn Write) -> Result<bool, CliError> {
    let n_max = cfg.n_max.unwrap_or(BIJECTION_DEFAULT_N);
    let phi_m = cfg.m_max.unwrap_or(PHI_DEFAULT_M) as u32;
    let ids = MapId::all(phi_m);
    let reports = verify_suite(&ids, 1, n_max as u32);
    for r in &reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            log,
            "{verdict} {} n={}..{} domain={} image={} target={} failures={} witnesses={}",
            r.map,
            r.n_lo,
            r.n_hi,
            r.total_domain(),
            r.total_image(),
            r.total_target(),
            r.failure_count,
            r.witnesses.len()
        )?;
        for f in r.failures.iter().take(SUMMARY_FAILURES) {
            writeln!(log, "    n={} {:?} {}: {}", f.n, f.kind, f.input, f.detail)?;
        }
    }
    let goldens = check_goldens();
    for g in &goldens {
        let verdict = if g.passed() { "PASS" } else { "FAIL" };
        writeln!(log, "{verdict} golden {} n={}", g.map, g.n)?;
        if let Some(d) = &g.detail {
            writeln!(log, "    {d}")?;
        }
    }
    let passed = reports.iter().all(VerificationReport::passed) && goldens.iter().all(GoldenResult::passed);
    write_json(out, &BijectionReport { maps: &reports, goldens: &goldens })?;
    Ok(passed)
}

fn cmd_diagnostics(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let n_need = cfg.points.iter().copied().max().unwrap_or(0);
    let table: StatTable = cache::table(cfg.cache_path.as_deref(), n_need, 2)?;
    let rows = stats::asymptotic_diagnostics(&table, &cfg.points);
    match cfg.format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "n",
                "u0_ratio",
                "diff_ratio_m0",
                "diff_ratio_m1",
                "logc_ratio_768",
                "logc_ratio_786",
                "ospt_ratio",
            ])
            .map_err(io::Error::other)?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.u0_ratio.to_string(),
                    r.diff_ratio[0].to_string(),
                    r.diff_ratio[1].to_string(),
                    r.logc_ratio_768.to_string(),
                    r.logc_ratio_786.to_string(),
                    r.ospt_ratio.to_string(),
                ])
                .map_err(io::Error::other)?;
            }
            out.write_all(&w.into_inner().map_err(|e| io::Error::other(e.to_string()))?)?;
        }
    }
    Ok(())
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_concavity_m_matches_threshold() {
        assert_eq!(log_concavity_m(500), 31);
        assert_eq!(log_concavity_m(7), 3);
        assert_eq!(log_concavity_m(6), 2);
    }
}
