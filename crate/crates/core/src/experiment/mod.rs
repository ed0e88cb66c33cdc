//! Named verification suites and their CSV/JSON reports.
//!
//! Each suite sweeps a grid, compares a measured defect or rate with the
//! value the corresponding identity predicts, and records one
//! [`CaseRecord`] per case. A report passes iff every case does.
//!
//! ```no_run
//! use anosovlab::experiment::{run, ExperimentConfig};
//!
//! let report = run(&ExperimentConfig::defaults("geodesic")?)?;
//! assert!(report.pass);
//! # Ok::<(), anosovlab::Error>(())
//! ```

mod config;
mod record;
mod suites;

use std::time::Instant;

pub use config::{ExperimentConfig, Format, DEFAULT_SEED};
pub use record::{emit_curve, parse_csv, render_csv, CaseRecord, ExperimentReport, COLUMNS};
pub use suites::{Suite, SuiteDefaults, DIVERGENCE_EPS, GAMMA, SYLVESTER_LAMBDAS};

use crate::error::Result;

/// Runs the configured suite and, if `output_path` is set, writes the report
/// there in the configured format.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let report = execute(config)?;
    if let Some(path) = &config.output_path {
        report.write(path, config.format)?;
    }
    Ok(report)
}

/// Runs the configured suite without writing anything.
pub fn execute(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let suite = config.suite()?;
    let start = Instant::now();
    let records = suite.run(config)?;
    Ok(ExperimentReport {
        experiment: suite.name().to_string(),
        identity: suite.identity(),
        seed: config.seed,
        tolerances: config.tolerances.clone(),
        pass: records.iter().all(|r| r.pass),
        records,
        duration: start.elapsed(),
    })
}
