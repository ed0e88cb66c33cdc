use std::path::PathBuf;
use std::process::ExitCode;

use anosovlab::experiment::{run, ExperimentConfig, Format, Suite};
use anosovlab::Error;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "anosovlab", version, about = "Verification suites for classical and quantum hyperbolic flows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite; exits 0 iff every case passes.
    Run {
        #[arg(long)]
        experiment: String,
        /// key = value file with optional [experiment] sections
        #[arg(long)]
        config: Option<PathBuf>,
        /// Overrides the config file and ANOSOVLAB_SEED.
        #[arg(long)]
        seed: Option<u64>,
        /// Report destination; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = ["csv", "json"])]
        format: Option<String>,
    },
    /// List suites and the identities they check.
    List,
}

fn configure(
    experiment: &str,
    config: Option<PathBuf>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    format: Option<String>,
) -> Result<ExperimentConfig, Error> {
    let mut cfg = ExperimentConfig::defaults(experiment)?;
    if let Ok(raw) = std::env::var("ANOSOVLAB_SEED") {
        cfg.seed = raw
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("ANOSOVLAB_SEED='{raw}' is not a seed")))?;
    }
    if let Some(path) = config {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::InvalidConfig(format!("cannot read {}: {e}", path.display())))?;
        cfg.apply_config(&text)?;
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    if out.is_some() {
        cfg.output_path = out;
    }
    if let Some(f) = format {
        cfg.format = f.parse::<Format>()?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List => {
            for suite in Suite::ALL {
                println!("{:<20} {}", suite.name(), suite.identity());
            }
            ExitCode::SUCCESS
        }
        Command::Run { experiment, config, seed, out, format } => {
            let outcome = configure(&experiment, config, seed, out, format).and_then(|cfg| {
                let report = run(&cfg)?;
                if cfg.output_path.is_none() {
                    print!("{}", report.render(cfg.format));
                }
                Ok(report)
            });
            match outcome {
                Ok(report) => {
                    let failed = report.failures().count();
                    eprintln!(
                        "{}: {} ({} cases, {} failed, {:.2?})",
                        report.experiment,
                        if report.pass { "pass" } else { "FAIL" },
                        report.records.len(),
                        failed,
                        report.duration
                    );
                    if report.pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("anosovlab: error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
