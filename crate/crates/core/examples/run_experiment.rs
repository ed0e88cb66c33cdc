//! Driving a suite from code and exporting a curve.
//!
//!     cargo run --release --example run_experiment -- [experiment] [out.csv]

use std::path::PathBuf;

use anosovlab::experiment::{emit_curve, run, ExperimentConfig, Format};

fn main() -> anosovlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "quantum-divergence".into());
    let out = args.next().map(PathBuf::from);

    let mut cfg = ExperimentConfig::defaults(&name)?;
    cfg.apply_config("seed = 11\n[quantum-divergence]\nt_min = 0\ndraws = 5\n")?;
    let report = run(&cfg)?;
    println!("{}: {} ({} cases in {:.2?})", report.experiment, if report.pass { "pass" } else { "FAIL" }, report.records.len(), report.duration);
    println!("checks: {}", report.identity);
    for r in report.records.iter().take(8) {
        println!("  {:<28} t={:?} j={:?} measured={:.6e} expected={:.6e}", r.case_id, r.t, r.j, r.measured, r.expected);
    }
    if let Some(path) = out {
        emit_curve(&report.records, &path, Format::Csv)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
