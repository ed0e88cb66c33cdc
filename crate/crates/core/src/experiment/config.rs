use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::Suite;
use crate::error::{Error, Result};

/// Seed used when neither the command line, the config file nor
/// `ANOSOVLAB_SEED` provides one.
pub const DEFAULT_SEED: u64 = 20_150_628;

/// Output encoding of reports and curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidConfig(format!("unknown format '{other}' (expected csv or json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Everything a suite needs to run.
///
/// `samples` is the number of grid points per continuous axis and `draws`
/// the number of random inputs (base points, generators, matrices, ...).
/// Suites with an integer time axis use every integer in `[t_min, t_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: String,
    pub seed: u64,
    pub t_min: f64,
    pub t_max: f64,
    pub s_min: f64,
    pub s_max: f64,
    pub samples: usize,
    pub draws: usize,
    pub tolerances: BTreeMap<String, f64>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl ExperimentConfig {
    /// Defaults for a named suite.
    pub fn defaults(experiment: &str) -> Result<Self> {
        let suite = Suite::from_name(experiment)?;
        let d = suite.defaults();
        Ok(Self {
            experiment: suite.name().to_string(),
            seed: DEFAULT_SEED,
            t_min: d.t.0,
            t_max: d.t.1,
            s_min: d.s.0,
            s_max: d.s.1,
            samples: d.samples,
            draws: d.draws,
            tolerances: suite.tolerances().iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            output_path: None,
            format: Format::Csv,
        })
    }

    pub fn suite(&self) -> Result<Suite> {
        Suite::from_name(&self.experiment)
    }

    /// Tolerance by name; every suite tolerance is present after
    /// [`ExperimentConfig::defaults`].
    pub fn tolerance(&self, name: &str) -> Result<f64> {
        self.tolerances
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidConfig(format!("missing tolerance '{name}'")))
    }

    /// Applies a config file: flat `key = value` lines, `#` comments, and
    /// `[experiment]` sections. Keys before the first section apply to every
    /// experiment; keys in this experiment's section override them; other
    /// sections are checked but ignored.
    ///
    /// Keys: `seed`, `t_min`, `t_max`, `s_min`, `s_max`, `samples`, `draws`,
    /// `format`, `output_path`, `tolerance.<name>`.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        let mut global = Vec::new();
        let mut own = Vec::new();
        let mut section: Option<Suite> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| config_error(line_no, "unterminated section header"))?
                    .trim();
                section = Some(Suite::from_name(name).map_err(|e| config_error(line_no, e))?);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| config_error(line_no, format!("expected key = value, got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            // validate against the section's suite even when it is not ours
            let mut probe = match section {
                Some(s) => Self::defaults(s.name())?,
                None => self.clone(),
            };
            probe.set(key, value).map_err(|e| config_error(line_no, e))?;
            match section {
                None => global.push((line_no, key, value)),
                Some(s) if s.name() == self.experiment => own.push((line_no, key, value)),
                Some(_) => {}
            }
        }
        for (line_no, key, value) in global.into_iter().chain(own) {
            self.set(key, value).map_err(|e| config_error(line_no, e))?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let real = |v: &str| -> Result<f64> {
            v.parse::<f64>().map_err(|_| Error::InvalidConfig(format!("'{v}' is not a number")))
        };
        let count = |v: &str| -> Result<usize> {
            v.parse::<usize>().map_err(|_| Error::InvalidConfig(format!("'{v}' is not a count")))
        };
        match key {
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| Error::InvalidConfig(format!("'{value}' is not a seed")))?
            }
            "t_min" => self.t_min = real(value)?,
            "t_max" => self.t_max = real(value)?,
            "s_min" => self.s_min = real(value)?,
            "s_max" => self.s_max = real(value)?,
            "samples" => self.samples = count(value)?,
            "draws" => self.draws = count(value)?,
            "format" => self.format = value.parse()?,
            "output_path" | "out" => self.output_path = Some(PathBuf::from(value)),
            _ => {
                let Some(name) = key.strip_prefix("tolerance.") else {
                    return Err(Error::InvalidConfig(format!("unknown key '{key}'")));
                };
                let slot = self.tolerances.get_mut(name).ok_or_else(|| {
                    Error::InvalidConfig(format!("experiment {} has no tolerance '{name}'", self.experiment))
                })?;
                *slot = real(value)?;
            }
        }
        Ok(())
    }

    /// Checks the config invariants. Tolerances must be finite and
    /// non-negative; zero is allowed and demands exact agreement.
    pub fn validate(&self) -> Result<()> {
        let suite = self.suite()?;
        for (name, v) in [("t_min", self.t_min), ("t_max", self.t_max), ("s_min", self.s_min), ("s_max", self.s_max)] {
            if !v.is_finite() {
                return Err(Error::InvalidConfig(format!("{name} must be finite")));
            }
        }
        if self.t_min > self.t_max {
            return Err(Error::InvalidConfig(format!("t_min = {} exceeds t_max = {}", self.t_min, self.t_max)));
        }
        if self.s_min > self.s_max {
            return Err(Error::InvalidConfig(format!("s_min = {} exceeds s_max = {}", self.s_min, self.s_max)));
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if self.draws == 0 {
            return Err(Error::InvalidConfig("draws must be at least 1".into()));
        }
        for (name, &tol) in &self.tolerances {
            if !(tol >= 0.0 && tol.is_finite()) {
                return Err(Error::InvalidConfig(format!("tolerance '{name}' must be finite and non-negative")));
            }
        }
        for &(name, _) in suite.tolerances() {
            self.tolerance(name)?;
        }
        Ok(())
    }
}

fn config_error(line: usize, msg: impl fmt::Display) -> Error {
    Error::Config { line, msg: msg.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_override_globals() {
        let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
        cfg.apply_config(
            "# comment\n\
             [geodesic]\n\
             samples = 7\n\
             tolerance.distance = 1e-9\n\
             [cat-quantum]\n\
             samples = 99\n",
        )
        .unwrap();
        assert_eq!(cfg.samples, 7);
        assert_eq!(cfg.tolerance("distance").unwrap(), 1e-9);
        cfg.validate().unwrap();
    }

    #[test]
    fn global_keys_apply() {
        let mut cfg = ExperimentConfig::defaults("nogo-search").unwrap();
        cfg.apply_config("seed = 11\nformat = json\ndraws = 5\n[nogo-search]\ndraws = 3").unwrap();
        assert_eq!((cfg.seed, cfg.format, cfg.draws), (11, Format::Json, 3));
    }

    #[test]
    fn malformed_configs() {
        let bad = [
            "samples",
            "unknown = 1",
            "[no-such-experiment]",
            "[geodesic\nsamples = 1",
            "tolerance.nothing = 1",
            "samples = -1",
            "[cat-quantum]\ntolerance.distance = 1",
        ];
        for text in bad {
            let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
            assert!(cfg.apply_config(text).is_err(), "{text}");
        }
    }

    #[test]
    fn error_names_the_line() {
        let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
        let err = cfg.apply_config("seed = 1\n\nbogus").unwrap_err();
        assert!(matches!(err, Error::Config { line: 3, .. }), "{err}");
    }

    #[test]
    fn invariants() {
        let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
        cfg.t_min = 3.0;
        cfg.t_max = 1.0;
        assert!(cfg.validate().is_err());
        let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
        cfg.samples = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
        cfg.tolerances.insert("distance".into(), -1.0);
        assert!(cfg.validate().is_err());
        let mut cfg = ExperimentConfig::defaults("geodesic").unwrap();
        cfg.tolerances.insert("distance".into(), 0.0);
        cfg.validate().unwrap();
    }

    #[test]
    fn unknown_experiment() {
        assert!(matches!(ExperimentConfig::defaults("nope"), Err(Error::UnknownExperiment(_))));
    }
}
