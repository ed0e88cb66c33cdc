use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use super::config::Format;
use crate::error::{Error, Result};

/// Column order of emitted tables.
pub const COLUMNS: [&str; 10] = [
    "experiment", "case_id", "t", "s", "j", "measured", "expected", "abs_error", "rel_error", "pass",
];

/// One row of a defect table or curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRecord {
    pub experiment: String,
    pub case_id: String,
    pub t: Option<f64>,
    pub s: Option<f64>,
    pub j: Option<u8>,
    pub measured: f64,
    pub expected: f64,
    pub abs_error: f64,
    /// `abs_error / |expected|`, or `abs_error` when `expected` is zero.
    pub rel_error: f64,
    pub pass: bool,
}

impl CaseRecord {
    /// A row with errors filled in from `measured` and `expected`; the pass
    /// flag is decided by the caller.
    pub fn new(experiment: &str, case_id: impl Into<String>, measured: f64, expected: f64, pass: bool) -> Self {
        let abs_error = (measured - expected).abs();
        let rel_error = if expected == 0.0 { abs_error } else { abs_error / expected.abs() };
        let case_id = case_id.into().replace([',', '"', '\n'], "_");
        Self {
            experiment: experiment.to_string(),
            case_id,
            t: None,
            s: None,
            j: None,
            measured,
            expected,
            abs_error,
            rel_error,
            pass,
        }
    }

    pub fn at(mut self, t: Option<f64>, s: Option<f64>, j: Option<u8>) -> Self {
        self.t = t;
        self.s = s;
        self.j = j;
        self
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub experiment: String,
    /// The identity the suite checks, in words.
    pub identity: &'static str,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub records: Vec<CaseRecord>,
    pub pass: bool,
    /// Wall-clock time of the run; not written to report files so that they
    /// stay byte-identical across runs.
    pub duration: Duration,
}

impl ExperimentReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// CSV with a `#` header naming the suite, its identity, seed and
    /// tolerances, followed by the record table.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# experiment: {}", self.experiment);
        let _ = writeln!(out, "# identity: {}", self.identity);
        let _ = writeln!(out, "# seed: {}", self.seed);
        for (name, tol) in &self.tolerances {
            let _ = writeln!(out, "# tolerance.{name}: {}", number(*tol));
        }
        let _ = writeln!(out, "# result: {}", if self.pass { "pass" } else { "fail" });
        out.push_str(&render_csv(&self.records));
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"experiment\": {},", quote(&self.experiment));
        let _ = writeln!(out, "  \"identity\": {},", quote(self.identity));
        let _ = writeln!(out, "  \"seed\": {},", self.seed);
        let _ = writeln!(out, "  \"pass\": {},", self.pass);
        out.push_str("  \"tolerances\": {");
        let tols: Vec<String> = self.tolerances.iter().map(|(k, v)| format!("{}: {}", quote(k), json_number(*v))).collect();
        out.push_str(&tols.join(", "));
        out.push_str("},\n  \"records\": ");
        out.push_str(&render_json_records(&self.records, "  "));
        out.push_str("\n}\n");
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn write(&self, path: &Path, format: Format) -> Result<()> {
        write_file(path, self.render(format))
    }
}

/// 17 significant digits.
fn number(v: f64) -> String {
    format!("{v:.16e}")
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        number(v)
    } else {
        "null".to_string()
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialise")
}

fn optional(v: Option<f64>) -> String {
    v.map(number).unwrap_or_default()
}

/// Header line plus one line per record.
pub fn render_csv(records: &[CaseRecord]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for r in records {
        let fields = [
            r.experiment.clone(),
            r.case_id.clone(),
            optional(r.t),
            optional(r.s),
            r.j.map(|j| j.to_string()).unwrap_or_default(),
            number(r.measured),
            number(r.expected),
            number(r.abs_error),
            number(r.rel_error),
            r.pass.to_string(),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn render_json_records(records: &[CaseRecord], indent: &str) -> String {
    let opt = |v: Option<f64>| v.map(json_number).unwrap_or_else(|| "null".into());
    let rows: Vec<String> = records
        .iter()
        .map(|r| {
            format!(
                "{indent}  {{\"experiment\": {}, \"case_id\": {}, \"t\": {}, \"s\": {}, \"j\": {}, \"measured\": {}, \
                 \"expected\": {}, \"abs_error\": {}, \"rel_error\": {}, \"pass\": {}}}",
                quote(&r.experiment),
                quote(&r.case_id),
                opt(r.t),
                opt(r.s),
                r.j.map(|j| j.to_string()).unwrap_or_else(|| "null".into()),
                json_number(r.measured),
                json_number(r.expected),
                json_number(r.abs_error),
                json_number(r.rel_error),
                r.pass,
            )
        })
        .collect();
    format!("[\n{}\n{indent}]", rows.join(",\n"))
}

/// Parses a table written by [`render_csv`] or [`ExperimentReport::to_csv`];
/// `#` lines are skipped.
pub fn parse_csv(text: &str) -> Result<Vec<CaseRecord>> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
    if header != COLUMNS.join(",") {
        return Err(Error::Parse(format!("unexpected header '{header}'")));
    }
    lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != COLUMNS.len() {
                return Err(Error::Parse(format!("expected {} fields in '{line}'", COLUMNS.len())));
            }
            let real = |s: &str| s.parse::<f64>().map_err(|_| Error::Parse(format!("bad number '{s}'")));
            let opt_real = |s: &str| if s.is_empty() { Ok(None) } else { real(s).map(Some) };
            Ok(CaseRecord {
                experiment: f[0].to_string(),
                case_id: f[1].to_string(),
                t: opt_real(f[2])?,
                s: opt_real(f[3])?,
                j: if f[4].is_empty() {
                    None
                } else {
                    Some(f[4].parse().map_err(|_| Error::Parse(format!("bad index '{}'", f[4])))?)
                },
                measured: real(f[5])?,
                expected: real(f[6])?,
                abs_error: real(f[7])?,
                rel_error: real(f[8])?,
                pass: f[9].parse().map_err(|_| Error::Parse(format!("bad flag '{}'", f[9])))?,
            })
        })
        .collect()
}

/// Writes a bare record table (no report header).
pub fn emit_curve(records: &[CaseRecord], path: &Path, format: Format) -> Result<()> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let text = match format {
        Format::Csv => render_csv(records),
        Format::Json => render_json_records(records, "") + "\n",
    };
    write_file(path, text)
}

fn write_file(path: &Path, text: String) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Write { path: path.display().to_string(), source })
}
