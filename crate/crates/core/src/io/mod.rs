//! Cloud files, run reports and the orchestration the CLI drives.
//!
//! Clouds are read from CSV (`x,y` per line, optional `x,y` header) or JSON
//! (an array of `[x, y]` pairs). Every file written here goes through a
//! temporary file in the target directory and is renamed into place.

mod report;
mod run;

pub use report::{
    save_report, DiagnosticsRecord, DvRecord, EnsembleEcho, HistoryRow, InputEcho, PolygonRecord,
    Real, Report, ReportFormat, RunEcho, SegmentRecord, TimingsRecord,
};
pub use run::{run, InputSource, RunConfig, RunOutcome};

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Point2, PointCloud};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloudFormat {
    Csv,
    Json,
}

impl CloudFormat {
    /// `.json` selects JSON; anything else is read as CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => CloudFormat::Json,
            _ => CloudFormat::Csv,
        }
    }
}

impl FromStr for CloudFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(CloudFormat::Csv),
            "json" => Ok(CloudFormat::Json),
            _ => Err(Error::InvalidConfig(format!("unknown cloud format `{s}`"))),
        }
    }
}

/// Shortest text that reads back to the same `f64`: 17 significant digits.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

fn unquote(field: &str) -> &str {
    let f = field.trim();
    f.strip_prefix('"')
        .and_then(|f| f.strip_suffix('"'))
        .unwrap_or(f)
}

/// A first line whose labels start with `x` and `y`, e.g. `x,y` or `"X_m","Y_m"`.
fn is_header(line: &str) -> bool {
    let fields: Vec<&str> = line.split(',').map(unquote).collect();
    if fields.len() != 2 || fields.iter().any(|f| f.parse::<f64>().is_ok()) {
        return false;
    }
    let starts = |f: &str, c: char| f.chars().next().is_some_and(|h| h.eq_ignore_ascii_case(&c));
    starts(fields[0], 'x') && starts(fields[1], 'y')
}

/// Parses CSV text. Blank lines are skipped; line numbers are 1-based.
pub fn parse_csv(text: &str) -> Result<PointCloud<f64>> {
    let mut points = Vec::new();
    let mut first = true;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if std::mem::take(&mut first) && is_header(line) {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(unquote).collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        let mut xy = [0.0; 2];
        for (slot, f) in xy.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("invalid number `{f}`"),
            })?;
        }
        points.push(Point2 { x: xy[0], y: xy[1] });
    }
    finish(points)
}

pub fn parse_json(text: &str) -> Result<PointCloud<f64>> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    finish(pairs.into_iter().map(|[x, y]| Point2 { x, y }).collect())
}

fn finish(points: Vec<Point2<f64>>) -> Result<PointCloud<f64>> {
    let cloud = PointCloud::new(points)?;
    cloud.require_pipeline_size()?;
    Ok(cloud)
}

/// Reads a cloud of at least 3 finite points.
pub fn load_cloud(path: &Path, format: CloudFormat) -> Result<PointCloud<f64>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    match format {
        CloudFormat::Csv => parse_csv(&text),
        CloudFormat::Json => parse_json(&text),
    }
}

pub fn cloud_to_string(cloud: &PointCloud<f64>, format: CloudFormat) -> String {
    let mut out = String::new();
    match format {
        CloudFormat::Csv => {
            out.push_str("x,y\n");
            for p in cloud.points() {
                let _ = writeln!(out, "{},{}", format_f64(p.x), format_f64(p.y));
            }
        }
        CloudFormat::Json => {
            out.push('[');
            for (i, p) in cloud.points().iter().enumerate() {
                let sep = if i == 0 { "\n  " } else { ",\n  " };
                let _ = write!(out, "{sep}[{}, {}]", format_f64(p.x), format_f64(p.y));
            }
            out.push_str("\n]\n");
        }
    }
    out
}

pub fn save_cloud(cloud: &PointCloud<f64>, path: &Path, format: CloudFormat) -> Result<()> {
    write_atomic(path, cloud_to_string(cloud, format).as_bytes())
}
