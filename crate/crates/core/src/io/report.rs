//! The run report. JSON is the canonical form: every float is written with
//! 17 significant digits, so loading a report and writing it again gives
//! the same bytes.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

use super::{format_f64, write_atomic};
use crate::error::{Error, Result};
use crate::geom::{polygon_area, Point2, PointCloud};
use crate::locator::ScoredSegment;
use crate::pipeline::{PipelineConfig, PipelineOutput, StageTimings};

/// An `f64` serialized with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom(format!(
                "non-finite value {}",
                self.0
            )));
        }
        let raw = RawValue::from_string(format_f64(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(d).map(Real)
    }
}

fn xy(p: Point2<f64>) -> [Real; 2] {
    [Real(p.x), Real(p.y)]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleEcho {
    pub kind: String,
    pub n: usize,
    pub radius: Real,
    pub jitter: Real,
    pub offset_factor: Real,
    pub seed: u64,
}

/// Where the cloud came from: a file path or a generated ensemble.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ensemble: Option<EnsembleEcho>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunEcho {
    pub input: InputEcho,
    pub k: usize,
    pub max_order: usize,
    pub tie_tol: Real,
    pub policy: String,
    pub scope: String,
    pub top_m: usize,
}

impl RunEcho {
    pub fn new(input: InputEcho, cfg: &PipelineConfig<f64>) -> Self {
        RunEcho {
            input,
            k: cfg.sweep.k(),
            max_order: cfg.sweep.max_order(),
            tie_tol: Real(cfg.sweep.tie_tol()),
            policy: cfg.locator.start_policy.to_string(),
            scope: cfg.scope.to_string(),
            top_m: cfg.locator.top_m(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentRecord {
    pub i: usize,
    pub j: usize,
    pub a: [Real; 2],
    pub b: [Real; 2],
    pub mds: Real,
}

impl From<&ScoredSegment<f64>> for SegmentRecord {
    fn from(s: &ScoredSegment<f64>) -> Self {
        SegmentRecord {
            i: s.i,
            j: s.j,
            a: xy(s.segment.a),
            b: xy(s.segment.b),
            mds: Real(s.mds),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DvRecord {
    pub x: Real,
    pub y: Real,
    pub clearance: Real,
    pub step_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HistoryRow {
    pub order: usize,
    pub members: usize,
    pub new_members: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonRecord {
    pub vertex_ids: Vec<usize>,
    pub vertices: Vec<[Real; 2]>,
    pub area: Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagnosticsRecord {
    pub simple: bool,
    pub interior_violations: usize,
}

/// Stage times in milliseconds. Only present when requested, since they
/// differ between otherwise identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimingsRecord {
    pub hull: Real,
    pub triangulation: Real,
    pub scoring: Real,
    pub dv_point: Real,
    pub growth: Real,
    pub total: Real,
}

impl From<&StageTimings> for TimingsRecord {
    fn from(t: &StageTimings) -> Self {
        let ms = |d: std::time::Duration| Real(d.as_secs_f64() * 1e3);
        TimingsRecord {
            hull: ms(t.hull),
            triangulation: ms(t.triangulation),
            scoring: ms(t.scoring),
            dv_point: ms(t.dv_point),
            growth: ms(t.growth),
            total: ms(t.total()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub config: RunEcho,
    pub n: usize,
    pub interior_count: usize,
    /// Hull vertex identifiers, counterclockwise.
    pub hull: Vec<usize>,
    pub hull_vertices: Vec<[Real; 2]>,
    pub scored_segments: usize,
    /// The `top_m` best segments, best first.
    pub top_segments: Vec<SegmentRecord>,
    pub best_segment: SegmentRecord,
    pub dv_point: DvRecord,
    pub history: Vec<HistoryRow>,
    pub converged: bool,
    pub orders_used: usize,
    /// `C` in insertion order.
    pub members: Vec<usize>,
    pub polygon: PolygonRecord,
    pub diagnostics: DiagnosticsRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<TimingsRecord>,
}

impl Report {
    pub fn new(
        config: RunEcho,
        cloud: &PointCloud<f64>,
        out: &PipelineOutput<f64>,
        with_timings: bool,
    ) -> Self {
        let void = &out.void;
        Report {
            n: cloud.len(),
            interior_count: out.interior_count,
            hull: out.hull.clone(),
            hull_vertices: out.hull.iter().map(|&id| xy(cloud.point(id))).collect(),
            scored_segments: out.scored.len(),
            top_segments: out
                .scored
                .iter()
                .take(config.top_m)
                .map(SegmentRecord::from)
                .collect(),
            best_segment: SegmentRecord::from(&out.best),
            dv_point: DvRecord {
                x: Real(out.dv.point.x),
                y: Real(out.dv.point.y),
                clearance: Real(out.dv.clearance),
                step_index: out.dv.step_index,
            },
            history: void
                .history
                .iter()
                .map(|r| HistoryRow {
                    order: r.order,
                    members: r.members,
                    new_members: r.added,
                })
                .collect(),
            converged: void.converged,
            orders_used: void.orders_used,
            members: void.members.clone(),
            polygon: PolygonRecord {
                vertex_ids: void.vertex_ids.clone(),
                vertices: void.polygon.vertices().iter().map(|&p| xy(p)).collect(),
                area: Real(polygon_area(&void.polygon)),
            },
            diagnostics: DiagnosticsRecord {
                simple: void.diagnostics.simple,
                interior_violations: void.diagnostics.interior_violations,
            },
            timings_ms: with_timings.then(|| TimingsRecord::from(&out.timings)),
            config,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidConfig(format!("report serialization: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            reason: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    /// Growth history as `order,members,new_members` rows.
    pub fn history_csv(&self) -> String {
        let mut out = String::from("order,members,new_members\n");
        for r in &self.history {
            let _ = writeln!(out, "{},{},{}", r.order, r.members, r.new_members);
        }
        out
    }

    /// Reads a table written by [`Report::history_csv`].
    pub fn parse_history_csv(text: &str) -> Result<Vec<HistoryRow>> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate().skip(1) {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |reason: String| Error::Parse {
                line: idx + 1,
                reason,
            };
            let v: Vec<usize> = line
                .split(',')
                .map(|f| {
                    f.trim()
                        .parse()
                        .map_err(|_| bad(format!("invalid count `{f}`")))
                })
                .collect::<Result<_>>()?;
            let [order, members, new_members] = v[..] else {
                return Err(bad(format!("expected 3 fields, found {}", v.len())));
            };
            rows.push(HistoryRow {
                order,
                members,
                new_members,
            });
        }
        Ok(rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    /// The history table only.
    Csv,
}

pub fn save_report(report: &Report, path: &Path, format: ReportFormat) -> Result<()> {
    let text = match format {
        ReportFormat::Json => report.to_json()?,
        ReportFormat::Csv => report.history_csv(),
    };
    write_atomic(path, text.as_bytes())
}
