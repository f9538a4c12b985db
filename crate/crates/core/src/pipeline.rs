//! End-to-end run: hull, triangulation, segment scoring, DV point, envelope
//! growth and polygon assembly.

use std::time::{Duration, Instant};

use crate::engine::{run_to_convergence, InitialScope, SweepConfig, VoidResult};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, PointCloud};
use crate::locator::{
    best_segment, dv_point, enumerate_hull_segments, interior_points, DvPoint, LocatorConfig,
    ScoredSegment,
};
use crate::scalar::Scalar;
use crate::triangulation::{delaunay, ClearanceField};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineConfig<T> {
    pub locator: LocatorConfig,
    pub sweep: SweepConfig<T>,
    pub scope: InitialScope,
}

impl<T: Scalar> PipelineConfig<T> {
    /// Defaults with refining parameter `k`.
    pub fn with_k(k: usize) -> Result<Self> {
        Ok(PipelineConfig {
            locator: LocatorConfig::default(),
            sweep: SweepConfig::with_k(k)?,
            scope: InitialScope::default(),
        })
    }
}

/// Wall-clock time per stage.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StageTimings {
    pub hull: Duration,
    pub triangulation: Duration,
    pub scoring: Duration,
    pub dv_point: Duration,
    pub growth: Duration,
}

impl StageTimings {
    pub fn total(&self) -> Duration {
        self.hull + self.triangulation + self.scoring + self.dv_point + self.growth
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOutput<T> {
    /// Hull vertex identifiers, counterclockwise.
    pub hull: Vec<usize>,
    pub interior_count: usize,
    /// All scored candidate segments, best first.
    pub scored: Vec<ScoredSegment<T>>,
    pub best: ScoredSegment<T>,
    pub dv: DvPoint<T>,
    pub void: VoidResult<T>,
    pub timings: StageTimings,
}

fn timed<R>(slot: &mut Duration, f: impl FnOnce() -> R) -> R {
    let start = Instant::now();
    let r = f();
    *slot = start.elapsed();
    r
}

pub fn find_void<T: Scalar>(
    cloud: &PointCloud<T>,
    cfg: &PipelineConfig<T>,
) -> Result<PipelineOutput<T>> {
    cloud.require_pipeline_size()?;
    cfg.sweep.check_cloud_size(cloud.len())?;
    let mut timings = StageTimings::default();

    let hull = timed(&mut timings.hull, || convex_hull(cloud))?;
    let interior_count = interior_points(cloud, &hull)?.len();
    let field = timed(&mut timings.triangulation, || {
        delaunay(cloud).map(ClearanceField::from_triangulation)
    })?;
    let scored = timed(&mut timings.scoring, || {
        enumerate_hull_segments(&hull, cloud, &cfg.locator)
    })?;
    let best = *best_segment(&scored).ok_or(Error::DegenerateInput("no candidate segments"))?;
    let dv = timed(&mut timings.dv_point, || {
        dv_point(&best, &field, cfg.sweep.k())
    })?;
    let void = timed(&mut timings.growth, || {
        run_to_convergence(&scored, &dv, &field, &cfg.sweep, cfg.scope)
    })?;

    Ok(PipelineOutput {
        hull,
        interior_count,
        scored,
        best,
        dv,
        void,
        timings,
    })
}
