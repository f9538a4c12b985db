//! Stage two: grow the maximal internal envelope.
//!
//! A circle is centered at `k + 1` evenly spaced positions along a segment
//! and expanded until it touches the nearest cloud point not yet claimed;
//! that point (with any others tied within `tie_tol`) joins the envelope set
//! `C`. The first order sweeps hull segments around the best one. Every
//! later order sweeps all segments between current members of `C`, and the
//! process stops at the first order that adds nothing.
//!
//! Claims accumulate in a fixed order (segment `(i, j)` ascending, then step,
//! then identifier), so results never depend on scheduling.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{
    point_in_polygon, polygon_is_simple, Location, Point2, PointCloud, Polygon, Segment,
};
use crate::idset::IdSet;
use crate::locator::{best_segment, DvPoint, ScoredSegment};
use crate::scalar::Scalar;
use crate::triangulation::ClearanceField;

pub const DEFAULT_TIE_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ORDER: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig<T> {
    k: usize,
    tie_tol: T,
    max_order: usize,
}

impl<T: Scalar> SweepConfig<T> {
    /// `k` is the number of steps per segment (at least 3); `tie_tol` the
    /// distance within which nearest points count as tied.
    pub fn new(k: usize, tie_tol: T, max_order: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidConfig(format!(
                "k must be at least 3, got {k}"
            )));
        }
        if !(tie_tol >= T::zero() && tie_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tie tolerance must be >= 0, got {tie_tol}"
            )));
        }
        if max_order == 0 {
            return Err(Error::InvalidConfig("max order must be at least 1".into()));
        }
        Ok(SweepConfig {
            k,
            tie_tol,
            max_order,
        })
    }

    pub fn with_k(k: usize) -> Result<Self> {
        Self::new(k, T::lit(DEFAULT_TIE_TOL), DEFAULT_MAX_ORDER)
    }

    /// `k` may not exceed the number of cloud points.
    pub fn check_cloud_size(&self, n: usize) -> Result<()> {
        if self.k > n {
            return Err(Error::InvalidConfig(format!(
                "k must not exceed the number of points ({n}), got {}",
                self.k
            )));
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tie_tol(&self) -> T {
        self.tie_tol
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }
}

/// Which located segments seed the first order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitialScope {
    /// Only the best segment.
    BestOnly,
    /// The best segment, then every scored segment sharing its
    /// lexicographically smaller endpoint (by `x`, then `y`).
    #[default]
    AllFromBestEndpoint,
    /// The `m` lowest-scored segments.
    TopM(usize),
}

impl fmt::Display for InitialScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialScope::BestOnly => f.write_str("best-only"),
            InitialScope::AllFromBestEndpoint => f.write_str("all-from-best-endpoint"),
            InitialScope::TopM(m) => write!(f, "top-m:{m}"),
        }
    }
}

impl FromStr for InitialScope {
    type Err = Error;

    /// `best-only`, `all-from-best-endpoint` or `top-m:<m>` with `m >= 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("unknown initial scope `{s}`"));
        match s {
            "best-only" => Ok(InitialScope::BestOnly),
            "all-from-best-endpoint" => Ok(InitialScope::AllFromBestEndpoint),
            _ => match s.split_once(':') {
                Some(("top-m", m)) => match m.parse() {
                    Ok(m) if m >= 1 => Ok(InitialScope::TopM(m)),
                    _ => Err(bad()),
                },
                _ => Err(bad()),
            },
        }
    }
}

/// Size of `C` after one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderRecord {
    pub order: usize,
    pub members: usize,
    pub added: usize,
}

/// The growing envelope set `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct MieState {
    members: Vec<usize>,
    set: IdSet,
    order: usize,
    history: Vec<OrderRecord>,
}

impl MieState {
    pub fn new(capacity: usize) -> Self {
        MieState {
            members: Vec::new(),
            set: IdSet::new(capacity),
            order: 0,
            history: Vec::new(),
        }
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn member_set(&self) -> &IdSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn history(&self) -> &[OrderRecord] {
        &self.history
    }

    fn close_order(&mut self, found: Vec<usize>) {
        let added = found.len();
        for id in found {
            if self.set.insert(id) {
                self.members.push(id);
            }
        }
        self.order += 1;
        self.history.push(OrderRecord {
            order: self.order,
            members: self.members.len(),
            added,
        });
    }
}

/// Sweeps the centers `steps` of `s`, claiming into `claimed` and
/// appending new identifiers to `out`.
fn sweep_steps<T: Scalar>(
    s: &Segment<T>,
    steps: impl Iterator<Item = usize>,
    field: &ClearanceField<'_, T>,
    claimed: &mut IdSet,
    cfg: &SweepConfig<T>,
    out: &mut Vec<usize>,
) {
    for step in steps {
        if claimed.is_full() {
            return;
        }
        let center = s.sample(step, cfg.k);
        // NoCandidate only when everything is claimed, handled above
        if let Ok(hit) = field.nearest_points(center, claimed, cfg.tie_tol) {
            for id in hit.ids {
                claimed.insert(id);
                out.push(id);
            }
        }
    }
}

/// Step order radiating from `start`: `start`, then by distance from it,
/// nearer-to-`a` first on ties.
fn outward_steps(start: usize, k: usize) -> impl Iterator<Item = usize> {
    let mut steps: Vec<usize> = (0..=k).collect();
    steps.sort_by_key(|&s| (s.abs_diff(start), s));
    steps.into_iter()
}

/// New points found by expanding circles at `t = s / k`, `s = 0..=k`.
/// Points found at earlier centers are excluded from later ones.
pub fn sweep_segment<T: Scalar>(
    s: &Segment<T>,
    field: &ClearanceField<'_, T>,
    excluded: &IdSet,
    cfg: &SweepConfig<T>,
) -> Vec<usize> {
    let mut claimed = excluded.clone();
    let mut out = Vec::new();
    sweep_steps(s, 0..=cfg.k, field, &mut claimed, cfg, &mut out);
    out
}

/// The endpoint of `s` with the smaller `(x, y)`.
fn lexicographic_endpoint<T: Scalar>(s: &ScoredSegment<T>, cloud: &PointCloud<T>) -> usize {
    let (a, b) = (cloud.point(s.i), cloud.point(s.j));
    match a
        .x
        .partial_cmp(&b.x)
        .unwrap_or(Ordering::Equal)
        .then(a.y.partial_cmp(&b.y).unwrap_or(Ordering::Equal))
    {
        Ordering::Greater => s.j,
        _ => s.i,
    }
}

/// First order: sweeps the in-scope segments. The best segment goes first,
/// with its circle starting at the DV point and moving out toward both ends.
pub fn initial_mie<T: Scalar>(
    scored: &[ScoredSegment<T>],
    dv: &DvPoint<T>,
    field: &ClearanceField<'_, T>,
    cfg: &SweepConfig<T>,
    scope: InitialScope,
) -> Result<MieState> {
    let best = *best_segment(scored).ok_or(Error::DegenerateInput("no scored segments"))?;
    let mut rest: Vec<&ScoredSegment<T>> = scored
        .iter()
        .filter(|s| (s.i, s.j) != (best.i, best.j))
        .collect();
    rest.sort_by(|a, b| {
        a.mds
            .partial_cmp(&b.mds)
            .unwrap_or(Ordering::Equal)
            .then((a.i, a.j).cmp(&(b.i, b.j)))
    });
    let others: Vec<&ScoredSegment<T>> = match scope {
        InitialScope::BestOnly => Vec::new(),
        InitialScope::AllFromBestEndpoint => {
            let anchor = lexicographic_endpoint(&best, field.cloud());
            rest.into_iter().filter(|s| s.touches(anchor)).collect()
        }
        InitialScope::TopM(m) => {
            if m == 0 {
                return Err(Error::InvalidConfig("top-m scope needs m >= 1".into()));
            }
            rest.into_iter().take(m - 1).collect()
        }
    };

    let n = field.cloud().len();
    let mut claimed = IdSet::new(n);
    let mut found = Vec::new();
    sweep_steps(
        &best.segment,
        outward_steps(dv.step_index.min(cfg.k), cfg.k),
        field,
        &mut claimed,
        cfg,
        &mut found,
    );
    for s in others {
        sweep_steps(&s.segment, 0..=cfg.k, field, &mut claimed, cfg, &mut found);
    }
    let mut state = MieState::new(n);
    state.close_order(found);
    Ok(state)
}

/// One growth order: sweeps every segment between two current members.
pub fn grow_order<T: Scalar>(
    mut state: MieState,
    field: &ClearanceField<'_, T>,
    cfg: &SweepConfig<T>,
) -> MieState {
    let cloud = field.cloud();
    let mut sorted = state.members.clone();
    sorted.sort_unstable();
    let mut claimed = state.set.clone();
    let mut found = Vec::new();
    'pairs: for (a, &i) in sorted.iter().enumerate() {
        for &j in &sorted[a + 1..] {
            if claimed.is_full() {
                break 'pairs;
            }
            // coincident members span no segment
            let Ok(s) = Segment::new(cloud.point(i), cloud.point(j)) else {
                continue;
            };
            sweep_steps(&s, 0..=cfg.k, field, &mut claimed, cfg, &mut found);
        }
    }
    state.close_order(found);
    state
}

/// Checks on the assembled polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonDiagnostics {
    pub simple: bool,
    /// Cloud points strictly inside the polygon.
    pub interior_violations: usize,
}

/// Polygon through the members of `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssembledPolygon<T> {
    pub polygon: Polygon<T>,
    /// Cloud identifier of each polygon vertex.
    pub vertex_ids: Vec<usize>,
    pub diagnostics: PolygonDiagnostics,
}

/// Orders the members by polar angle about their centroid (ties: radius,
/// then identifier) and audits the result.
pub fn assemble_polygon<T: Scalar>(
    state: &MieState,
    cloud: &PointCloud<T>,
) -> Result<AssembledPolygon<T>> {
    let ids = state.members();
    if ids.len() < 3 {
        return Err(Error::TooFewVertices(ids.len()));
    }
    let count = T::from_count(ids.len());
    let (sx, sy) = ids.iter().fold((T::zero(), T::zero()), |(sx, sy), &id| {
        let p = cloud.point(id);
        (sx + p.x, sy + p.y)
    });
    let centroid = Point2 {
        x: sx / count,
        y: sy / count,
    };
    let mut keyed: Vec<(T, T, usize)> = ids
        .iter()
        .map(|&id| {
            let d = cloud.point(id).sub(centroid);
            (d.y.atan2(d.x), d.norm_sq(), id)
        })
        .collect();
    keyed.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(Ordering::Equal)
            .then(a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
            .then(a.2.cmp(&b.2))
    });

    let mut vertex_ids: Vec<usize> = Vec::with_capacity(keyed.len());
    for (_, _, id) in keyed {
        if vertex_ids
            .last()
            .is_some_and(|&prev| cloud.point(prev) == cloud.point(id))
        {
            continue;
        }
        vertex_ids.push(id);
    }
    while vertex_ids.len() > 1
        && cloud.point(vertex_ids[0]) == cloud.point(*vertex_ids.last().unwrap())
    {
        vertex_ids.pop();
    }
    if vertex_ids.len() < 3 {
        return Err(Error::TooFewVertices(vertex_ids.len()));
    }
    let polygon = Polygon::new(vertex_ids.iter().map(|&id| cloud.point(id)).collect())?;
    let interior_violations = cloud
        .points()
        .iter()
        .filter(|&&p| point_in_polygon(p, &polygon) == Location::Inside)
        .count();
    Ok(AssembledPolygon {
        diagnostics: PolygonDiagnostics {
            simple: polygon_is_simple(&polygon),
            interior_violations,
        },
        polygon,
        vertex_ids,
    })
}

/// Final envelope and its convergence record.
#[derive(Debug, Clone, PartialEq)]
pub struct VoidResult<T> {
    pub polygon: Polygon<T>,
    pub vertex_ids: Vec<usize>,
    /// `C` in insertion order.
    pub members: Vec<usize>,
    pub converged: bool,
    pub orders_used: usize,
    pub history: Vec<OrderRecord>,
    pub diagnostics: PolygonDiagnostics,
}

/// Runs the first order, then grows until an order adds nothing
/// (`converged`) or `max_order` orders have run.
pub fn run_to_convergence<T: Scalar>(
    scored: &[ScoredSegment<T>],
    dv: &DvPoint<T>,
    field: &ClearanceField<'_, T>,
    cfg: &SweepConfig<T>,
    scope: InitialScope,
) -> Result<VoidResult<T>> {
    cfg.check_cloud_size(field.cloud().len())?;
    let mut state = initial_mie(scored, dv, field, cfg, scope)?;
    let mut converged = false;
    while state.order() < cfg.max_order() {
        let before = state.len();
        state = grow_order(state, field, cfg);
        if state.len() == before {
            converged = true;
            break;
        }
    }
    let assembled = assemble_polygon(&state, field.cloud())?;
    Ok(VoidResult {
        polygon: assembled.polygon,
        vertex_ids: assembled.vertex_ids,
        members: state.members.clone(),
        converged,
        orders_used: state.order(),
        history: state.history.clone(),
        diagnostics: assembled.diagnostics,
    })
}
