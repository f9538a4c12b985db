//! Stage one: find the hull-to-hull segment most likely to cross the void
//! and the deepest point along it.
//!
//! Each segment joining two hull vertices is scored by the mean distance
//! from the segment to the non-hull points (lower means the segment passes
//! through the middle of the cloud's mass). The best segment is then
//! sampled at `k + 1` evenly spaced positions and the sample with the
//! largest clearance becomes the DV point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Point2, PointCloud, Segment};
use crate::rng::SeededRng;
use crate::scalar::Scalar;
use crate::triangulation::ClearanceField;

/// A hull-vertex pair `i < j` with its mean-distance score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoredSegment<T> {
    pub i: usize,
    pub j: usize,
    pub segment: Segment<T>,
    pub mds: T,
}

impl<T: Scalar> ScoredSegment<T> {
    pub fn touches(&self, id: usize) -> bool {
        self.i == id || self.j == id
    }

    fn order(&self, other: &Self) -> Ordering {
        self.mds
            .partial_cmp(&other.mds)
            .unwrap_or(Ordering::Equal)
            .then((self.i, self.j).cmp(&(other.i, other.j)))
    }
}

/// Which hull vertices anchor the candidate segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartPolicy {
    /// Every unordered pair of hull vertices.
    #[default]
    AllPairs,
    /// Segments from one given hull vertex (a cloud identifier).
    SingleStart(usize),
    /// Segments from a hull vertex drawn with the given seed.
    RandomStart(u64),
}

impl fmt::Display for StartPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StartPolicy::AllPairs => f.write_str("all-pairs"),
            StartPolicy::SingleStart(id) => write!(f, "single-start:{id}"),
            StartPolicy::RandomStart(seed) => write!(f, "random-start:{seed}"),
        }
    }
}

impl FromStr for StartPolicy {
    type Err = Error;

    /// `all-pairs`, `single-start:<id>` or `random-start:<seed>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("unknown start policy `{s}`"));
        match s.split_once(':') {
            None if s == "all-pairs" => Ok(StartPolicy::AllPairs),
            Some(("single-start", id)) => {
                id.parse().map(StartPolicy::SingleStart).map_err(|_| bad())
            }
            Some(("random-start", seed)) => seed
                .parse()
                .map(StartPolicy::RandomStart)
                .map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocatorConfig {
    pub start_policy: StartPolicy,
    top_m: usize,
}

impl Default for LocatorConfig {
    fn default() -> Self {
        LocatorConfig {
            start_policy: StartPolicy::AllPairs,
            top_m: 1,
        }
    }
}

impl LocatorConfig {
    pub fn new(start_policy: StartPolicy, top_m: usize) -> Result<Self> {
        if top_m == 0 {
            return Err(Error::InvalidConfig("top_m must be at least 1".into()));
        }
        Ok(LocatorConfig {
            start_policy,
            top_m,
        })
    }

    pub fn top_m(&self) -> usize {
        self.top_m
    }
}

/// Identifiers of the cloud points that are not hull vertices, ascending.
pub fn interior_points<T: Scalar>(cloud: &PointCloud<T>, hull: &[usize]) -> Result<Vec<usize>> {
    let mut on_hull = vec![false; cloud.len()];
    for &h in hull {
        on_hull[h] = true;
    }
    let interior: Vec<usize> = (0..cloud.len()).filter(|&id| !on_hull[id]).collect();
    if interior.is_empty() {
        Err(Error::EmptyInterior)
    } else {
        Ok(interior)
    }
}

/// Mean distance from `s` to the points `interior`.
pub fn mds_score<T: Scalar>(
    s: &Segment<T>,
    interior: &[usize],
    cloud: &PointCloud<T>,
) -> Result<T> {
    if interior.is_empty() {
        return Err(Error::EmptyInterior);
    }
    let sum = interior
        .iter()
        .fold(T::zero(), |acc, &id| acc + s.distance_to(cloud.point(id)));
    Ok(sum / T::from_count(interior.len()))
}

/// Scores the candidate segments allowed by `config`, sorted by ascending
/// score with ties broken by `(i, j)`.
pub fn enumerate_hull_segments<T: Scalar>(
    hull: &[usize],
    cloud: &PointCloud<T>,
    config: &LocatorConfig,
) -> Result<Vec<ScoredSegment<T>>> {
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("hull needs at least 3 vertices"));
    }
    let interior = interior_points(cloud, hull)?;

    let pairs: Vec<(usize, usize)> = match config.start_policy {
        StartPolicy::AllPairs => (0..hull.len())
            .flat_map(|a| (a + 1..hull.len()).map(move |b| (hull[a], hull[b])))
            .collect(),
        StartPolicy::SingleStart(id) => {
            if !hull.contains(&id) {
                return Err(Error::InvalidConfig(format!(
                    "start point {id} is not a hull vertex"
                )));
            }
            anchored_pairs(hull, id)
        }
        StartPolicy::RandomStart(seed) => {
            let id = hull[SeededRng::new(seed).index(hull.len())];
            anchored_pairs(hull, id)
        }
    };

    let mut scored = pairs
        .into_iter()
        .map(|(a, b)| {
            let (i, j) = (a.min(b), a.max(b));
            let segment = Segment::new(cloud.point(i), cloud.point(j))?;
            let mds = mds_score(&segment, &interior, cloud)?;
            Ok(ScoredSegment { i, j, segment, mds })
        })
        .collect::<Result<Vec<_>>>()?;
    scored.sort_by(|a, b| a.order(b));
    Ok(scored)
}

fn anchored_pairs(hull: &[usize], id: usize) -> Vec<(usize, usize)> {
    hull.iter()
        .filter(|&&h| h != id)
        .map(|&h| (id, h))
        .collect()
}

/// Lowest score; ties go to the lexicographically smaller `(i, j)`.
pub fn best_segment<T: Scalar>(scored: &[ScoredSegment<T>]) -> Option<&ScoredSegment<T>> {
    scored.iter().min_by(|a, b| a.order(b))
}

/// Deepest sampled point on the best segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DvPoint<T> {
    pub point: Point2<T>,
    pub clearance: T,
    pub step_index: usize,
}

/// Evaluates clearance at `t = s / k` for `s = 0..=k` and returns the
/// maximum. Ties prefer the sample nearest the midpoint, then the smaller
/// step.
pub fn dv_point<T: Scalar>(
    best: &ScoredSegment<T>,
    field: &ClearanceField<'_, T>,
    k: usize,
) -> Result<DvPoint<T>> {
    if k < 3 {
        return Err(Error::InvalidConfig(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let mut winner: Option<DvPoint<T>> = None;
    for step in 0..=k {
        let point = best.segment.sample(step, k);
        let clearance = field.clearance(point);
        let better = match &winner {
            None => true,
            Some(w) => {
                clearance > w.clearance
                    || (clearance == w.clearance
                        && 2 * step.abs_diff(k - step)
                            < 2 * w.step_index.abs_diff(k - w.step_index))
            }
        };
        if better {
            winner = Some(DvPoint {
                point,
                clearance,
                step_index: step,
            });
        }
    }
    Ok(winner.expect("k + 1 >= 4 samples"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull;

    fn cloud(xy: &[(f64, f64)]) -> PointCloud<f64> {
        PointCloud::from_xy(xy).unwrap()
    }

    fn scored(i: usize, j: usize, mds: f64) -> ScoredSegment<f64> {
        ScoredSegment {
            i,
            j,
            segment: Segment::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)).unwrap(),
            mds,
        }
    }

    #[test]
    fn interior_of_square_with_center() {
        let c = cloud(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)]);
        let hull = convex_hull(&c).unwrap();
        assert_eq!(interior_points(&c, &hull).unwrap(), vec![4]);
        let tri = cloud(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        let hull = convex_hull(&tri).unwrap();
        assert!(matches!(
            interior_points(&tri, &hull),
            Err(Error::EmptyInterior)
        ));
    }

    #[test]
    fn mds_examples() {
        let c = cloud(&[(1.0, 2.0), (1.5, -2.0), (1.0, 0.0)]);
        let s = Segment::new(Point2::new(0.0, 0.0), Point2::new(2.0, 0.0)).unwrap();
        assert_eq!(mds_score(&s, &[0, 1], &c).unwrap(), 2.0);
        assert_eq!(mds_score(&s, &[2], &c).unwrap(), 0.0);
        assert!(mds_score(&s, &[], &c).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let c = cloud(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.45, 0.6)]);
        let hull = convex_hull(&c).unwrap();
        let all = enumerate_hull_segments(&hull, &c, &LocatorConfig::default()).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0].mds <= w[1].mds));
        let single = LocatorConfig::new(StartPolicy::SingleStart(2), 1).unwrap();
        let from2 = enumerate_hull_segments(&hull, &c, &single).unwrap();
        assert_eq!(from2.len(), 3);
        assert!(from2.iter().all(|s| s.touches(2)));
        let random = LocatorConfig::new(StartPolicy::RandomStart(9), 1).unwrap();
        assert_eq!(
            enumerate_hull_segments(&hull, &c, &random).unwrap().len(),
            3
        );
        let bad = LocatorConfig::new(StartPolicy::SingleStart(4), 1).unwrap();
        assert!(enumerate_hull_segments(&hull, &c, &bad).is_err());
        assert!(LocatorConfig::new(StartPolicy::AllPairs, 0).is_err());
        // the diagonal through the interior point wins
        assert_eq!((all[0].i, all[0].j), (1, 3));
    }

    #[test]
    fn policy_strings() {
        for p in [
            StartPolicy::AllPairs,
            StartPolicy::SingleStart(4),
            StartPolicy::RandomStart(99),
        ] {
            assert_eq!(p.to_string().parse::<StartPolicy>().unwrap(), p);
        }
        assert!("single-start:x".parse::<StartPolicy>().is_err());
        assert!("every-pair".parse::<StartPolicy>().is_err());
    }

    #[test]
    fn best_and_ties() {
        let list = [scored(0, 1, 3.0), scored(0, 2, 1.0), scored(1, 2, 2.0)];
        assert_eq!(best_segment(&list).unwrap().mds, 1.0);
        let tied = [scored(2, 5, 1.0), scored(1, 7, 1.0), scored(1, 3, 4.0)];
        let b = best_segment(&tied).unwrap();
        assert_eq!((b.i, b.j), (1, 7));
        assert!(best_segment::<f64>(&[]).is_none());
    }

    #[test]
    fn dv_prefers_midpoint_on_ties() {
        let c = cloud(&[(0.0, 0.0), (3.0, 0.0), (1.5, 1.0), (1.5, -1.0), (1.5, 5.0)]);
        let field = ClearanceField::new(&c).unwrap();
        let best = ScoredSegment {
            i: 0,
            j: 1,
            segment: Segment::new(c.point(0), c.point(1)).unwrap(),
            mds: 0.0,
        };
        // samples at x = 0, 1, 2, 3: steps 1 and 2 tie, both are equally
        // close to the midpoint, so the smaller step wins
        let dv = dv_point(&best, &field, 3).unwrap();
        assert_eq!(dv.step_index, 1);
        assert!(dv.clearance > 0.0);
        let dv = dv_point(&best, &field, 4).unwrap();
        assert_eq!(dv.step_index, 2);
        assert_eq!(dv.point, Point2::new(1.5, 0.0));
        assert!(dv_point(&best, &field, 2).is_err());
    }
}
