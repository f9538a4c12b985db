use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use super::{delaunay, Triangulation};
use crate::error::{Error, Result};
use crate::geom::{Point2, PointCloud};
use crate::idset::IdSet;
use crate::scalar::Scalar;

/// Result of a nearest-point query: the minimum distance and every
/// identifier within `tie_tol` of it, in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Nearest<T> {
    pub distance: T,
    pub ids: Vec<usize>,
}

/// Nearest non-excluded points by linear scan.
pub fn nearest_points<T: Scalar>(
    query: Point2<T>,
    cloud: &PointCloud<T>,
    excluded: &IdSet,
    tie_tol: T,
) -> Result<Nearest<T>> {
    let mut best = T::infinity();
    for (id, p) in cloud.points().iter().enumerate() {
        if !excluded.contains(id) {
            best = best.min(p.distance(query));
        }
    }
    if best == T::infinity() {
        return Err(Error::NoCandidate);
    }
    let ids = cloud
        .points()
        .iter()
        .enumerate()
        .filter(|&(id, p)| !excluded.contains(id) && p.distance(query) <= best + tie_tol)
        .map(|(id, _)| id)
        .collect();
    Ok(Nearest {
        distance: best,
        ids,
    })
}

/// Distance-to-cloud queries backed by the Delaunay graph.
#[derive(Debug, Clone)]
pub struct ClearanceField<'a, T> {
    tri: Triangulation<'a, T>,
    /// Inserted points, used to start walks.
    start: usize,
}

struct Entry<T> {
    dist: T,
    id: usize,
}

impl<T: PartialOrd> PartialEq for Entry<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: PartialOrd> Eq for Entry<T> {}
impl<T: PartialOrd> PartialOrd for Entry<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: PartialOrd> Ord for Entry<T> {
    // reversed: BinaryHeap pops the smallest distance first
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then(other.id.cmp(&self.id))
    }
}

impl<'a, T: Scalar> ClearanceField<'a, T> {
    pub fn new(cloud: &'a PointCloud<T>) -> Result<Self> {
        Ok(Self::from_triangulation(delaunay(cloud)?))
    }

    pub fn from_triangulation(tri: Triangulation<'a, T>) -> Self {
        let start = tri.representative(0);
        ClearanceField { tri, start }
    }

    pub fn triangulation(&self) -> &Triangulation<'a, T> {
        &self.tri
    }

    pub fn cloud(&self) -> &'a PointCloud<T> {
        self.tri.cloud()
    }

    /// Distance from `query` to the nearest cloud point.
    pub fn clearance(&self, query: Point2<T>) -> T {
        self.walk(query, None, T::zero())
            .expect("nonempty cloud always has a nearest point")
            .distance
    }

    /// `1 / clearance^2`, and `+inf` on cloud points.
    pub fn local_density(&self, query: Point2<T>) -> T {
        let c = self.clearance(query);
        if c == T::zero() {
            T::infinity()
        } else {
            (c * c).recip()
        }
    }

    /// Same contract as the free [`nearest_points`]: the Delaunay walk is
    /// used while most points are available, the linear scan once the
    /// exclusion set covers more than half the cloud.
    pub fn nearest_points(
        &self,
        query: Point2<T>,
        excluded: &IdSet,
        tie_tol: T,
    ) -> Result<Nearest<T>> {
        let n = self.cloud().len();
        if excluded.len() >= n {
            return Err(Error::NoCandidate);
        }
        if 2 * excluded.len() > n {
            return nearest_points(query, self.cloud(), excluded, tie_tol);
        }
        self.walk(query, Some(excluded), tie_tol)
    }

    /// Greedy descent to the nearest inserted point, then best-first
    /// expansion over the Delaunay graph. Points leave the queue in
    /// nondecreasing distance order (the next-nearest point is always a
    /// graph neighbor of one already popped).
    fn walk(&self, query: Point2<T>, excluded: Option<&IdSet>, tie_tol: T) -> Result<Nearest<T>> {
        let cloud = self.cloud();
        let dist = |id: usize| cloud.point(id).distance(query);

        let mut cur = self.start;
        let mut cur_d = dist(cur);
        loop {
            let mut moved = false;
            for &nb in self.tri.vertex_neighbors(cur) {
                let d = dist(nb);
                if d < cur_d {
                    cur = nb;
                    cur_d = d;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }

        let is_excluded = |id: usize| excluded.is_some_and(|e| e.contains(id));
        let mut heap = BinaryHeap::new();
        let mut seen = HashSet::new();
        heap.push(Entry {
            dist: cur_d,
            id: cur,
        });
        seen.insert(cur);
        let mut best = T::infinity();
        let mut found: Vec<(T, usize)> = Vec::new();
        while let Some(Entry { dist: d, id }) = heap.pop() {
            // slack absorbs rounding in the pop order for near-equal distances
            let slack = T::lit(1e-9) * (best.abs() + T::one());
            if d > best + tie_tol + slack {
                break;
            }
            for &alias in std::iter::once(&id).chain(self.tri.aliases(id)) {
                if !is_excluded(alias) {
                    best = best.min(d);
                    found.push((d, alias));
                }
            }
            for &nb in self.tri.vertex_neighbors(id) {
                if seen.insert(nb) {
                    heap.push(Entry {
                        dist: dist(nb),
                        id: nb,
                    });
                }
            }
        }
        if found.is_empty() {
            return Err(Error::NoCandidate);
        }
        let mut ids: Vec<usize> = found
            .into_iter()
            .filter(|&(d, _)| d <= best + tie_tol)
            .map(|(_, id)| id)
            .collect();
        ids.sort_unstable();
        Ok(Nearest {
            distance: best,
            ids,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn cloud(xy: &[(f64, f64)]) -> PointCloud<f64> {
        PointCloud::from_xy(xy).unwrap()
    }

    #[test]
    fn nearest_examples() {
        let c = cloud(&[(1.0, 0.0), (0.0, 2.0), (5.0, 5.0)]);
        let q = Point2::new(0.0, 0.0);
        let none = IdSet::new(3);
        let r = nearest_points(q, &c, &none, 0.0).unwrap();
        assert_eq!((r.distance, r.ids), (1.0, vec![0]));
        let r = nearest_points(q, &c, &IdSet::from_ids(3, [0]), 0.0).unwrap();
        assert_eq!((r.distance, r.ids), (2.0, vec![1]));
        assert!(matches!(
            nearest_points(q, &c, &IdSet::full(3), 0.0),
            Err(Error::NoCandidate)
        ));

        let tie = cloud(&[(1.0, 0.0), (0.0, 1.0), (3.0, 3.0)]);
        let r = nearest_points(q, &tie, &IdSet::new(3), 1e-9).unwrap();
        assert_eq!(r.ids, vec![0, 1]);
        let field = ClearanceField::new(&tie).unwrap();
        assert_eq!(
            field.nearest_points(q, &IdSet::new(3), 1e-9).unwrap().ids,
            vec![0, 1]
        );
    }

    #[test]
    fn clearance_and_density() {
        let mut xy = Vec::new();
        for i in 0..64 {
            let a = 2.0 * std::f64::consts::PI * i as f64 / 64.0;
            xy.push((a.cos(), a.sin()));
        }
        let c = cloud(&xy);
        let field = ClearanceField::new(&c).unwrap();
        assert!((field.clearance(Point2::new(0.0, 0.0)) - 1.0).abs() < 1e-12);
        assert_eq!(field.clearance(c.point(5)), 0.0);
        assert_eq!(field.local_density(c.point(5)), f64::INFINITY);
        assert!(
            field.local_density(Point2::new(0.0, 0.0)) < field.local_density(Point2::new(0.9, 0.0))
        );
    }

    #[test]
    fn walk_matches_scan() {
        for seed in 0..5u64 {
            let mut rng = SeededRng::new(seed);
            let xy: Vec<_> = (0..200)
                .map(|_| (rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                .collect();
            let c = cloud(&xy);
            let field = ClearanceField::new(&c).unwrap();
            for _ in 0..200 {
                let q = Point2::new(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
                let nexcl = rng.index(120);
                let excl = IdSet::from_ids(200, (0..nexcl).map(|_| rng.index(200)));
                let tol = if rng.unit() < 0.5 { 0.0 } else { 0.05 };
                assert_eq!(
                    field.nearest_points(q, &excl, tol).unwrap(),
                    nearest_points(q, &c, &excl, tol).unwrap()
                );
                let scan = nearest_points(q, &c, &IdSet::new(200), 0.0).unwrap();
                assert_eq!(field.clearance(q), scan.distance);
            }
        }
    }

    #[test]
    fn duplicates_are_reachable() {
        let c = cloud(&[
            (0.0, 0.0),
            (4.0, 0.0),
            (0.0, 4.0),
            (1.0, 1.0),
            (1.0, 1.0),
            (4.0, 4.0),
        ]);
        let field = ClearanceField::new(&c).unwrap();
        let q = Point2::new(1.1, 1.0);
        let r = field.nearest_points(q, &IdSet::new(6), 0.0).unwrap();
        assert_eq!(r.ids, vec![3, 4]);
        let r = field
            .nearest_points(q, &IdSet::from_ids(6, [3]), 0.0)
            .unwrap();
        assert_eq!(r.ids, vec![4]);
    }
}
