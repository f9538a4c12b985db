//! Planar primitives: points, clouds, segments, polygons and the measures
//! and predicates defined on them.

mod hull;
mod polygon;
mod predicates;

pub use hull::convex_hull;
pub use polygon::{
    point_in_polygon, point_in_polygon_tol, polygon_area, polygon_is_simple, segments_intersect,
    Location, DEFAULT_BOUNDARY_TOL,
};
pub(crate) use predicates::circumcenter as predicates_circumcenter;
pub use predicates::{circumcircle, incircle, orient, Orientation};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point in the plane with finite coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    /// # Panics
    /// If either coordinate is NaN or infinite. Use [`Point2::try_new`] for
    /// untrusted input.
    pub fn new(x: T, y: T) -> Self {
        Self::try_new(x, y).expect("point coordinates must be finite")
    }

    pub fn try_new(x: T, y: T) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point2 { x, y })
        } else {
            Err(Error::NonFiniteCoordinate { index: 0 })
        }
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, o: Self) -> Self {
        Point2 {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }

    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn distance(self, o: Self) -> T {
        self.distance_sq(o).sqrt()
    }

    #[inline]
    pub fn distance_sq(self, o: Self) -> T {
        self.sub(o).norm_sq()
    }

    /// `(1 - t) * self + t * other`; exact at `t = 0` and `t = 1`.
    #[inline]
    pub fn lerp(self, other: Self, t: T) -> Self {
        let s = T::one() - t;
        Point2 {
            x: s * self.x + t * other.x,
            y: s * self.y + t * other.y,
        }
    }

    pub fn cast<U: Scalar>(self) -> Point2<U> {
        Point2 {
            x: U::lit(self.x.into()),
            y: U::lit(self.y.into()),
        }
    }
}

/// Indexed, immutable set of points. Identifiers are positions `0..len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud<T> {
    points: Vec<Point2<T>>,
}

impl<T: Scalar> PointCloud<T> {
    /// Fails on the first non-finite coordinate.
    pub fn new(points: Vec<Point2<T>>) -> Result<Self> {
        if let Some(index) = points
            .iter()
            .position(|p| !(p.x.is_finite() && p.y.is_finite()))
        {
            return Err(Error::NonFiniteCoordinate { index });
        }
        Ok(PointCloud { points })
    }

    pub fn from_xy(xy: &[(T, T)]) -> Result<Self> {
        Self::new(xy.iter().map(|&(x, y)| Point2 { x, y }).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn point(&self, id: usize) -> Point2<T> {
        self.points[id]
    }

    #[inline]
    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    /// Axis-aligned bounds as `(min, max)`, or `None` for an empty cloud.
    pub fn bounds(&self) -> Option<(Point2<T>, Point2<T>)> {
        let first = *self.points.first()?;
        Some(self.points.iter().fold((first, first), |(lo, hi), p| {
            (
                Point2 {
                    x: lo.x.min(p.x),
                    y: lo.y.min(p.y),
                },
                Point2 {
                    x: hi.x.max(p.x),
                    y: hi.y.max(p.y),
                },
            )
        }))
    }

    /// Requires at least 3 points.
    pub fn require_pipeline_size(&self) -> Result<()> {
        if self.len() < 3 {
            Err(Error::TooFewPoints(self.len()))
        } else {
            Ok(())
        }
    }
}

/// A closed segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<T> {
    pub a: Point2<T>,
    pub b: Point2<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point2<T>, b: Point2<T>) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateInput("segment endpoints coincide"));
        }
        Ok(Segment { a, b })
    }

    pub fn length(&self) -> T {
        self.a.distance(self.b)
    }

    pub fn midpoint(&self) -> Point2<T> {
        self.a.lerp(self.b, T::lit(0.5))
    }

    /// Position `step / steps` of the way from `a` to `b`.
    #[inline]
    pub fn sample(&self, step: usize, steps: usize) -> Point2<T> {
        if step == steps {
            return self.b;
        }
        self.a
            .lerp(self.b, T::from_count(step) / T::from_count(steps))
    }

    /// Euclidean distance from `p` to the closest point of the segment.
    pub fn distance_to(&self, p: Point2<T>) -> T {
        let d = self.b.sub(self.a);
        let t = p.sub(self.a).dot(d) / d.norm_sq();
        if t <= T::zero() {
            p.distance(self.a)
        } else if t >= T::one() {
            p.distance(self.b)
        } else {
            let foot = Point2 {
                x: self.a.x + d.x * t,
                y: self.a.y + d.y * t,
            };
            p.distance(foot)
        }
    }
}

/// Distance from `p` to the closed segment `s`.
#[inline]
pub fn point_segment_distance<T: Scalar>(p: Point2<T>, s: &Segment<T>) -> T {
    s.distance_to(p)
}

/// A closed polygon; the last vertex connects back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<T> {
    vertices: Vec<Point2<T>>,
}

impl<T: Scalar> Polygon<T> {
    pub fn new(vertices: Vec<Point2<T>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        let m = vertices.len();
        if (0..m).any(|i| vertices[i] == vertices[(i + 1) % m]) {
            return Err(Error::DegenerateInput(
                "consecutive polygon vertices coincide",
            ));
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Iterates over the closed edge loop.
    pub fn edges(&self) -> impl Iterator<Item = (Point2<T>, Point2<T>)> + '_ {
        let m = self.vertices.len();
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % m]))
    }

    pub fn centroid_of_vertices(&self) -> Point2<T> {
        let n = T::from_count(self.vertices.len());
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((T::zero(), T::zero()), |(sx, sy), p| (sx + p.x, sy + p.y));
        Point2 {
            x: sx / n,
            y: sy / n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(ax: f64, ay: f64, bx: f64, by: f64) -> Segment<f64> {
        Segment::new(Point2::new(ax, ay), Point2::new(bx, by)).unwrap()
    }

    #[test]
    fn distance_to_segment() {
        let s = seg(0.0, 0.0, 2.0, 0.0);
        assert_eq!(point_segment_distance(Point2::new(1.0, 1.0), &s), 1.0);
        assert_eq!(point_segment_distance(Point2::new(3.0, 0.0), &s), 1.0);
        assert_eq!(point_segment_distance(Point2::new(1.0, 0.0), &s), 0.0);
    }

    #[test]
    fn sample_hits_endpoints_exactly() {
        let s = seg(0.1, 0.7, -0.3, 0.9);
        assert_eq!(s.sample(0, 7), s.a);
        assert_eq!(s.sample(7, 7), s.b);
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(Point2::try_new(f64::NAN, 0.0).is_err());
        assert!(matches!(
            PointCloud::from_xy(&[(0.0, 0.0), (f64::INFINITY, 1.0)]),
            Err(Error::NonFiniteCoordinate { index: 1 })
        ));
        let p = Point2::new(1.0, 1.0);
        assert!(Segment::new(p, p).is_err());
        assert!(Polygon::new(vec![p, Point2::new(0.0, 0.0)]).is_err());
        assert!(Polygon::new(vec![p, p, Point2::new(0.0, 0.0)]).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let s = Segment::new(Point2::new(0.0f32, 0.0), Point2::new(2.0, 0.0)).unwrap();
        assert_eq!(s.distance_to(Point2::new(1.0, 1.0)), 1.0f32);
    }
}
