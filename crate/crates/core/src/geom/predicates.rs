use robust::Coord;

use super::Point2;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Turn direction of an ordered triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    /// `-1`, `0` or `+1`.
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

#[inline]
fn coord<T: Scalar>(p: Point2<T>) -> Coord<f64> {
    Coord {
        x: p.x.into(),
        y: p.y.into(),
    }
}

/// Exact orientation of `c` relative to the directed line `a -> b`.
///
/// Backed by adaptive-precision arithmetic, so the sign is correct for
/// every representable input.
#[inline]
pub fn orient<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Orientation {
    let det = robust::orient2d(coord(a), coord(b), coord(c));
    if det > 0.0 {
        Orientation::CounterClockwise
    } else if det < 0.0 {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Positive when `d` lies strictly inside the circle through the
/// counterclockwise triple `a, b, c`, negative outside, zero on it.
#[inline]
pub fn incircle<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>, d: Point2<T>) -> f64 {
    robust::incircle(coord(a), coord(b), coord(c), coord(d))
}

/// Circle through three non-collinear points as `(center, radius)`.
pub fn circumcircle<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Result<(Point2<T>, T)> {
    if orient(a, b, c) == Orientation::Collinear {
        return Err(Error::DegenerateInput("circumcircle of collinear points"));
    }
    let center = circumcenter(a, b, c);
    Ok((center, center.distance(a)))
}

/// Circumcenter, computed relative to `a` to limit cancellation.
pub(crate) fn circumcenter<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Point2<T> {
    let ab = b.sub(a);
    let ac = c.sub(a);
    let d = T::lit(2.0) * (ab.x * ac.y - ab.y * ac.x);
    let ab2 = ab.norm_sq();
    let ac2 = ac.norm_sq();
    let ux = (ac.y * ab2 - ab.y * ac2) / d;
    let uy = (ab.x * ac2 - ac.x * ab2) / d;
    Point2 {
        x: a.x + ux,
        y: a.y + uy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)).sign(), 1);
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)).sign(), 0);
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 0.0), p(0.0, -1.0)).sign(), -1);
    }

    #[test]
    fn orientation_is_exact_near_degeneracy() {
        // Naive cross products misclassify points a few ulps off this line.
        let a = p(0.5, 0.5);
        let b = p(12.0, 12.0);
        let c = p(24.0, 24.0);
        assert_eq!(orient(a, b, c), Orientation::Collinear);
        let c_up = p(24.0, 24.000000000000004);
        assert_eq!(orient(a, b, c_up), Orientation::CounterClockwise);
    }

    #[test]
    fn circumcircle_examples() {
        let (c, r) = circumcircle(p(0.0, 0.0), p(2.0, 0.0), p(0.0, 2.0)).unwrap();
        assert!((c.x - 1.0).abs() < 1e-15 && (c.y - 1.0).abs() < 1e-15);
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        let (c, r) = circumcircle(p(-1.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)).unwrap();
        assert!(c.x.abs() < 1e-15 && c.y.abs() < 1e-15);
        assert!((r - 1.0).abs() < 1e-15);
        assert!(circumcircle(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)).is_err());
    }

    #[test]
    fn circumcircle_is_equidistant() {
        let mut rng = SeededRng::new(11);
        let mut checked = 0;
        while checked < 500 {
            let pts: Vec<_> = (0..3)
                .map(|_| p(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)))
                .collect();
            // skip slivers; the relative bound only makes sense away from degeneracy
            let area2 = (pts[1].x - pts[0].x) * (pts[2].y - pts[0].y)
                - (pts[1].y - pts[0].y) * (pts[2].x - pts[0].x);
            if area2.abs() < 1e-3 {
                continue;
            }
            let (c, r) = circumcircle(pts[0], pts[1], pts[2]).unwrap();
            for q in &pts {
                assert!((c.distance(*q) - r).abs() <= 1e-10 * r);
            }
            checked += 1;
        }
    }

    #[test]
    fn incircle_sign() {
        let (a, b, c) = (p(-1.0, 0.0), p(1.0, 0.0), p(0.0, 1.0));
        assert!(incircle(a, b, c, p(0.0, 0.0)) > 0.0);
        assert!(incircle(a, b, c, p(0.0, -1.0)) == 0.0);
        assert!(incircle(a, b, c, p(2.0, 2.0)) < 0.0);
    }
}
