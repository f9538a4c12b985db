use super::{orient, Orientation, Point2, Polygon, Segment};
use crate::scalar::Scalar;

/// Default absolute edge-distance tolerance for boundary classification.
pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-12;

/// Where a point sits relative to a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Absolute shoelace area.
pub fn polygon_area<T: Scalar>(poly: &Polygon<T>) -> T {
    // shift to the first vertex so large offsets do not swamp the sum
    let o = poly.vertices()[0];
    let twice = poly.edges().fold(T::zero(), |acc, (p, q)| {
        let (p, q) = (p.sub(o), q.sub(o));
        acc + (p.x * q.y - q.x * p.y)
    });
    (twice / T::lit(2.0)).abs()
}

pub fn point_in_polygon<T: Scalar>(p: Point2<T>, poly: &Polygon<T>) -> Location {
    point_in_polygon_tol(p, poly, T::lit(DEFAULT_BOUNDARY_TOL))
}

/// Even-odd ray crossing, with points within `tol` of an edge reported as
/// [`Location::Boundary`].
pub fn point_in_polygon_tol<T: Scalar>(p: Point2<T>, poly: &Polygon<T>, tol: T) -> Location {
    let mut inside = false;
    for (a, b) in poly.edges() {
        if (Segment { a, b }).distance_to(p) <= tol {
            return Location::Boundary;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

#[inline]
fn within_box<T: Scalar>(a: Point2<T>, b: Point2<T>, p: Point2<T>) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// True when the closed segments `p1p2` and `q1q2` share at least one point.
pub fn segments_intersect<T: Scalar>(
    p1: Point2<T>,
    p2: Point2<T>,
    q1: Point2<T>,
    q2: Point2<T>,
) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    use Orientation::Collinear;
    if d1 != d2
        && d3 != d4
        && d1 != Collinear
        && d2 != Collinear
        && d3 != Collinear
        && d4 != Collinear
    {
        return true;
    }
    (d1 == Collinear && within_box(q1, q2, p1))
        || (d2 == Collinear && within_box(q1, q2, p2))
        || (d3 == Collinear && within_box(p1, p2, q1))
        || (d4 == Collinear && within_box(p1, p2, q2))
}

/// Adjacent edges `u-v` and `v-w` overlap beyond their shared vertex.
fn folds_back<T: Scalar>(u: Point2<T>, v: Point2<T>, w: Point2<T>) -> bool {
    orient(u, v, w) == Orientation::Collinear && u.sub(v).dot(w.sub(v)) > T::zero()
}

/// True when no two edges meet except adjacent edges at their shared vertex.
///
/// Edges are bucketed on a uniform grid and only pairs sharing a cell are
/// tested, so typical polygons cost close to linear time.
pub fn polygon_is_simple<T: Scalar>(poly: &Polygon<T>) -> bool {
    let v = poly.vertices();
    let m = v.len();

    for i in 0..m {
        if folds_back(v[i], v[(i + 1) % m], v[(i + 2) % m]) {
            return false;
        }
    }
    if m <= 3 {
        return true;
    }

    let (lo, hi) = v.iter().fold((v[0], v[0]), |(lo, hi), p| {
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
    });
    let side = ((m as f64).sqrt().ceil() as usize).max(1);
    let span_x: f64 = (hi.x - lo.x).into();
    let span_y: f64 = (hi.y - lo.y).into();
    let cell_of = |val: f64, origin: f64, span: f64| -> usize {
        if span <= 0.0 {
            0
        } else {
            (((val - origin) / span * side as f64) as usize).min(side - 1)
        }
    };
    let (lx, ly): (f64, f64) = (lo.x.into(), lo.y.into());
    let ranges: Vec<[usize; 4]> = (0..m)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % m]);
            let (ax, ay, bx, by): (f64, f64, f64, f64) =
                (a.x.into(), a.y.into(), b.x.into(), b.y.into());
            [
                cell_of(ax.min(bx), lx, span_x),
                cell_of(ax.max(bx), lx, span_x),
                cell_of(ay.min(by), ly, span_y),
                cell_of(ay.max(by), ly, span_y),
            ]
        })
        .collect();

    let mut grid: Vec<Vec<usize>> = vec![Vec::new(); side * side];
    for (e, r) in ranges.iter().enumerate() {
        for cx in r[0]..=r[1] {
            for cy in r[2]..=r[3] {
                grid[cy * side + cx].push(e);
            }
        }
    }

    for (cell, edges) in grid.iter().enumerate() {
        let (cx, cy) = (cell % side, cell / side);
        for (k, &e) in edges.iter().enumerate() {
            for &f in &edges[k + 1..] {
                let (re, rf) = (ranges[e], ranges[f]);
                // visit each pair only in the first cell both ranges share
                if cx != re[0].max(rf[0]) || cy != re[2].max(rf[2]) {
                    continue;
                }
                let (i, j) = (e.min(f), e.max(f));
                if j == i + 1 || (i == 0 && j == m - 1) {
                    continue;
                }
                if segments_intersect(v[i], v[(i + 1) % m], v[j], v[(j + 1) % m]) {
                    return false;
                }
            }
        }
    }
    true
}
