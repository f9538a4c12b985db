use super::{orient, Orientation, PointCloud};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Strict convex hull by Andrew's monotone chain.
///
/// Returns point identifiers in counterclockwise order starting from the
/// lexicographically smallest point. Collinear boundary points and
/// duplicates are dropped.
pub fn convex_hull<T: Scalar>(cloud: &PointCloud<T>) -> Result<Vec<usize>> {
    let pts = cloud.points();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(
            "convex hull needs at least 3 points",
        ));
    }
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| {
        pts[i]
            .x
            .partial_cmp(&pts[j].x)
            .unwrap()
            .then(pts[i].y.partial_cmp(&pts[j].y).unwrap())
            .then(i.cmp(&j))
    });

    let mut hull: Vec<usize> = Vec::with_capacity(2 * pts.len());
    // lower chain, then upper chain; `floor` keeps the upper pass from
    // popping into the lower one
    for pass in 0..2 {
        let floor = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &id in iter {
            while hull.len() >= floor + 2 {
                let b = hull[hull.len() - 1];
                let a = hull[hull.len() - 2];
                if orient(pts[a], pts[b], pts[id]) == Orientation::CounterClockwise {
                    break;
                }
                hull.pop();
            }
            hull.push(id);
        }
        // the last point of each chain is the first of the next
        hull.pop();
    }

    // duplicates of the extreme points can survive the chain joins
    hull.dedup_by(|a, b| pts[*a] == pts[*b]);
    if hull.len() > 1 && pts[hull[0]] == pts[*hull.last().unwrap()] {
        hull.pop();
    }
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("all points are collinear"));
    }
    Ok(hull)
}
