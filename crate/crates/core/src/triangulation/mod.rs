//! Delaunay triangulation, its Voronoi dual, and nearest-point queries over
//! the Delaunay graph.

mod clearance;
mod delaunay;
mod voronoi;

pub use clearance::{nearest_points, ClearanceField, Nearest};
pub use voronoi::{voronoi_from_delaunay, VoronoiCell, VoronoiDiagram};

use crate::error::Result;
use crate::geom::{Point2, PointCloud};
use crate::scalar::Scalar;

/// Adjacency marker for an edge on the convex hull.
pub const BOUNDARY: usize = usize::MAX;

/// A Delaunay triangulation of a borrowed cloud.
///
/// Triangles are counterclockwise and stored canonically: each triple is
/// rotated so its smallest identifier comes first and the list is sorted.
/// `neighbors[t][k]` is the triangle across the edge opposite vertex `k`,
/// or [`BOUNDARY`].
#[derive(Debug, Clone)]
pub struct Triangulation<'a, T> {
    cloud: &'a PointCloud<T>,
    triangles: Vec<[usize; 3]>,
    neighbors: Vec<[usize; 3]>,
    /// Inserted point each identifier resolves to (itself unless it is an
    /// exact duplicate of an earlier point).
    representative: Vec<usize>,
    /// Delaunay-graph neighbors of each inserted point, sorted.
    adjacency: Vec<Vec<usize>>,
    /// Later duplicates of each inserted point.
    aliases: Vec<Vec<usize>>,
    /// One incident triangle per inserted point.
    incident: Vec<usize>,
}

/// Builds the Delaunay triangulation of `cloud`, inserting points in
/// identifier order.
pub fn delaunay<T: Scalar>(cloud: &PointCloud<T>) -> Result<Triangulation<'_, T>> {
    delaunay::build(cloud)
}

impl<'a, T: Scalar> Triangulation<'a, T> {
    pub fn cloud(&self) -> &'a PointCloud<T> {
        self.cloud
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn neighbors(&self) -> &[[usize; 3]] {
        &self.neighbors
    }

    pub fn triangle_points(&self, t: usize) -> [Point2<T>; 3] {
        self.triangles[t].map(|v| self.cloud.point(v))
    }

    /// Identifier that `id` was merged into; differs from `id` only for
    /// exact duplicates.
    pub fn representative(&self, id: usize) -> usize {
        self.representative[id]
    }

    pub fn is_inserted(&self, id: usize) -> bool {
        self.representative[id] == id
    }

    /// Delaunay-graph neighbors of an inserted point.
    pub fn vertex_neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub(crate) fn aliases(&self, id: usize) -> &[usize] {
        &self.aliases[id]
    }

    /// Triangles around `id` in counterclockwise order, and whether the fan
    /// is open (the point lies on the hull).
    pub fn fan(&self, id: usize) -> (Vec<usize>, bool) {
        let start = self.incident[id];
        if start == BOUNDARY {
            return (Vec::new(), false);
        }
        let slot = |t: usize| self.triangles[t].iter().position(|&v| v == id).unwrap();
        // rewind clockwise to the first triangle of an open fan
        let mut first = start;
        loop {
            let prev = self.neighbors[first][(slot(first) + 2) % 3];
            if prev == BOUNDARY || prev == start {
                break;
            }
            first = prev;
        }
        let mut fan = vec![first];
        let mut cur = first;
        loop {
            let next = self.neighbors[cur][(slot(cur) + 1) % 3];
            if next == BOUNDARY {
                return (fan, true);
            }
            if next == first {
                return (fan, false);
            }
            fan.push(next);
            cur = next;
        }
    }
}
