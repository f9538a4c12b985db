use super::Triangulation;
use crate::geom::predicates_circumcenter as circumcenter;
use crate::geom::{polygon_area, Point2, Polygon};
use crate::scalar::Scalar;

/// Cell of one cloud point: indices into [`VoronoiDiagram::vertices`] in
/// counterclockwise order.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiCell {
    pub vertices: Vec<usize>,
    /// The site is on the convex hull, so the cell extends to infinity and
    /// `vertices` lists only its finite corners.
    pub unbounded: bool,
}

/// Voronoi dual of a Delaunay triangulation. Vertex `t` is the
/// circumcenter of triangle `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiDiagram<T> {
    pub vertices: Vec<Point2<T>>,
    pub cells: Vec<VoronoiCell>,
}

pub fn voronoi_from_delaunay<T: Scalar>(tri: &Triangulation<'_, T>) -> VoronoiDiagram<T> {
    let vertices = (0..tri.triangles().len())
        .map(|t| {
            let [a, b, c] = tri.triangle_points(t);
            circumcenter(a, b, c)
        })
        .collect();
    let cells = (0..tri.cloud().len())
        .map(|id| {
            let (fan, open) = tri.fan(id);
            VoronoiCell {
                vertices: fan,
                unbounded: open,
            }
        })
        .collect();
    VoronoiDiagram { vertices, cells }
}

impl<T: Scalar> VoronoiDiagram<T> {
    /// Closed polygon of a bounded cell.
    pub fn cell_polygon(&self, id: usize) -> Option<Polygon<T>> {
        let cell = &self.cells[id];
        if cell.unbounded {
            return None;
        }
        let mut pts: Vec<Point2<T>> = cell.vertices.iter().map(|&v| self.vertices[v]).collect();
        // cocircular sites give repeated circumcenters
        pts.dedup();
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        Polygon::new(pts).ok()
    }

    /// Area of a bounded cell; `None` for hull sites.
    pub fn cell_area(&self, id: usize) -> Option<T> {
        self.cell_polygon(id).map(|p| polygon_area(&p))
    }

    pub fn bounded_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| !c.unbounded && !c.vertices.is_empty())
            .count()
    }
}
