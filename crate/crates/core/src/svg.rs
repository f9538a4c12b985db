//! SVG figures of a run. Each layer is a `<g>` with a fixed id, so a viewer
//! can toggle it. Output depends only on the inputs.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Point2, PointCloud};
use crate::io::{Real, Report};

type P = Point2<f64>;

/// Which layers to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layers {
    pub points: bool,
    pub hull: bool,
    pub segments: bool,
    pub dv: bool,
    pub polygon: bool,
}

impl Layers {
    pub const ALL: Layers = Layers {
        points: true,
        hull: true,
        segments: true,
        dv: true,
        polygon: true,
    };
    pub const NONE: Layers = Layers {
        points: false,
        hull: false,
        segments: false,
        dv: false,
        polygon: false,
    };
}

impl Default for Layers {
    fn default() -> Self {
        Layers::ALL
    }
}

impl FromStr for Layers {
    type Err = Error;

    /// Comma-separated names out of `points,hull,segments,dv,polygon`, or `all`.
    fn from_str(s: &str) -> Result<Self> {
        let mut l = Layers::NONE;
        for name in s.split(',').map(str::trim) {
            match name {
                "all" => l = Layers::ALL,
                "points" => l.points = true,
                "hull" => l.hull = true,
                "segments" => l.segments = true,
                "dv" => l.dv = true,
                "polygon" => l.polygon = true,
                _ => return Err(Error::InvalidConfig(format!("unknown layer `{name}`"))),
            }
        }
        Ok(l)
    }
}

/// Geometry to draw. Empty parts are simply skipped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub points: Vec<P>,
    pub hull: Vec<P>,
    pub segments: Vec<(P, P)>,
    pub dv: Option<P>,
    pub polygon: Vec<P>,
}

fn pt(v: &[Real; 2]) -> P {
    Point2 {
        x: v[0].0,
        y: v[1].0,
    }
}

impl Scene {
    /// Everything in `report`; the points layer needs the cloud.
    pub fn from_report(report: &Report, cloud: Option<&PointCloud<f64>>) -> Self {
        Scene {
            points: cloud.map(|c| c.points().to_vec()).unwrap_or_default(),
            hull: report.hull_vertices.iter().map(pt).collect(),
            segments: report
                .top_segments
                .iter()
                .map(|s| (pt(&s.a), pt(&s.b)))
                .collect(),
            dv: Some(Point2 {
                x: report.dv_point.x.0,
                y: report.dv_point.y.0,
            }),
            polygon: report.polygon.vertices.iter().map(pt).collect(),
        }
    }

    pub fn points_only(cloud: &PointCloud<f64>) -> Self {
        Scene {
            points: cloud.points().to_vec(),
            ..Default::default()
        }
    }

    /// Bounds of all geometry. Every part lies within the cloud's hull, so
    /// with a cloud or hull present these are the cloud bounds.
    fn bounds(&self) -> Option<(P, P)> {
        let all = self
            .points
            .iter()
            .chain(&self.hull)
            .chain(self.segments.iter().flat_map(|(a, b)| [a, b]))
            .chain(self.dv.as_ref())
            .chain(&self.polygon);
        all.fold(None, |acc, &p| {
            Some(match acc {
                None => (p, p),
                Some((lo, hi)) => (
                    Point2 {
                        x: f64::min(lo.x, p.x),
                        y: f64::min(lo.y, p.y),
                    },
                    Point2 {
                        x: f64::max(hi.x, p.x),
                        y: f64::max(hi.y, p.y),
                    },
                ),
            })
        })
    }
}

/// Scene x and flipped y, so that y grows upward as in the data.
fn xy(p: P) -> (f64, f64) {
    (p.x, -p.y)
}

fn path_d(points: &[P], closed: bool) -> String {
    let mut d = String::new();
    for (i, &p) in points.iter().enumerate() {
        let (x, y) = xy(p);
        let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, x, y);
    }
    if closed {
        d.push_str(" Z");
    }
    d
}

pub fn render_svg(scene: &Scene, layers: Layers) -> String {
    let (lo, hi) = scene
        .bounds()
        .unwrap_or((Point2 { x: 0.0, y: 0.0 }, Point2 { x: 1.0, y: 1.0 }));
    let (mut w, mut h) = (hi.x - lo.x, hi.y - lo.y);
    let fallback = if w.max(h) > 0.0 { w.max(h) } else { 1.0 };
    if w <= 0.0 {
        w = fallback;
    }
    if h <= 0.0 {
        h = fallback;
    }
    let (mx, my) = (0.05 * w, 0.05 * h);
    let size = w.max(h);
    let r = 0.004 * size;
    let stroke = 0.002 * size;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        lo.x - mx,
        -(hi.y + my),
        w + 2.0 * mx,
        h + 2.0 * my
    );
    if layers.polygon && scene.polygon.len() >= 3 {
        let _ = writeln!(
            s,
            r##"<g id="polygon"><path class="mie" d="{}" fill="#f4c7a1" fill-opacity="0.5" stroke="#c0392b" stroke-width="{stroke}"/></g>"##,
            path_d(&scene.polygon, true)
        );
    }
    if layers.hull && scene.hull.len() >= 2 {
        let _ = writeln!(
            s,
            r##"<g id="hull"><path class="hull" d="{}" fill="none" stroke="#555555" stroke-width="{stroke}"/></g>"##,
            path_d(&scene.hull, true)
        );
    }
    if layers.segments && !scene.segments.is_empty() {
        s.push_str(r#"<g id="segments">"#);
        s.push('\n');
        for &(a, b) in &scene.segments {
            let ((x1, y1), (x2, y2)) = (xy(a), xy(b));
            let _ = writeln!(
                s,
                r##"<line class="segment" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#2e86c1" stroke-width="{stroke}"/>"##
            );
        }
        s.push_str("</g>\n");
    }
    if layers.points && !scene.points.is_empty() {
        s.push_str(r#"<g id="points">"#);
        s.push('\n');
        for &p in &scene.points {
            let (x, y) = xy(p);
            let _ = writeln!(
                s,
                r##"<circle class="point" cx="{x}" cy="{y}" r="{r}" fill="#222222"/>"##
            );
        }
        s.push_str("</g>\n");
    }
    if let (true, Some(p)) = (layers.dv, scene.dv) {
        let (x, y) = xy(p);
        let _ = writeln!(
            s,
            r##"<g id="dv"><circle class="dv" cx="{x}" cy="{y}" r="{}" fill="none" stroke="#27ae60" stroke-width="{stroke}"/></g>"##,
            3.0 * r
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn save_svg(scene: &Scene, layers: Layers, path: &Path) -> Result<()> {
    crate::io::write_atomic(path, render_svg(scene, layers).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_glyphs() {
        let c = PointCloud::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        let svg = render_svg(&Scene::points_only(&c), Layers::ALL);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches(r#"class="point""#).count(), 3);
        // 5% margins on a unit box
        assert!(svg.contains(r#"viewBox="-0.05 -1.05 1.1 1.1""#), "{svg}");
    }

    #[test]
    fn square_polygon_is_one_closed_path() {
        let sq = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let scene = Scene {
            polygon: sq,
            ..Default::default()
        };
        let svg = render_svg(&scene, Layers::ALL);
        assert_eq!(svg.matches("<path").count(), 1);
        let d = svg
            .split(r#" d=""#)
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        assert_eq!(d.matches(['M', 'L']).count(), 4);
        assert!(d.ends_with('Z'));
    }

    #[test]
    fn layers_toggle() {
        let c = PointCloud::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        let scene = Scene {
            dv: Some(Point2::new(0.2, 0.2)),
            ..Scene::points_only(&c)
        };
        let only_dv: Layers = "dv".parse().unwrap();
        let svg = render_svg(&scene, only_dv);
        assert!(!svg.contains(r#"id="points""#));
        assert!(svg.contains(r#"id="dv""#));
        assert!("points,bogus".parse::<Layers>().is_err());
        assert_eq!("all".parse::<Layers>().unwrap(), Layers::ALL);
    }

    #[test]
    fn degenerate_bounds() {
        let scene = Scene {
            dv: Some(Point2::new(2.0, 3.0)),
            ..Default::default()
        };
        let svg = render_svg(&scene, Layers::ALL);
        assert!(svg.contains(r#"viewBox="1.95 -3.05 1.1 1.1""#), "{svg}");
    }
}
