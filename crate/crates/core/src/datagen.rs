//! Seeded synthetic ensembles: a jittered circle, and two congruent
//! jittered circles with the overlap carved out so their union encloses a
//! single empty void.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Point2, PointCloud};
use crate::rng::SeededRng;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnsembleKind {
    #[default]
    SingleCircle,
    DualCircles,
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnsembleKind::SingleCircle => "single-circle",
            EnsembleKind::DualCircles => "dual-circles",
        })
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single-circle" => Ok(EnsembleKind::SingleCircle),
            "dual-circles" => Ok(EnsembleKind::DualCircles),
            other => Err(Error::InvalidSpec(format!(
                "unknown ensemble kind `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub radius: f64,
    /// Half-width of the uniform radial jitter.
    pub jitter: f64,
    /// Center separation of the dual-circle ensemble, as a fraction of the
    /// radius.
    pub offset_factor: f64,
    pub seed: u64,
}

impl Default for EnsembleSpec {
    fn default() -> Self {
        EnsembleSpec {
            kind: EnsembleKind::SingleCircle,
            n: 200,
            radius: 1.0,
            jitter: 0.05,
            offset_factor: 0.5,
            seed: 0,
        }
    }
}

impl EnsembleSpec {
    pub fn single_circle(n: usize, seed: u64) -> Self {
        EnsembleSpec {
            n,
            seed,
            ..Default::default()
        }
    }

    pub fn dual_circles(n: usize, seed: u64) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::DualCircles,
            n,
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if self.n < 3 {
            return bad(format!("n must be at least 3, got {}", self.n));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return bad(format!("radius must be positive, got {}", self.radius));
        }
        if !(self.jitter >= 0.0 && self.jitter < self.radius) {
            return bad(format!(
                "jitter must lie in [0, radius), got {}",
                self.jitter
            ));
        }
        if !(self.offset_factor >= 0.0 && self.offset_factor < 2.0) {
            return bad(format!(
                "offset factor must lie in [0, 2), got {}",
                self.offset_factor
            ));
        }
        Ok(())
    }

    /// Centers of the two circles of the dual ensemble.
    pub fn centers(&self) -> [(f64, f64); 2] {
        let d = self.offset_factor * self.radius / 2.0;
        [(-d, 0.0), (d, 0.0)]
    }
}

/// Draws `(theta, r)` in that order.
fn jittered(rng: &mut SeededRng, spec: &EnsembleSpec) -> (f64, f64) {
    let theta = TAU * rng.unit();
    let r = rng.uniform(spec.radius - spec.jitter, spec.radius + spec.jitter);
    (theta, r)
}

fn to_cloud<T: Scalar>(xy: Vec<(f64, f64)>) -> Result<PointCloud<T>> {
    PointCloud::new(
        xy.into_iter()
            .map(|(x, y)| Point2 {
                x: T::lit(x),
                y: T::lit(y),
            })
            .collect(),
    )
}

pub fn gen_single_circle<T: Scalar>(spec: &EnsembleSpec) -> Result<PointCloud<T>> {
    spec.validate()?;
    if spec.kind != EnsembleKind::SingleCircle {
        return Err(Error::InvalidSpec("expected a single-circle spec".into()));
    }
    let mut rng = SeededRng::new(spec.seed);
    let xy = (0..spec.n)
        .map(|_| {
            let (theta, r) = jittered(&mut rng, spec);
            (r * theta.cos(), r * theta.sin())
        })
        .collect();
    to_cloud(xy)
}

/// Each candidate draws a circle (`unit() < 0.5` picks the left one), then
/// an angle and radius. Candidates closer than `radius - jitter` to the
/// other center are rejected.
pub fn gen_dual_circles<T: Scalar>(spec: &EnsembleSpec) -> Result<PointCloud<T>> {
    spec.validate()?;
    if spec.kind != EnsembleKind::DualCircles {
        return Err(Error::InvalidSpec("expected a dual-circles spec".into()));
    }
    let centers = spec.centers();
    let inner = spec.radius - spec.jitter;
    let budget = 100 * spec.n;
    let mut rng = SeededRng::new(spec.seed);
    let mut xy = Vec::with_capacity(spec.n);
    let mut attempts = 0;
    while xy.len() < spec.n {
        if attempts == budget {
            return Err(Error::InvalidSpec(format!(
                "rejection sampling accepted only {} of {} points in {budget} attempts",
                xy.len(),
                spec.n
            )));
        }
        attempts += 1;
        let side = usize::from(rng.unit() >= 0.5);
        let (theta, r) = jittered(&mut rng, spec);
        let (cx, cy) = centers[side];
        let (x, y) = (cx + r * theta.cos(), cy + r * theta.sin());
        let (ox, oy) = centers[1 - side];
        if (x - ox).hypot(y - oy) < inner {
            continue;
        }
        xy.push((x, y));
    }
    to_cloud(xy)
}

pub fn generate<T: Scalar>(spec: &EnsembleSpec) -> Result<PointCloud<T>> {
    match spec.kind {
        EnsembleKind::SingleCircle => gen_single_circle(spec),
        EnsembleKind::DualCircles => gen_dual_circles(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(p: &Point2<f64>) -> f64 {
        p.x.hypot(p.y)
    }

    #[test]
    fn single_circle_bounds() {
        let spec = EnsembleSpec {
            jitter: 0.0,
            ..EnsembleSpec::single_circle(100, 1)
        };
        let c: PointCloud<f64> = gen_single_circle(&spec).unwrap();
        assert!(c.points().iter().all(|p| (norm(p) - 1.0).abs() <= 1e-12));

        let spec = EnsembleSpec::single_circle(500, 2);
        let c: PointCloud<f64> = gen_single_circle(&spec).unwrap();
        assert_eq!(c.len(), 500);
        assert!(c
            .points()
            .iter()
            .all(|p| norm(p) >= 0.95 && norm(p) <= 1.05));
        // empty disk around the origin
        assert!(c.points().iter().all(|p| norm(p) >= 0.95 - 1e-12));
    }

    #[test]
    fn determinism() {
        let a: PointCloud<f64> = generate(&EnsembleSpec::single_circle(50, 3)).unwrap();
        let b: PointCloud<f64> = generate(&EnsembleSpec::single_circle(50, 3)).unwrap();
        let c: PointCloud<f64> = generate(&EnsembleSpec::single_circle(50, 4)).unwrap();
        let bits = |c: &PointCloud<f64>| {
            c.points()
                .iter()
                .flat_map(|p| [p.x.to_bits(), p.y.to_bits()])
                .collect::<Vec<_>>()
        };
        assert_eq!(bits(&a), bits(&b));
        assert_ne!(bits(&a), bits(&c));
        let d1: PointCloud<f64> = generate(&EnsembleSpec::dual_circles(80, 3)).unwrap();
        let d2: PointCloud<f64> = generate(&EnsembleSpec::dual_circles(80, 3)).unwrap();
        assert_eq!(bits(&d1), bits(&d2));
    }

    #[test]
    fn dual_circles_respect_rejection_rule() {
        let spec = EnsembleSpec::dual_circles(400, 5);
        let c: PointCloud<f64> = gen_dual_circles(&spec).unwrap();
        assert_eq!(c.len(), 400);
        let [l, r] = spec.centers();
        for p in c.points() {
            let dl = (p.x - l.0).hypot(p.y - l.1);
            let dr = (p.x - r.0).hypot(p.y - r.1);
            assert!(dl >= 0.95 && dr >= 0.95);
            assert!(dl <= 1.05 || dr <= 1.05);
        }
    }

    #[test]
    fn coincident_dual_circles_degenerate_to_one() {
        let spec = EnsembleSpec {
            offset_factor: 0.0,
            jitter: 0.0,
            ..EnsembleSpec::dual_circles(60, 6)
        };
        let c: PointCloud<f64> = gen_dual_circles(&spec).unwrap();
        assert!(c.points().iter().all(|p| (norm(p) - 1.0).abs() <= 1e-12));
    }

    #[test]
    fn invalid_specs() {
        let base = EnsembleSpec::default();
        for spec in [
            EnsembleSpec { n: 2, ..base },
            EnsembleSpec {
                radius: 0.0,
                ..base
            },
            EnsembleSpec {
                jitter: 1.0,
                ..base
            },
            EnsembleSpec {
                jitter: -0.1,
                ..base
            },
            EnsembleSpec {
                offset_factor: 2.0,
                ..base
            },
        ] {
            assert!(matches!(generate::<f64>(&spec), Err(Error::InvalidSpec(_))));
        }
        assert!(gen_dual_circles::<f64>(&base).is_err());
        assert_eq!(
            "dual-circles".parse::<EnsembleKind>().unwrap(),
            EnsembleKind::DualCircles
        );
    }

    #[test]
    fn single_precision_clouds() {
        let c: PointCloud<f32> = generate(&EnsembleSpec::single_circle(20, 1)).unwrap();
        assert_eq!(c.len(), 20);
    }
}
