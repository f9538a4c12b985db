//! Void detection and shape reconstruction for planar point clouds.
//!
//! The pipeline has two stages. The locator scores every segment joining two
//! convex-hull vertices by its mean distance to the interior points and picks
//! the deepest-clearance point on the best one. The envelope engine then
//! sweeps expanding circles along segments, growing a set of boundary points
//! order by order until no new point is found, and assembles the void
//! polygon from it.
//!
//! All geometry is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix `f64`, which is what the CLI and report formats use.

pub mod datagen;
pub mod engine;
pub mod error;
pub mod geom;
pub mod idset;
pub mod io;
pub mod locator;
pub mod pipeline;
pub mod rng;
pub mod scalar;
pub mod svg;
pub mod triangulation;

pub use error::{Error, Result};
pub use idset::IdSet;
pub use scalar::Scalar;

pub type Point = geom::Point2<f64>;
pub type Cloud = geom::PointCloud<f64>;
pub type Segment = geom::Segment<f64>;
pub type Polygon = geom::Polygon<f64>;
pub type Triangulation<'a> = triangulation::Triangulation<'a, f64>;
pub type VoronoiDiagram = triangulation::VoronoiDiagram<f64>;
pub type ClearanceField<'a> = triangulation::ClearanceField<'a, f64>;
pub type ScoredSegment = locator::ScoredSegment<f64>;
pub type DvPoint = locator::DvPoint<f64>;
pub type SweepConfig = engine::SweepConfig<f64>;
pub type VoidResult = engine::VoidResult<f64>;
