//! Geometric primitives: vectors, convex polygons, planar isometries,
//! convex clipping and a Monte-Carlo overlap-area oracle.

mod clip;
mod isometry;
mod montecarlo;
mod polygon;
mod vec;

pub use clip::convex_clip;
pub use isometry::{rigid_map_from_edge, Orientation, PlanarIsometry, Segment, Side};
pub use montecarlo::{mc_overlap_area, mc_overlap_estimate, McEstimate};
pub use polygon::{signed_area, ConvexPolygon2};
pub use vec::{angle_between, Vec2, Vec3};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("segment lengths differ: {src} vs {dst}")]
    LengthMismatch { src: f64, dst: f64 },
}
