//! Prismatoid band unfolding.
//!
//! Builds the hexagonal-top prismatoid, develops its side band into the plane
//! for every lateral-edge cut, folds the top face out across every rim edge
//! and measures the overlap between the placed top and the developed band.
//!
//! Layout:
//! - [`geom`]: planar and spatial primitives, convex clipping, Monte-Carlo area oracle.
//! - [`model`]: the parametrized prismatoid, vertex curvatures, validation, curvature solver.
//! - [`unfold`]: band development, top placement and overlap measurement.
//! - [`verify`]: the exhaustive cut × attachment matrix, symmetry reduction and sweeps.
//! - [`render`]: SVG, OBJ and JSON output.

pub mod geom;
pub mod model;
pub mod render;
pub mod tolerance;
pub mod unfold;
pub mod verify;

pub use geom::{
    convex_clip, mc_overlap_area, mc_overlap_estimate, rigid_map_from_edge, signed_area,
    ConvexPolygon2, GeomError, McEstimate, Orientation, PlanarIsometry, Segment, Side, Vec2, Vec3,
};
pub use model::{
    build_prismatoid, build_top_hexagon, curvature_pair, solve_params, validate, vertex_curvature,
    CurvaturePair, ModelError, Preset, Prismatoid, PrismatoidParams, SolvedParams,
    ValidationReport,
};
pub use tolerance::Tolerances;
pub use unfold::{
    develop_band, overlap, place_top, Development, OverlapReport, TopPlacement, Verdict,
};
pub use verify::{
    reduce_by_symmetry, sweep, verdict_matrix, ClassSummary, GridAxis, SweepResult, SweepSpec,
    SymmetryClass, VerdictMatrix, VerifyError,
};
