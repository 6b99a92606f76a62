//! The parametrized prismatoid: construction, curvatures, validation and the
//! curvature-targeting solver.

mod curvature;
mod hexagon;
mod presets;
mod prismatoid;
mod solve;
mod validate;

pub use curvature::{curvature_pair, vertex_curvature, CurvaturePair, SYMMETRY_TOLERANCE};
pub use hexagon::{build_top_hexagon, hexagon_vertices, interior_angles};
pub use presets::Preset;
pub use prismatoid::{build_prismatoid, Prismatoid, PrismatoidParams, VertexId};
pub use solve::{solve_params, SolvedParams};
pub use validate::{validate, ValidationReport, DEGENERATE_HEIGHT};

use thiserror::Error;

use crate::geom::GeomError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate hexagon: bulge h = {h} leaves collinear vertices")]
    DegenerateHexagon { h: f64 },
    #[error("curvature symmetry violated: spread {spread:e} rad across {class} vertices")]
    InternalSymmetryError { class: &'static str, spread: f64 },
    #[error("curvature target ε = {target} rad is infeasible: {reason}")]
    Infeasible { target: f64, reason: String },
    #[error(transparent)]
    Geom(#[from] GeomError),
}
