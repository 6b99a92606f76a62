//! Planar development of the side band, fold-out of the top face and
//! overlap measurement.

mod development;
mod overlap;
mod placement;

pub use development::{develop_band, Development};
pub use overlap::{band_self_overlaps, overlap, FaceOverlap, OverlapReport, Verdict};
pub use placement::{place_top, TopPlacement};

use thiserror::Error;

use crate::geom::GeomError;
use crate::model::ModelError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UnfoldError {
    #[error("index {index} out of range 0..6")]
    Index { index: usize },
    #[error("side face {face} is degenerate")]
    DegenerateFace { face: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
