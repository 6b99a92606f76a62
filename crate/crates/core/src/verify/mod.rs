//! Exhaustive cut × attachment verification, symmetry reduction and
//! parameter sweeps.

mod matrix;
mod sweep;
mod symmetry;

pub use matrix::{verdict_matrix, MatrixCell, VerdictMatrix};
pub use sweep::{sweep, CellStatus, GridAxis, SweepCell, SweepResult, SweepSpec};
pub use symmetry::{
    reduce_by_symmetry, AttachmentClass, ClassSummary, CutType, SymmetryClass, AREA_AGREEMENT,
};

use thiserror::Error;

use crate::model::ModelError;
use crate::unfold::UnfoldError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("prismatoid failed validation: {0}")]
    Invalid(String),
    #[error("cut {cut}{}: {source}", attach.map(|a| format!(", attachment {a}")).unwrap_or_default())]
    Cell {
        cut: usize,
        attach: Option<usize>,
        source: UnfoldError,
    },
    #[error("symmetry violation in class {class}: {detail}")]
    SymmetryViolation { class: String, detail: String },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
