use serde::{Deserialize, Serialize};

use super::{SymmetryClass, VerifyError};
use crate::model::{curvature_pair, validate, CurvaturePair, Prismatoid, PrismatoidParams};
use crate::tolerance::Tolerances;
use crate::unfold::{develop_band, overlap, place_top, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixCell {
    pub cut: usize,
    pub attach: usize,
    pub verdict: Verdict,
    pub area: f64,
    pub class: SymmetryClass,
    /// Side faces the placed top overlaps.
    pub faces: Vec<usize>,
}

/// Overlap verdicts for every cut `k` (row) and attachment edge `j` (column).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictMatrix {
    pub params: PrismatoidParams,
    pub curvatures: CurvaturePair,
    pub threshold: f64,
    /// Row-major: index `6 k + j`.
    pub cells: Vec<MatrixCell>,
}

impl VerdictMatrix {
    pub fn cell(&self, cut: usize, attach: usize) -> &MatrixCell {
        &self.cells[6 * cut + attach]
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.cells.iter().filter(|c| c.verdict == verdict).count()
    }

    /// True iff every one of the 36 placements overlaps the band.
    pub fn counterexample(&self) -> bool {
        self.cells.len() == 36 && self.cells.iter().all(|c| c.verdict == Verdict::Overlap)
    }
}

pub fn verdict_matrix(p: &Prismatoid, tol: &Tolerances) -> Result<VerdictMatrix, VerifyError> {
    let report = validate(p);
    if !report.valid() {
        return Err(VerifyError::Invalid(report.issues.join("; ")));
    }
    let curvatures = curvature_pair(p)?;
    let mut cells = Vec::with_capacity(36);
    let mut threshold = 0.0;
    for cut in 0..6 {
        let dev = develop_band(p, cut).map_err(|source| VerifyError::Cell {
            cut,
            attach: None,
            source,
        })?;
        for attach in 0..6 {
            let placement = place_top(&dev, attach).map_err(|source| VerifyError::Cell {
                cut,
                attach: Some(attach),
                source,
            })?;
            let r = overlap(&placement, &dev, tol);
            threshold = r.threshold;
            cells.push(MatrixCell {
                cut,
                attach,
                verdict: r.verdict,
                area: r.total_area,
                class: SymmetryClass::of(cut, attach),
                faces: r.faces.iter().map(|f| f.face).collect(),
            });
        }
    }
    Ok(VerdictMatrix {
        params: p.params,
        curvatures,
        threshold,
        cells,
    })
}
