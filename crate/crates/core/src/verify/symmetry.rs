//! The top hexagon's symmetry group (rotations by two vertex steps and the
//! mirror through the `a_0 a_3` axis) acting on (cut, attachment) pairs.
//!
//! With `o = (attach - cut) mod 6`, rotations fix `o` and the mirror sends
//! `o ↦ 5 - o`, so a class is determined by the cut parity and `min(o, 5 - o)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{VerdictMatrix, VerifyError};
use crate::unfold::Verdict;

/// Relative agreement required between areas in one class.
pub const AREA_AGREEMENT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutType {
    /// Cut through a triangle corner `a_1`, `a_3`, `a_5`.
    Apex,
    /// Cut through a bulged side vertex `a_0`, `a_2`, `a_4`.
    Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttachmentClass {
    /// Attachment edge incident to the cut vertex.
    Incident,
    /// One edge further along the rim.
    Next,
    /// The edges farthest from the cut.
    Far,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetryClass {
    pub cut: CutType,
    pub attachment: AttachmentClass,
}

impl SymmetryClass {
    pub fn of(cut: usize, attach: usize) -> Self {
        let o = (attach + 6 - cut % 6) % 6;
        let attachment = match o.min(5 - o) {
            0 => AttachmentClass::Incident,
            1 => AttachmentClass::Next,
            _ => AttachmentClass::Far,
        };
        let cut = if cut % 2 == 1 {
            CutType::Apex
        } else {
            CutType::Side
        };
        Self { cut, attachment }
    }

    /// `0..6`, apex classes first.
    pub fn id(self) -> usize {
        let c = match self.cut {
            CutType::Apex => 0,
            CutType::Side => 3,
        };
        c + self.attachment as usize
    }

    pub fn label(self) -> String {
        self.to_string()
    }

    /// The six (cut, attachment) pairs in the orbit of `(cut, attach)`.
    pub fn orbit(cut: usize, attach: usize) -> [(usize, usize); 6] {
        let rotate = |(k, j): (usize, usize), r: usize| ((k + 2 * r) % 6, (j + 2 * r) % 6);
        let mirror = |(k, j): (usize, usize)| ((6 - k) % 6, 5 - j);
        let base = (cut % 6, attach % 6);
        [
            rotate(base, 0),
            rotate(base, 1),
            rotate(base, 2),
            mirror(rotate(base, 0)),
            mirror(rotate(base, 1)),
            mirror(rotate(base, 2)),
        ]
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cut = match self.cut {
            CutType::Apex => "apex",
            CutType::Side => "side",
        };
        let att = match self.attachment {
            AttachmentClass::Incident => "incident",
            AttachmentClass::Next => "next",
            AttachmentClass::Far => "far",
        };
        write!(f, "{cut}-cut/{att}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub class: SymmetryClass,
    pub label: String,
    pub cells: Vec<(usize, usize)>,
    pub verdict: Verdict,
    pub min_area: f64,
    pub max_area: f64,
}

/// Groups the 36 cells into their six classes and checks that every class
/// agrees on verdict and (to [`AREA_AGREEMENT`], with a `0.1 τ` floor for
/// empty overlaps) on area.
pub fn reduce_by_symmetry(m: &VerdictMatrix) -> Result<Vec<ClassSummary>, VerifyError> {
    let mut summaries: Vec<ClassSummary> = Vec::with_capacity(6);
    for cell in &m.cells {
        match summaries.iter_mut().find(|s| s.class == cell.class) {
            Some(s) => {
                s.cells.push((cell.cut, cell.attach));
                s.min_area = s.min_area.min(cell.area);
                s.max_area = s.max_area.max(cell.area);
                if s.verdict != cell.verdict {
                    return Err(VerifyError::SymmetryViolation {
                        class: s.label.clone(),
                        detail: format!(
                            "cell ({}, {}) is {} but the class is {}",
                            cell.cut, cell.attach, cell.verdict, s.verdict
                        ),
                    });
                }
            }
            None => summaries.push(ClassSummary {
                class: cell.class,
                label: cell.class.label(),
                cells: vec![(cell.cut, cell.attach)],
                verdict: cell.verdict,
                min_area: cell.area,
                max_area: cell.area,
            }),
        }
    }
    for s in &summaries {
        let spread = s.max_area - s.min_area;
        if spread > AREA_AGREEMENT * s.max_area + 0.1 * m.threshold {
            return Err(VerifyError::SymmetryViolation {
                class: s.label.clone(),
                detail: format!("areas range over [{:e}, {:e}]", s.min_area, s.max_area),
            });
        }
    }
    summaries.sort_by_key(|s| s.class.id());
    Ok(summaries)
}
