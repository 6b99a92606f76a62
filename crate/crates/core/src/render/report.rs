//! JSON reports. Field order follows struct declaration order, so output is
//! stable; floats use the shortest round-trip representation.

use serde::{Deserialize, Serialize};

use crate::model::{CurvaturePair, PrismatoidParams, ValidationReport};
use crate::unfold::Verdict;
use crate::verify::{ClassSummary, SweepCell, SweepResult, SweepSpec, VerdictMatrix};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub delta_rad: f64,
    pub epsilon_rad: f64,
    pub delta_deg: f64,
    pub epsilon_deg: f64,
}

impl From<CurvaturePair> for CurvatureReport {
    fn from(c: CurvaturePair) -> Self {
        Self {
            delta_rad: c.delta,
            epsilon_rad: c.epsilon,
            delta_deg: c.delta_deg(),
            epsilon_deg: c.epsilon_deg(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixCellReport {
    pub cut: usize,
    pub attach: usize,
    pub verdict: Verdict,
    pub area: f64,
    pub class: String,
    pub faces: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class: String,
    pub cells: Vec<[usize; 2]>,
    pub verdict: Verdict,
    pub min_area: f64,
    pub max_area: f64,
}

impl From<&ClassSummary> for ClassReport {
    fn from(s: &ClassSummary) -> Self {
        Self {
            class: s.label.clone(),
            cells: s.cells.iter().map(|&(k, j)| [k, j]).collect(),
            verdict: s.verdict,
            min_area: s.min_area,
            max_area: s.max_area,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub params: PrismatoidParams,
    pub curvatures: CurvatureReport,
    pub threshold: f64,
    pub matrix: Vec<MatrixCellReport>,
    pub classes: Vec<ClassReport>,
    pub counterexample: bool,
}

impl VerifyReport {
    pub fn new(m: &VerdictMatrix, classes: &[ClassSummary]) -> Self {
        Self {
            params: m.params,
            curvatures: m.curvatures.into(),
            threshold: m.threshold,
            matrix: m
                .cells
                .iter()
                .map(|c| MatrixCellReport {
                    cut: c.cut,
                    attach: c.attach,
                    verdict: c.verdict,
                    area: c.area,
                    class: c.class.label(),
                    faces: c.faces.clone(),
                })
                .collect(),
            classes: classes.iter().map(ClassReport::from).collect(),
            counterexample: m.counterexample(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub grid: SweepSpec,
    pub cells: Vec<SweepCell>,
    pub region: Vec<[usize; 2]>,
    pub region_size: usize,
    pub skipped: usize,
}

impl From<&SweepResult> for SweepReport {
    fn from(r: &SweepResult) -> Self {
        let region: Vec<[usize; 2]> = r.region().into_iter().map(|(a, b)| [a, b]).collect();
        Self {
            grid: r.spec,
            cells: r.cells.clone(),
            region_size: region.len(),
            region,
            skipped: r
                .cells
                .iter()
                .filter(|c| matches!(c.status, crate::verify::CellStatus::Skipped { .. }))
                .count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub params: PrismatoidParams,
    pub valid: bool,
    pub report: ValidationReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub params: PrismatoidParams,
    pub curvatures: CurvatureReport,
    pub ratio: f64,
    /// `None` when `y = 0`.
    pub z_over_y: Option<f64>,
}

impl SolveReport {
    pub fn new(params: PrismatoidParams, c: CurvaturePair) -> Self {
        Self {
            params,
            curvatures: c.into(),
            ratio: c.ratio(),
            z_over_y: (params.y > 0.0).then(|| params.z / params.y),
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn report_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_prismatoid, PrismatoidParams};
    use crate::tolerance::Tolerances;
    use crate::verify::{reduce_by_symmetry, verdict_matrix};

    #[test]
    fn verify_report_round_trips() {
        let p = build_prismatoid(PrismatoidParams::new(1.0, 0.05, 0.5, 0.1)).unwrap();
        let m = verdict_matrix(&p, &Tolerances::default()).unwrap();
        let classes = reduce_by_symmetry(&m).unwrap();
        let report = VerifyReport::new(&m, &classes);
        let text = report_json(&report);
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(report_json(&back), text);
        assert_eq!(report.matrix.len(), 36);
        assert_eq!(report.classes.len(), 6);
        assert!(report.counterexample);
        let keys: Vec<&str> = [
            "\"params\"",
            "\"curvatures\"",
            "\"matrix\"",
            "\"classes\"",
            "\"counterexample\"",
        ]
        .to_vec();
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
}
