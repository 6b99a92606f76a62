//! Grid sweep over `(h, z)` at fixed `(s, y)`. Cells are independent and
//! evaluated in parallel; results are stored in grid order.

use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{verdict_matrix, VerifyError};
use crate::model::{validate, CurvaturePair, Prismatoid, PrismatoidParams, DEGENERATE_HEIGHT};
use crate::tolerance::Tolerances;
use crate::unfold::Verdict;

/// `steps` evenly spaced values from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn new(min: f64, max: f64, steps: usize) -> Self {
        Self { min, max, steps }
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.steps <= 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.steps).map(|i| self.value(i)).collect()
    }

    /// Index of the grid value closest to `v`.
    pub fn nearest(&self, v: f64) -> usize {
        (0..self.steps)
            .min_by(|&a, &b| {
                (self.value(a) - v)
                    .abs()
                    .total_cmp(&(self.value(b) - v).abs())
            })
            .unwrap_or(0)
    }
}

impl FromStr for GridAxis {
    type Err = VerifyError;

    /// `min:max:steps`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VerifyError::Grid(format!("expected min:max:steps, got `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let steps: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if steps == 0 || !min.is_finite() || !max.is_finite() || max < min {
            return Err(bad());
        }
        Ok(Self { min, max, steps })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub s: f64,
    pub y: f64,
    pub h: GridAxis,
    pub z: GridAxis,
}

impl SweepSpec {
    /// Parses `hmin:hmax:steps,zmin:zmax:steps`.
    pub fn parse_grid(grid: &str, s: f64, y: f64) -> Result<Self, VerifyError> {
        let (h, z) = grid
            .split_once(',')
            .ok_or_else(|| VerifyError::Grid(format!("expected two axes, got `{grid}`")))?;
        Ok(Self {
            s,
            y,
            h: h.parse()?,
            z: z.parse()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CellStatus {
    Evaluated {
        curvatures: CurvaturePair,
        odd_angles_acute: bool,
        all_overlap: bool,
        overlap: usize,
        marginal: usize,
        clear: usize,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    pub ih: usize,
    pub iz: usize,
    pub params: PrismatoidParams,
    #[serde(flatten)]
    pub status: CellStatus,
}

impl SweepCell {
    pub fn all_overlap(&self) -> bool {
        matches!(
            self.status,
            CellStatus::Evaluated {
                all_overlap: true,
                ..
            }
        )
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(&self.status, CellStatus::Skipped { reason } if reason.starts_with("degenerate"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub spec: SweepSpec,
    /// Row-major in `h`: index `ih * z.steps + iz`.
    pub cells: Vec<SweepCell>,
}

impl SweepResult {
    pub fn cell(&self, ih: usize, iz: usize) -> &SweepCell {
        &self.cells[ih * self.spec.z.steps + iz]
    }

    /// Grid cell closest to the given parameters.
    pub fn nearest(&self, h: f64, z: f64) -> &SweepCell {
        self.cell(self.spec.h.nearest(h), self.spec.z.nearest(z))
    }

    /// Cells in which every cut × attachment placement overlaps.
    pub fn region(&self) -> Vec<(usize, usize)> {
        self.cells
            .iter()
            .filter(|c| c.all_overlap())
            .map(|c| (c.ih, c.iz))
            .collect()
    }
}

fn evaluate(params: PrismatoidParams, tol: &Tolerances) -> CellStatus {
    if params.check_finite().is_err() {
        return CellStatus::Skipped {
            reason: "invalid: non-finite or negative parameter".into(),
        };
    }
    if params.z < DEGENERATE_HEIGHT * params.s {
        return CellStatus::Skipped {
            reason: format!("degenerate: z = {} is flat", params.z),
        };
    }
    let p = Prismatoid::construct(params);
    let report = validate(&p);
    if !report.valid() {
        return CellStatus::Skipped {
            reason: format!("invalid: {}", report.issues.join("; ")),
        };
    }
    match verdict_matrix(&p, tol) {
        Ok(m) => CellStatus::Evaluated {
            curvatures: m.curvatures,
            odd_angles_acute: report.odd_angles_acute,
            all_overlap: m.counterexample(),
            overlap: m.count(Verdict::Overlap),
            marginal: m.count(Verdict::Marginal),
            clear: m.count(Verdict::Clear),
        },
        Err(e) => CellStatus::Skipped {
            reason: format!("error: {e}"),
        },
    }
}

pub fn sweep(spec: &SweepSpec, tol: &Tolerances) -> SweepResult {
    let indices: Vec<(usize, usize)> = (0..spec.h.steps)
        .flat_map(|ih| (0..spec.z.steps).map(move |iz| (ih, iz)))
        .collect();
    let cells = indices
        .into_par_iter()
        .map(|(ih, iz)| {
            let params = PrismatoidParams::new(spec.s, spec.h.value(ih), spec.y, spec.z.value(iz));
            SweepCell {
                ih,
                iz,
                params,
                status: evaluate(params, tol),
            }
        })
        .collect();
    SweepResult { spec: *spec, cells }
}
