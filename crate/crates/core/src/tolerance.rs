//! Tolerance constants shared by every geometric predicate.

use serde::{Deserialize, Serialize};

/// Environment variable that scales every tolerance uniformly.
pub const TOLERANCE_SCALE_ENV: &str = "BANDFORGE_TOLERANCE_SCALE";

/// Collinearity tolerance, relative to the bounding-box diagonal.
pub const COLLINEAR: f64 = 1e-12;
/// Relative length tolerance for edge matching.
pub const LENGTH: f64 = 1e-9;
/// Overlap significance, relative to the area of the top face.
pub const AREA: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub collinear: f64,
    pub length: f64,
    pub area: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            collinear: COLLINEAR,
            length: LENGTH,
            area: AREA,
        }
    }
}

impl Tolerances {
    pub fn scaled(factor: f64) -> Self {
        let base = Self::default();
        Self {
            collinear: base.collinear * factor,
            length: base.length * factor,
            area: base.area * factor,
        }
    }

    /// Reads [`TOLERANCE_SCALE_ENV`]; unset, unparsable or non-positive values
    /// fall back to a scale of 1.
    pub fn from_env() -> Self {
        let factor = std::env::var(TOLERANCE_SCALE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .filter(|f| f.is_finite() && *f > 0.0)
            .unwrap_or(1.0);
        Self::scaled(factor)
    }

    /// Overlap threshold τ for a top face of the given area.
    pub fn overlap_threshold(&self, top_area: f64) -> f64 {
        self.area * top_area
    }
}
