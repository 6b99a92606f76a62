use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{ModelError, Prismatoid};
use crate::geom::angle_between;

/// Largest allowed disagreement between symmetric vertices, in radians.
pub const SYMMETRY_TOLERANCE: f64 = 1e-10;

/// Angle deficits at the even (`delta`) and odd (`epsilon`) top vertices, radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvaturePair {
    pub delta: f64,
    pub epsilon: f64,
}

impl CurvaturePair {
    pub fn ratio(&self) -> f64 {
        self.delta / self.epsilon
    }

    pub fn delta_deg(&self) -> f64 {
        self.delta.to_degrees()
    }

    pub fn epsilon_deg(&self) -> f64 {
        self.epsilon.to_degrees()
    }
}

/// Angle deficit at top vertex `a_i`: `2π` minus the angle of `A` there and
/// the angles of the two side faces meeting at `a_i`.
pub fn vertex_curvature(p: &Prismatoid, i: usize) -> f64 {
    let (prev, next) = ((i + 5) % 6, (i + 1) % 6);
    let at = p.a[i];
    let to_prev = p.a[prev] - at;
    let to_next = p.a[next] - at;
    let down = p.b[i] - at;
    let top = angle_between(to_next, to_prev);
    let side_next = angle_between(down, to_next);
    let side_prev = angle_between(to_prev, down);
    2.0 * PI - (top + side_next + side_prev)
}

pub fn curvature_pair(p: &Prismatoid) -> Result<CurvaturePair, ModelError> {
    let k: [f64; 6] = std::array::from_fn(|i| vertex_curvature(p, i));
    let summarize = |idx: [usize; 3], class: &'static str| {
        let vals = idx.map(|i| k[i]);
        let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if hi - lo > SYMMETRY_TOLERANCE {
            return Err(ModelError::InternalSymmetryError {
                class,
                spread: hi - lo,
            });
        }
        Ok(vals.iter().sum::<f64>() / 3.0)
    };
    Ok(CurvaturePair {
        delta: summarize([0, 2, 4], "even")?,
        epsilon: summarize([1, 3, 5], "odd")?,
    })
}
