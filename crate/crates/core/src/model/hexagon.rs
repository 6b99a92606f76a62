use std::f64::consts::PI;

use super::ModelError;
use crate::geom::{ConvexPolygon2, Vec2};

/// Top hexagon `a_0..a_5`, counter-clockwise.
///
/// The odd vertices are the corners of an equilateral triangle of side `s`
/// whose bottom side is centred on the origin; each even vertex is the
/// midpoint of a triangle side pushed outward by `h` along that side's
/// outward normal, so `a_0 = (0, -h)`.
pub fn hexagon_vertices(s: f64, h: f64) -> [Vec2; 6] {
    let half = 0.5 * s;
    let apex = Vec2::new(0.0, s * 3f64.sqrt() / 2.0);
    let corners = [Vec2::new(half, 0.0), apex, Vec2::new(-half, 0.0)];
    let mut out = [Vec2::ZERO; 6];
    for k in 0..3 {
        // side from a_{2k-1} to a_{2k+1}
        let from = corners[(k + 2) % 3];
        let to = corners[k];
        let d = (to - from).normalized();
        let outward = Vec2::new(d.y, -d.x);
        out[2 * k] = from.lerp(to, 0.5) + outward * h;
        out[2 * k + 1] = to;
    }
    // the bottom midpoint is exactly (0, -h); avoid round-off in x
    out[0] = Vec2::new(0.0, -h);
    out
}

pub fn build_top_hexagon(s: f64, h: f64) -> Result<ConvexPolygon2, ModelError> {
    if !(s.is_finite() && s > 0.0) {
        return Err(ModelError::InvalidParams(format!(
            "s must be positive, got {s}"
        )));
    }
    if !(h.is_finite() && h >= 0.0) {
        return Err(ModelError::InvalidParams(format!(
            "h must be non-negative, got {h}"
        )));
    }
    if h <= crate::tolerance::COLLINEAR * s {
        return Err(ModelError::DegenerateHexagon { h });
    }
    Ok(ConvexPolygon2::new(hexagon_vertices(s, h).to_vec())?)
}

/// Interior angle at each vertex of a counter-clockwise polygon, in `(0, 2π)`.
pub fn interior_angles(v: &[Vec2; 6]) -> [f64; 6] {
    let mut out = [0.0; 6];
    for i in 0..6 {
        let prev = v[(i + 5) % 6] - v[i];
        let next = v[(i + 1) % 6] - v[i];
        // angle swept counter-clockwise from `next` to `prev`
        let a = next.cross(prev).atan2(next.dot(prev));
        out[i] = if a < 0.0 { a + 2.0 * PI } else { a };
    }
    out
}
