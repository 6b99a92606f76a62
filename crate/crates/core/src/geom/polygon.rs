use serde::{Deserialize, Serialize};

use super::{GeomError, PlanarIsometry, Vec2};
use crate::tolerance::COLLINEAR;

/// Shoelace signed area; positive iff the vertices run counter-clockwise.
pub fn signed_area(vertices: &[Vec2]) -> Result<f64, GeomError> {
    if vertices.len() < 3 {
        return Err(GeomError::InvalidGeometry(format!(
            "need at least 3 vertices, got {}",
            vertices.len()
        )));
    }
    if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
        return Err(GeomError::InvalidGeometry(format!(
            "non-finite vertex ({}, {})",
            p.x, p.y
        )));
    }
    Ok(shoelace(vertices))
}

fn shoelace(vertices: &[Vec2]) -> f64 {
    let n = vertices.len();
    let twice: f64 = (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum();
    0.5 * twice
}

/// A convex polygon with counter-clockwise vertices.
///
/// Consecutive vertices may be collinear within the collinearity tolerance;
/// reflex turns and repeated vertices are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon2 {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon2 {
    pub fn new(vertices: Vec<Vec2>) -> Result<Self, GeomError> {
        Self::with_tolerance(vertices, COLLINEAR)
    }

    pub fn with_tolerance(vertices: Vec<Vec2>, collinear: f64) -> Result<Self, GeomError> {
        let area = signed_area(&vertices)?;
        if area <= 0.0 {
            return Err(GeomError::InvalidGeometry(format!(
                "polygon is not counter-clockwise (signed area {area})"
            )));
        }
        let diag = bbox_diagonal(&vertices);
        let eps = collinear * diag;
        let n = vertices.len();
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            if cur.distance(next) <= eps {
                return Err(GeomError::InvalidGeometry(format!(
                    "repeated vertex at index {i}"
                )));
            }
            // signed distance of `next` from the line through prev→cur
            let turn = (cur - prev).cross(next - cur) / (cur - prev).norm();
            if turn < -eps {
                return Err(GeomError::InvalidGeometry(format!(
                    "reflex turn at vertex {i}"
                )));
            }
        }
        Ok(Self { vertices })
    }

    /// Skips validation; the caller guarantees a convex CCW vertex list.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Vec2>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn signed_area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Area centroid.
    pub fn centroid(&self) -> Vec2 {
        let n = self.vertices.len();
        let origin = self.vertices[0];
        let mut acc = Vec2::ZERO;
        let mut twice_area = 0.0;
        for i in 0..n {
            let p = self.vertices[i] - origin;
            let q = self.vertices[(i + 1) % n] - origin;
            let c = p.cross(q);
            twice_area += c;
            acc += (p + q) * c;
        }
        origin + acc * (1.0 / (3.0 * twice_area))
    }

    /// `(min, max)` corners of the axis-aligned bounding box.
    pub fn bounds(&self) -> (Vec2, Vec2) {
        bounds(&self.vertices)
    }

    pub fn bbox_diagonal(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max(v[i].distance(v[j]));
            }
        }
        d
    }

    /// Inside or on the boundary, with edges widened by `tol` (absolute).
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b - a).cross(p - a) / (b - a).norm() >= -tol
        })
    }

    /// Image under an isometry; reflections reverse the vertex order so the
    /// result stays counter-clockwise.
    pub fn transformed(&self, iso: &PlanarIsometry) -> Self {
        let mut vertices: Vec<Vec2> = self.vertices.iter().map(|&p| iso.apply(p)).collect();
        if iso.is_reflection() {
            vertices.reverse();
        }
        Self { vertices }
    }
}

pub(crate) fn bounds(points: &[Vec2]) -> (Vec2, Vec2) {
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

pub(crate) fn bbox_diagonal(points: &[Vec2]) -> f64 {
    let (lo, hi) = bounds(points);
    (hi - lo).norm()
}
