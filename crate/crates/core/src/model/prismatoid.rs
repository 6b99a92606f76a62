use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::hexagon::{build_top_hexagon, hexagon_vertices};
use super::ModelError;
use crate::geom::{angle_between, ConvexPolygon2, Vec2, Vec3};

/// Shape parameters. The construction is scale-free; `s` is a normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrismatoidParams {
    /// Side length of the equilateral triangle inscribed in the top face.
    pub s: f64,
    /// Outward offset of the even vertices from the triangle sides.
    pub h: f64,
    /// Horizontal offset of `b_0` below `a_0` (in `-y`).
    pub y: f64,
    /// Distance between the planes of the top and bottom faces.
    pub z: f64,
}

impl Default for PrismatoidParams {
    fn default() -> Self {
        Self {
            s: 1.0,
            h: 0.05,
            y: 0.5,
            z: 0.1,
        }
    }
}

impl PrismatoidParams {
    pub const fn new(s: f64, h: f64, y: f64, z: f64) -> Self {
        Self { s, h, y, z }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(
            self.s * factor,
            self.h * factor,
            self.y * factor,
            self.z * factor,
        )
    }

    /// Bulge that turns the top face into a regular hexagon.
    pub fn regular_bulge(s: f64) -> f64 {
        s / (2.0 * 3f64.sqrt())
    }

    /// Finite values, `s > 0`, `h, y, z ≥ 0`.
    pub fn check_finite(&self) -> Result<(), ModelError> {
        let fields = [("s", self.s), ("h", self.h), ("y", self.y), ("z", self.z)];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(ModelError::InvalidParams(format!("{name} is not finite")));
            }
            if v < 0.0 {
                return Err(ModelError::InvalidParams(format!(
                    "{name} = {v} is negative"
                )));
            }
        }
        if self.s <= 0.0 {
            return Err(ModelError::InvalidParams("s must be positive".into()));
        }
        Ok(())
    }
}

/// Index of one of the twelve vertices: `0..6` are `a_i`, `6..12` are `b_i`.
pub type VertexId = usize;

/// Top face `A` in the `z = 0` plane and bottom face `B` in `z = -z`.
///
/// `B` is the image of `A` under the homothety centred on the triangle
/// centroid that carries `a_0 = (0, -h)` to `b_0 = (0, -(h + y))`; this keeps
/// the three-fold and mirror symmetry of `A` and makes every side face a
/// planar trapezoid `(a_i, b_i, b_{i+1}, a_{i+1})` with `a_i a_{i+1} ∥ b_i b_{i+1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prismatoid {
    pub params: PrismatoidParams,
    pub a: [Vec3; 6],
    pub b: [Vec3; 6],
}

/// Strict construction: requires a non-degenerate hexagon and `z > 0`.
pub fn build_prismatoid(params: PrismatoidParams) -> Result<Prismatoid, ModelError> {
    params.check_finite()?;
    if params.z <= 0.0 {
        return Err(ModelError::InvalidParams(format!(
            "z must be positive, got {}",
            params.z
        )));
    }
    build_top_hexagon(params.s, params.h)?;
    Ok(Prismatoid::construct(params))
}

impl Prismatoid {
    /// Builds the vertices without rejecting degenerate shapes (flat `z = 0`,
    /// collinear `h = 0`). Callers should pass the result to `validate`.
    pub fn construct(params: PrismatoidParams) -> Self {
        let PrismatoidParams { s, h, y, z } = params;
        let top = hexagon_vertices(s, h);
        let inradius = s * 3f64.sqrt() / 6.0;
        let center = Vec2::new(0.0, inradius);
        let lambda = (h + y + inradius) / (h + inradius);
        let a = top.map(|p| p.extend(0.0));
        let mut b = top.map(|p| (center + (p - center) * lambda).extend(-z));
        // anchor exactly
        b[0] = Vec3::new(0.0, -(h + y), -z);
        Self { params, a, b }
    }

    pub fn scale_factor(&self) -> f64 {
        self.params.s
    }

    pub fn vertex(&self, id: VertexId) -> Vec3 {
        if id < 6 {
            self.a[id]
        } else {
            self.b[id - 6]
        }
    }

    /// Top face as an intrinsic planar hexagon.
    pub fn top_polygon(&self) -> Result<ConvexPolygon2, ModelError> {
        build_top_hexagon(self.params.s, self.params.h)
    }

    pub fn top_vertices_2d(&self) -> [Vec2; 6] {
        self.a.map(|p| p.xy())
    }

    /// Side face `i` as `[a_i, b_i, b_{i+1}, a_{i+1}]` (counter-clockwise seen
    /// from outside).
    pub fn side_face(&self, i: usize) -> [Vec3; 4] {
        let j = (i + 1) % 6;
        [self.a[i], self.b[i], self.b[j], self.a[j]]
    }

    /// All eight faces as vertex-id cycles, counter-clockwise from outside:
    /// top, bottom, then the six sides.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        let mut faces = Vec::with_capacity(8);
        faces.push((0..6).collect());
        faces.push((6..12).rev().collect());
        for i in 0..6 {
            let j = (i + 1) % 6;
            faces.push(vec![i, 6 + i, 6 + j, j]);
        }
        faces
    }

    /// Face angles at `v`, one per incident face.
    pub fn face_angles_at(&self, v: VertexId) -> Vec<f64> {
        let p = self.vertex(v);
        self.faces()
            .iter()
            .filter_map(|f| {
                let k = f.iter().position(|&u| u == v)?;
                let prev = self.vertex(f[(k + f.len() - 1) % f.len()]);
                let next = self.vertex(f[(k + 1) % f.len()]);
                Some(angle_between(prev - p, next - p))
            })
            .collect()
    }

    /// `2π` minus the sum of incident face angles.
    pub fn angle_deficit(&self, v: VertexId) -> f64 {
        2.0 * PI - self.face_angles_at(v).iter().sum::<f64>()
    }

    /// Newell normal of a face cycle, unnormalized (length is twice the area).
    pub fn face_normal(&self, face: &[VertexId]) -> Vec3 {
        let mut n = Vec3::default();
        for k in 0..face.len() {
            let p = self.vertex(face[k]);
            let q = self.vertex(face[(k + 1) % face.len()]);
            n.x += (p.y - q.y) * (p.z + q.z);
            n.y += (p.z - q.z) * (p.x + q.x);
            n.z += (p.x - q.x) * (p.y + q.y);
        }
        n
    }

    pub fn centroid(&self) -> Vec3 {
        let mut c = Vec3::default();
        for id in 0..12 {
            c += self.vertex(id);
        }
        c * (1.0 / 12.0)
    }
}
