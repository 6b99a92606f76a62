use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use super::{curvature_pair, interior_angles, CurvaturePair, Prismatoid};
use crate::geom::{ConvexPolygon2, Vec3};
use crate::tolerance::COLLINEAR;

/// Heights below `DEGENERATE_HEIGHT · s` are treated as the flat limit.
pub const DEGENERATE_HEIGHT: f64 = 1e-6;
/// Planarity and hull-convexity tolerance, relative to `s`.
const FACE_TOLERANCE: f64 = 1e-10;

/// Structural checks on a prismatoid. `valid()` gates the unfolding
/// pipeline; the angle and nesting checks are informational.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub degenerate: bool,
    pub convex: bool,
    pub planar_faces: bool,
    pub parallel_rims: bool,
    pub odd_angles_acute: bool,
    pub even_angles_obtuse: bool,
    pub nested_projection: bool,
    pub interior_angles_deg: [f64; 6],
    pub curvatures: Option<CurvaturePair>,
    pub issues: Vec<String>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        !self.degenerate && self.convex && self.planar_faces && self.parallel_rims
    }
}

pub fn validate(p: &Prismatoid) -> ValidationReport {
    let s = p.params.s;
    let mut issues = Vec::new();

    let mut degenerate = false;
    if let Err(e) = p.params.check_finite() {
        issues.push(e.to_string());
        degenerate = true;
    }
    if p.params.z < DEGENERATE_HEIGHT * s {
        issues.push(format!(
            "flat: z = {} is below {:e}·s",
            p.params.z, DEGENERATE_HEIGHT
        ));
        degenerate = true;
    }
    if p.params.h <= COLLINEAR * s {
        issues.push("top hexagon has collinear vertices (h = 0)".into());
        degenerate = true;
    }

    let tol = FACE_TOLERANCE * s;
    let faces = p.faces();
    let mut convex = true;
    let mut planar_faces = true;
    for (fi, f) in faces.iter().enumerate() {
        let n = p.face_normal(f);
        if n.norm() <= 0.0 || !n.is_finite() {
            issues.push(format!("face {fi} has zero area"));
            planar_faces = false;
            convex = false;
            continue;
        }
        let n = n.normalized();
        let mut centre = Vec3::default();
        for &v in f {
            centre += p.vertex(v);
        }
        let centre = centre * (1.0 / f.len() as f64);
        let off_plane = f
            .iter()
            .map(|&v| (p.vertex(v) - centre).dot(n).abs())
            .fold(0.0, f64::max);
        if off_plane > tol {
            issues.push(format!("face {fi} is not planar ({off_plane:e})"));
            planar_faces = false;
        }
        let outside = (0..12)
            .map(|v| (p.vertex(v) - centre).dot(n))
            .fold(f64::NEG_INFINITY, f64::max);
        if outside > tol {
            issues.push(format!(
                "vertex beyond the plane of face {fi} ({outside:e})"
            ));
            convex = false;
        }
    }

    let mut parallel_rims = true;
    for i in 0..6 {
        let f = p.side_face(i);
        let (top, bottom) = (f[3] - f[0], f[2] - f[1]);
        let sin = top.cross(bottom).norm() / (top.norm() * bottom.norm());
        if !(sin <= tol && top.dot(bottom) > 0.0) {
            issues.push(format!("side face {i} rims are not parallel"));
            parallel_rims = false;
        }
    }

    let top2d = p.top_vertices_2d();
    let angles = interior_angles(&top2d);
    let odd_angles_acute = [1, 3, 5].iter().all(|&i| angles[i] < FRAC_PI_2);
    if !odd_angles_acute {
        issues.push(format!(
            "odd vertices are not acute ({:.6}°)",
            angles[1].to_degrees()
        ));
    }
    let even_angles_obtuse = [0, 2, 4]
        .iter()
        .all(|&i| angles[i] > FRAC_PI_2 && angles[i] < PI);

    let bottom2d: Vec<_> = p.b.iter().map(|v| v.xy()).collect();
    let nested_projection = match ConvexPolygon2::new(bottom2d) {
        Ok(outline) => {
            let probe = -COLLINEAR * outline.bbox_diagonal();
            top2d.iter().all(|&v| outline.contains(v, probe))
        }
        Err(_) => false,
    };

    let curvatures = if degenerate {
        None
    } else {
        match curvature_pair(p) {
            Ok(c) => Some(c),
            Err(e) => {
                issues.push(e.to_string());
                None
            }
        }
    };

    ValidationReport {
        degenerate,
        convex,
        planar_faces,
        parallel_rims,
        odd_angles_acute,
        even_angles_obtuse,
        nested_projection,
        interior_angles_deg: angles.map(f64::to_degrees),
        curvatures,
        issues,
    }
}
