use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::UnfoldError;
use crate::geom::{rigid_map_from_edge, ConvexPolygon2, GeomError, Segment, Side, Vec2, Vec3};
use crate::model::Prismatoid;

/// Isometric planar image of the six side faces after cutting the lateral
/// edge `a_k b_k`.
///
/// Faces are unrolled in order `k, k+1, …, k+5` (indices mod 6). Seen from
/// outside the solid every face keeps its counter-clockwise orientation.
/// `rim[t]` and `bottom[t]` are the images of `a_{k+t}` and `b_{k+t}`; the
/// cut vertex appears at both ends (`t = 0` and `t = 6`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Development {
    pub cut: usize,
    /// `quads[t]` is side face `k + t` as `[a, b, b', a']`.
    pub quads: Vec<ConvexPolygon2>,
    pub rim: [Vec2; 7],
    pub bottom: [Vec2; 7],
    /// Intrinsic top face, kept for placements.
    pub top: ConvexPolygon2,
}

impl Development {
    /// Position in unrolled order of side face `face`.
    pub fn position_of(&self, face: usize) -> usize {
        (face + 6 - self.cut) % 6
    }

    /// Side face index of the quad at unrolled position `t`.
    pub fn face_at(&self, t: usize) -> usize {
        (self.cut + t) % 6
    }

    /// Opening at the cut vertex: `2π` minus the top-face angle and the two
    /// quad angles at the end copies of `a_k`, all measured in the plane.
    pub fn cut_gap(&self) -> f64 {
        let k = self.cut;
        let top = self.top.vertices();
        let corner = top[k];
        let interior = planar_angle(top[(k + 1) % 6] - corner, top[(k + 5) % 6] - corner);
        let first = planar_angle(self.rim[1] - self.rim[0], self.bottom[0] - self.rim[0]);
        let last = planar_angle(self.bottom[6] - self.rim[6], self.rim[5] - self.rim[6]);
        2.0 * PI - interior - first - last
    }
}

/// Unsigned angle between two planar vectors.
fn planar_angle(u: Vec2, v: Vec2) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}

/// Coordinates of a planar 3D face in its own orthonormal frame, with the
/// frame chosen so the vertex order stays counter-clockwise.
fn intrinsic(face: &[Vec3; 4]) -> Option<[Vec2; 4]> {
    let mut n = Vec3::default();
    for k in 0..4 {
        let (p, q) = (face[k], face[(k + 1) % 4]);
        n += p.cross(q);
    }
    if n.norm().is_nan() || n.norm() <= 0.0 {
        return None;
    }
    let n = n.normalized();
    let e1 = (face[1] - face[0]).normalized();
    let e2 = n.cross(e1);
    Some(face.map(|p| {
        let d = p - face[0];
        Vec2::new(d.dot(e1), d.dot(e2))
    }))
}

pub fn develop_band(p: &Prismatoid, cut: usize) -> Result<Development, UnfoldError> {
    if cut >= 6 {
        return Err(UnfoldError::Index { index: cut });
    }
    let top = p.top_polygon()?;
    let mut quads = Vec::with_capacity(6);
    let mut rim = [Vec2::ZERO; 7];
    let mut bottom = [Vec2::ZERO; 7];

    let mut hinge: Option<Segment> = None;
    for t in 0..6 {
        let face = (cut + t) % 6;
        let local = intrinsic(&p.side_face(face)).ok_or(UnfoldError::DegenerateFace { face })?;
        let src = Segment::new(local[0], local[1]);
        let dst = match hinge {
            Some(seg) => seg,
            None => Segment::new(Vec2::ZERO, Vec2::new(0.0, src.length())),
        };
        let iso = rigid_map_from_edge(src, dst, Side::Left)?;
        let mut placed = local.map(|q| iso.apply(q));
        // share hinge endpoints exactly with the previous face
        placed[0] = dst.start;
        placed[1] = dst.end;
        let quad = ConvexPolygon2::new(placed.to_vec()).map_err(|e| match e {
            GeomError::InvalidGeometry(_) => UnfoldError::DegenerateFace { face },
            other => UnfoldError::Geom(other),
        })?;
        rim[t] = placed[0];
        bottom[t] = placed[1];
        rim[t + 1] = placed[3];
        bottom[t + 1] = placed[2];
        hinge = Some(Segment::new(placed[3], placed[2]));
        quads.push(quad);
    }

    Ok(Development {
        cut,
        quads,
        rim,
        bottom,
        top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_prismatoid, vertex_curvature, PrismatoidParams};

    fn sample() -> Prismatoid {
        build_prismatoid(PrismatoidParams::new(1.0, 0.08, 0.5, 0.15)).unwrap()
    }

    #[test]
    fn first_face_starts_on_the_y_axis() {
        let p = sample();
        let d = develop_band(&p, 2).unwrap();
        assert_eq!(d.rim[0], Vec2::ZERO);
        assert_eq!(d.bottom[0].x, 0.0);
        assert!((d.bottom[0].y - p.a[2].distance(p.b[2])).abs() < 1e-15);
    }

    #[test]
    fn quads_are_congruent_to_faces() {
        let p = sample();
        for cut in 0..6 {
            let d = develop_band(&p, cut).unwrap();
            for t in 0..6 {
                let face = p.side_face(d.face_at(t));
                let quad = d.quads[t].vertices();
                for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)] {
                    let l3 = face[i].distance(face[j]);
                    let l2 = quad[i].distance(quad[j]);
                    assert!(
                        (l2 - l3).abs() <= 1e-12 * l3,
                        "cut {cut} face {t} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn hinges_coincide() {
        let d = develop_band(&sample(), 4).unwrap();
        for t in 0..5 {
            let (cur, next) = (d.quads[t].vertices(), d.quads[t + 1].vertices());
            assert_eq!(cur[3], next[0]);
            assert_eq!(cur[2], next[1]);
        }
    }

    #[test]
    fn gap_equals_curvature() {
        let p = sample();
        for cut in 0..6 {
            let d = develop_band(&p, cut).unwrap();
            assert!((d.cut_gap() - vertex_curvature(&p, cut)).abs() < 1e-12);
        }
    }

    #[test]
    fn right_prism_develops_to_a_straight_strip() {
        let p = build_prismatoid(PrismatoidParams::new(1.0, 0.2, 0.0, 0.3)).unwrap();
        let d = develop_band(&p, 0).unwrap();
        for q in d.rim {
            assert!(q.y.abs() < 1e-14, "{q:?}");
        }
        for q in d.bottom {
            assert!((q.y - 0.3).abs() < 1e-14, "{q:?}");
        }
    }

    #[test]
    fn bad_cut_index() {
        assert!(matches!(
            develop_band(&sample(), 6),
            Err(UnfoldError::Index { index: 6 })
        ));
    }
}
