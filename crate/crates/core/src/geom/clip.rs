//! Sutherland–Hodgman intersection of two convex polygons.

use super::polygon::bbox_diagonal;
use super::{ConvexPolygon2, Vec2};
use crate::tolerance::COLLINEAR;

/// Intersection of two convex polygons, or `None` when it is empty or
/// degenerate (area below `ε_col · diameter²`, e.g. shared-edge contact).
pub fn convex_clip(p: &ConvexPolygon2, q: &ConvexPolygon2) -> Option<ConvexPolygon2> {
    let mut out: Vec<Vec2> = p.vertices().to_vec();
    let clip = q.vertices();
    let n = clip.len();
    for i in 0..n {
        let a = clip[i];
        let b = clip[(i + 1) % n];
        out = clip_halfplane(&out, a, b);
        if out.len() < 3 {
            return None;
        }
    }

    let diam = bbox_diagonal(p.vertices()).max(bbox_diagonal(q.vertices()));
    let eps = COLLINEAR * diam;
    out = dedup_ring(out, eps);
    if out.len() < 3 {
        return None;
    }
    let poly = ConvexPolygon2::from_ccw_unchecked(out);
    if poly.signed_area() < COLLINEAR * diam * diam {
        return None;
    }
    Some(poly)
}

/// Keeps the part of `poly` on the left of the directed line `a → b`.
fn clip_halfplane(poly: &[Vec2], a: Vec2, b: Vec2) -> Vec<Vec2> {
    let dir = b - a;
    let side = |p: Vec2| dir.cross(p - a);
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let s = poly[i];
        let e = poly[(i + 1) % n];
        let (ds, de) = (side(s), side(e));
        let (s_in, e_in) = (ds >= 0.0, de >= 0.0);
        if s_in != e_in {
            let t = ds / (ds - de);
            out.push(s.lerp(e, t));
        }
        if e_in {
            out.push(e);
        }
    }
    out
}

fn dedup_ring(points: Vec<Vec2>, eps: f64) -> Vec<Vec2> {
    let mut out: Vec<Vec2> = Vec::with_capacity(points.len());
    for p in points {
        if out.last().is_none_or(|q| q.distance(p) > eps) {
            out.push(p);
        }
    }
    while out.len() > 1 && out[0].distance(*out.last().unwrap()) <= eps {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_at(dx: f64, dy: f64) -> ConvexPolygon2 {
        ConvexPolygon2::new(vec![
            Vec2::new(dx, dy),
            Vec2::new(dx + 1.0, dy),
            Vec2::new(dx + 1.0, dy + 1.0),
            Vec2::new(dx, dy + 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn self_intersection_is_identity() {
        let sq = square_at(0.0, 0.0);
        let c = convex_clip(&sq, &sq).unwrap();
        assert!((c.area() - 1.0).abs() < 1e-15);
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn disjoint_is_empty() {
        assert!(convex_clip(&square_at(0.0, 0.0), &square_at(2.0, 0.0)).is_none());
    }

    #[test]
    fn quarter_overlap() {
        let c = convex_clip(&square_at(0.0, 0.0), &square_at(0.5, 0.5)).unwrap();
        assert!((c.area() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn shared_edge_contact_is_empty() {
        assert!(convex_clip(&square_at(0.0, 0.0), &square_at(1.0, 0.0)).is_none());
        assert!(convex_clip(&square_at(0.0, 0.0), &square_at(1.0, 1.0)).is_none());
    }

    #[test]
    fn triangle_in_square() {
        let tri = ConvexPolygon2::new(vec![
            Vec2::new(-0.5, 0.5),
            Vec2::new(0.5, -0.5),
            Vec2::new(0.5, 0.5),
        ])
        .unwrap();
        let c = convex_clip(&tri, &square_at(0.0, 0.0)).unwrap();
        // the hypotenuse x + y = 0 only touches the square's corner
        assert!((c.area() - 0.25).abs() < 1e-15, "{}", c.area());
    }
}
