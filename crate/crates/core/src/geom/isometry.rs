use serde::{Deserialize, Serialize};

use super::{GeomError, Vec2};
use crate::tolerance::LENGTH;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Rotation,
    Reflection,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Rotation => 1,
            Orientation::Reflection => -1,
        }
    }
}

/// Side of a directed segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub start: Vec2,
    pub end: Vec2,
}

impl Segment {
    pub const fn new(start: Vec2, end: Vec2) -> Self {
        Self { start, end }
    }

    pub fn length(&self) -> f64 {
        self.start.distance(self.end)
    }

    pub fn direction(&self) -> Vec2 {
        self.end - self.start
    }
}

/// `p ↦ L p + t` with `L` orthogonal.
///
/// `linear` is row-major: `linear[r][c]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarIsometry {
    pub linear: [[f64; 2]; 2],
    pub translation: Vec2,
    pub orientation: Orientation,
}

impl PlanarIsometry {
    pub fn identity() -> Self {
        Self {
            linear: [[1.0, 0.0], [0.0, 1.0]],
            translation: Vec2::ZERO,
            orientation: Orientation::Rotation,
        }
    }

    /// Rotation by `angle` about the origin followed by `translation`.
    pub fn rotation(angle: f64, translation: Vec2) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            linear: [[c, -s], [s, c]],
            translation,
            orientation: Orientation::Rotation,
        }
    }

    /// Built from the images of the x and y unit vectors.
    fn from_columns(ex: Vec2, ey: Vec2, translation: Vec2) -> Self {
        let orientation = if ex.cross(ey) >= 0.0 {
            Orientation::Rotation
        } else {
            Orientation::Reflection
        };
        Self {
            linear: [[ex.x, ey.x], [ex.y, ey.y]],
            translation,
            orientation,
        }
    }

    pub fn apply_vector(&self, v: Vec2) -> Vec2 {
        let m = &self.linear;
        Vec2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }

    pub fn apply(&self, p: Vec2) -> Vec2 {
        self.apply_vector(p) + self.translation
    }

    pub fn is_reflection(&self) -> bool {
        self.orientation == Orientation::Reflection
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PlanarIsometry) -> Self {
        let ex = self.apply_vector(other.apply_vector(Vec2::new(1.0, 0.0)));
        let ey = self.apply_vector(other.apply_vector(Vec2::new(0.0, 1.0)));
        Self::from_columns(ex, ey, self.apply(other.translation))
    }

    pub fn inverse(&self) -> Self {
        let m = &self.linear;
        // orthogonal: inverse is the transpose
        let ex = Vec2::new(m[0][0], m[0][1]);
        let ey = Vec2::new(m[1][0], m[1][1]);
        let inv = Self::from_columns(ex, ey, Vec2::ZERO);
        let t = -inv.apply_vector(self.translation);
        Self {
            translation: t,
            ..inv
        }
    }

    /// Largest deviation of `Lᵀ L` from the identity.
    pub fn orthogonality_error(&self) -> f64 {
        let m = &self.linear;
        let c0 = Vec2::new(m[0][0], m[1][0]);
        let c1 = Vec2::new(m[0][1], m[1][1]);
        (c0.dot(c0) - 1.0)
            .abs()
            .max((c1.dot(c1) - 1.0).abs())
            .max(c0.dot(c1).abs())
    }
}

/// Rigid motion taking `src.start → dst.start` and `src.end → dst.end`.
///
/// A probe point on the left of `src` lands on the `side` of `dst`: `Left`
/// yields a rotation, `Right` a reflection.
pub fn rigid_map_from_edge(
    src: Segment,
    dst: Segment,
    side: Side,
) -> Result<PlanarIsometry, GeomError> {
    for seg in [&src, &dst] {
        if !seg.start.is_finite() || !seg.end.is_finite() {
            return Err(GeomError::InvalidGeometry("non-finite segment".into()));
        }
    }
    let (ls, ld) = (src.length(), dst.length());
    if ls == 0.0 || ld == 0.0 {
        return Err(GeomError::InvalidGeometry("zero-length segment".into()));
    }
    if (ls - ld).abs() > LENGTH * ls.max(ld) {
        return Err(GeomError::LengthMismatch { src: ls, dst: ld });
    }
    let u = src.direction() * (1.0 / ls);
    let v = dst.direction() * (1.0 / ld);
    let (up, vp) = (u.perp(), v.perp());
    let sign = match side {
        Side::Left => 1.0,
        Side::Right => -1.0,
    };
    // L = v uᵀ ± v⊥ u⊥ᵀ
    let ex = v * u.x + vp * (sign * up.x);
    let ey = v * u.y + vp * (sign * up.y);
    let mut iso = PlanarIsometry::from_columns(ex, ey, Vec2::ZERO);
    iso.orientation = match side {
        Side::Left => Orientation::Rotation,
        Side::Right => Orientation::Reflection,
    };
    iso.translation = dst.start - iso.apply_vector(src.start);
    Ok(iso)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Vec2, b: Vec2) -> bool {
        a.distance(b) < 1e-14
    }

    fn unit_x() -> Segment {
        Segment::new(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0))
    }

    #[test]
    fn identity_when_src_equals_dst() {
        let seg = Segment::new(Vec2::new(0.3, -1.0), Vec2::new(2.0, 4.0));
        let iso = rigid_map_from_edge(seg, seg, Side::Left).unwrap();
        let id = PlanarIsometry::identity();
        for r in 0..2 {
            for c in 0..2 {
                assert!((iso.linear[r][c] - id.linear[r][c]).abs() < 1e-15);
            }
        }
        assert!(iso.translation.norm() < 1e-15);
        assert_eq!(iso.orientation, Orientation::Rotation);
    }

    #[test]
    fn quarter_turn() {
        let dst = Segment::new(Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0));
        let iso = rigid_map_from_edge(unit_x(), dst, Side::Left).unwrap();
        assert!(close(iso.apply(Vec2::new(1.0, 0.0)), Vec2::new(0.0, 1.0)));
        assert!(close(iso.apply(Vec2::new(0.0, 1.0)), Vec2::new(-1.0, 0.0)));
        assert_eq!(iso.orientation.sign(), 1);
    }

    #[test]
    fn reflection_across_x_axis() {
        let iso = rigid_map_from_edge(unit_x(), unit_x(), Side::Right).unwrap();
        assert!(close(
            iso.apply(Vec2::new(0.25, 0.5)),
            Vec2::new(0.25, -0.5)
        ));
        assert!(iso.is_reflection());
        assert_eq!(iso.orientation.sign(), -1);
    }

    #[test]
    fn errors() {
        let long = Segment::new(Vec2::new(0.0, 0.0), Vec2::new(2.0, 0.0));
        assert!(matches!(
            rigid_map_from_edge(unit_x(), long, Side::Left),
            Err(GeomError::LengthMismatch { .. })
        ));
        let point = Segment::new(Vec2::new(1.0, 1.0), Vec2::new(1.0, 1.0));
        assert!(matches!(
            rigid_map_from_edge(point, point, Side::Left),
            Err(GeomError::InvalidGeometry(_))
        ));
    }

    #[test]
    fn compose_and_inverse() {
        let a = PlanarIsometry::rotation(0.7, Vec2::new(1.0, -2.0));
        let b = rigid_map_from_edge(
            unit_x(),
            Segment::new(Vec2::new(3.0, 3.0), Vec2::new(3.0, 2.0)),
            Side::Right,
        )
        .unwrap();
        let p = Vec2::new(0.4, 1.3);
        assert!(close(a.compose(&b).apply(p), a.apply(b.apply(p))));
        assert!(close(b.inverse().apply(b.apply(p)), p));
        assert!(a.compose(&b).is_reflection());
        assert!(b.orthogonality_error() < 1e-15);
    }
}
