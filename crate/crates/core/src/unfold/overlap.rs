use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Development, TopPlacement};
use crate::geom::{convex_clip, ConvexPolygon2};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Overlap,
    Clear,
    Marginal,
}

impl Verdict {
    /// `> 10τ` overlaps, `< 0.1τ` is clear, anything between is marginal.
    pub fn classify(total_area: f64, threshold: f64) -> Self {
        if total_area > 10.0 * threshold {
            Verdict::Overlap
        } else if total_area < 0.1 * threshold {
            Verdict::Clear
        } else {
            Verdict::Marginal
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Overlap => "OVERLAP",
            Verdict::Clear => "CLEAR",
            Verdict::Marginal => "MARGINAL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceOverlap {
    /// Side face index (not unrolled position).
    pub face: usize,
    pub region: ConvexPolygon2,
    pub area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub cut: usize,
    pub attach: usize,
    pub faces: Vec<FaceOverlap>,
    pub total_area: f64,
    pub threshold: f64,
    pub verdict: Verdict,
}

/// Clips the placed top face against each developed quad.
///
/// Contact along the shared attachment edge clips to a degenerate sliver,
/// which `convex_clip` reports as empty.
pub fn overlap(placement: &TopPlacement, dev: &Development, tol: &Tolerances) -> OverlapReport {
    let faces: Vec<FaceOverlap> = dev
        .quads
        .iter()
        .enumerate()
        .filter_map(|(t, quad)| {
            let region = convex_clip(&placement.hexagon, quad)?;
            Some(FaceOverlap {
                face: dev.face_at(t),
                area: region.area(),
                region,
            })
        })
        .collect();
    let total_area = faces.iter().fold(0.0, |acc, f| acc + f.area);
    let threshold = tol.overlap_threshold(dev.top.area());
    OverlapReport {
        cut: dev.cut,
        attach: placement.attach,
        faces,
        total_area,
        threshold,
        verdict: Verdict::classify(total_area, threshold),
    }
}

/// Pairwise overlap area between developed quads, keyed by unrolled positions.
pub fn band_self_overlaps(dev: &Development) -> Vec<(usize, usize, f64)> {
    let q: &[ConvexPolygon2] = &dev.quads;
    let mut out = Vec::new();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            let area = convex_clip(&q[i], &q[j]).map_or(0.0, |r| r.area());
            out.push((i, j, area));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_prismatoid, PrismatoidParams};
    use crate::unfold::{develop_band, place_top};

    #[test]
    fn classification_window() {
        assert_eq!(Verdict::classify(0.0, 1e-9), Verdict::Clear);
        assert_eq!(Verdict::classify(5e-11, 1e-9), Verdict::Clear);
        assert_eq!(Verdict::classify(2e-10, 1e-9), Verdict::Marginal);
        assert_eq!(Verdict::classify(1e-8, 1e-9), Verdict::Marginal);
        assert_eq!(Verdict::classify(1.1e-8, 1e-9), Verdict::Overlap);
    }

    #[test]
    fn right_prism_is_clear() {
        let p = build_prismatoid(PrismatoidParams::new(
            1.0,
            PrismatoidParams::regular_bulge(1.0),
            0.0,
            0.3,
        ))
        .unwrap();
        let tol = Tolerances::default();
        for cut in 0..6 {
            let d = develop_band(&p, cut).unwrap();
            for j in 0..6 {
                let r = overlap(&place_top(&d, j).unwrap(), &d, &tol);
                assert_eq!(r.verdict, Verdict::Clear);
                assert!(r.faces.is_empty());
            }
        }
    }

    #[test]
    fn attachment_face_contributes_nothing() {
        let p = build_prismatoid(PrismatoidParams::new(1.0, 0.05, 0.5, 0.1)).unwrap();
        let d = develop_band(&p, 0).unwrap();
        for j in 0..6 {
            let r = overlap(&place_top(&d, j).unwrap(), &d, &Tolerances::default());
            assert!(r.faces.iter().all(|f| f.face != j && f.area > 0.0));
        }
    }

    #[test]
    fn acute_shape_overlaps() {
        let p = build_prismatoid(PrismatoidParams::new(1.0, 0.05, 0.5, 0.1)).unwrap();
        let d = develop_band(&p, 3).unwrap();
        let r = overlap(&place_top(&d, 0).unwrap(), &d, &Tolerances::default());
        assert_eq!(r.verdict, Verdict::Overlap);
        assert_eq!(
            r.total_area,
            r.faces.iter().fold(0.0, |acc, f| acc + f.area)
        );
    }
}
