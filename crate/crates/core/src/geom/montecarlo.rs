//! Monte-Carlo estimate of the intersection area of two convex polygons.
//!
//! Independent of [`convex_clip`](super::convex_clip): it only uses
//! point-in-polygon tests. Samples are drawn uniformly from the bounding box
//! of `p` with `ChaCha8Rng::seed_from_u64(seed)`, two `f64` draws per sample
//! (x then y), so estimates are reproducible for a given seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ConvexPolygon2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub area: f64,
    /// Binomial standard error of `area`.
    pub std_error: f64,
    pub samples: u64,
    pub hits: u64,
}

pub fn mc_overlap_estimate(
    p: &ConvexPolygon2,
    q: &ConvexPolygon2,
    n: u64,
    seed: u64,
) -> McEstimate {
    let n = n.max(1);
    let (lo, hi) = p.bounds();
    let (q_lo, q_hi) = q.bounds();
    let box_area = (hi.x - lo.x) * (hi.y - lo.y);
    // disjoint boxes: no sample can land in both
    if q_lo.x > hi.x || q_hi.x < lo.x || q_lo.y > hi.y || q_hi.y < lo.y {
        return McEstimate {
            area: 0.0,
            std_error: 0.0,
            samples: n,
            hits: 0,
        };
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..n {
        let x = lo.x + (hi.x - lo.x) * rng.random::<f64>();
        let y = lo.y + (hi.y - lo.y) * rng.random::<f64>();
        let s = super::Vec2::new(x, y);
        if p.contains(s, 0.0) && q.contains(s, 0.0) {
            hits += 1;
        }
    }
    let frac = hits as f64 / n as f64;
    McEstimate {
        area: box_area * frac,
        std_error: box_area * (frac * (1.0 - frac) / n as f64).sqrt(),
        samples: n,
        hits,
    }
}

pub fn mc_overlap_area(p: &ConvexPolygon2, q: &ConvexPolygon2, n: u64, seed: u64) -> f64 {
    mc_overlap_estimate(p, q, n, seed).area
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec2;

    fn square_at(dx: f64) -> ConvexPolygon2 {
        ConvexPolygon2::new(vec![
            Vec2::new(dx, 0.0),
            Vec2::new(dx + 1.0, 0.0),
            Vec2::new(dx + 1.0, 1.0),
            Vec2::new(dx, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn self_overlap_is_full_area() {
        let sq = square_at(0.0);
        let est = mc_overlap_estimate(&sq, &sq, 1_000_000, 7);
        assert!((est.area - 1.0).abs() <= 0.005, "{}", est.area);
    }

    #[test]
    fn disjoint_is_exactly_zero() {
        assert_eq!(
            mc_overlap_area(&square_at(0.0), &square_at(2.0), 10_000, 1),
            0.0
        );
    }

    #[test]
    fn seeded_determinism() {
        let (a, b) = (square_at(0.0), square_at(0.5));
        assert_eq!(
            mc_overlap_estimate(&a, &b, 10_000, 42),
            mc_overlap_estimate(&a, &b, 10_000, 42)
        );
        let est = mc_overlap_estimate(&a, &b, 200_000, 3);
        assert!((est.area - 0.5).abs() < 4.0 * est.std_error);
    }
}
