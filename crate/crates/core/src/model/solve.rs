//! Parameter solver: find `(h, z)` hitting a target odd-vertex curvature `ε`
//! and a target ratio `δ / ε`, with `s` and `y` held fixed.
//!
//! Nested bisection. For fixed `h`, `ε` increases strictly with `z`, so the
//! inner loop brackets `z`. The ratio `δ / ε` increases with the bulge `h`,
//! so the outer loop brackets `h`. Both loops run until the bracket cannot
//! shrink in floating point, which makes the result deterministic.

use serde::{Deserialize, Serialize};

use super::{vertex_curvature, CurvaturePair, ModelError, Prismatoid, PrismatoidParams};

/// Required residual on both targets, radians.
pub const SOLVER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolvedParams {
    pub params: PrismatoidParams,
    pub curvatures: CurvaturePair,
}

fn curvatures(params: PrismatoidParams) -> CurvaturePair {
    let p = Prismatoid::construct(params);
    CurvaturePair {
        delta: vertex_curvature(&p, 0),
        epsilon: vertex_curvature(&p, 1),
    }
}

/// Smallest argument in `[lo, hi]` where the increasing `f` crosses zero.
fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn infeasible(target: f64, reason: impl Into<String>) -> ModelError {
    ModelError::Infeasible {
        target,
        reason: reason.into(),
    }
}

/// Height `z` at which the odd-vertex curvature reaches `target` for this `h`.
fn solve_height(s: f64, h: f64, y: f64, target: f64) -> Result<f64, ModelError> {
    let eps_at = |z: f64| curvatures(PrismatoidParams::new(s, h, y, z)).epsilon - target;
    let (lo, hi) = (1e-12 * s, 1e4 * s.max(y));
    if eps_at(lo) >= 0.0 {
        return Err(infeasible(
            target,
            "target below the curvature of an almost flat shape",
        ));
    }
    if eps_at(hi) < 0.0 {
        return Err(infeasible(
            target,
            format!("odd-vertex curvature stays below the target for h = {h}"),
        ));
    }
    Ok(bisect(lo, hi, eps_at))
}

pub fn solve_params(
    target_epsilon: f64,
    ratio: f64,
    s: f64,
    y: f64,
) -> Result<SolvedParams, ModelError> {
    if !(target_epsilon.is_finite() && target_epsilon > 0.0) {
        return Err(ModelError::InvalidParams(format!(
            "target ε must be positive, got {target_epsilon}"
        )));
    }
    if !(ratio.is_finite() && ratio > 0.0 && ratio <= 1.0) {
        return Err(ModelError::InvalidParams(format!(
            "ratio δ/ε must lie in (0, 1], got {ratio}"
        )));
    }
    if !(s.is_finite() && s > 0.0 && y.is_finite() && y > 0.0) {
        return Err(ModelError::InvalidParams(format!(
            "s and y must be positive, got s = {s}, y = {y}"
        )));
    }

    let ratio_gap = |h: f64| -> Result<f64, ModelError> {
        let z = solve_height(s, h, y, target_epsilon)?;
        Ok(curvatures(PrismatoidParams::new(s, h, y, z)).ratio() - ratio)
    };
    let (h_lo, h_hi) = (1e-6 * s, 0.5 * s);
    if ratio_gap(h_lo)? >= 0.0 || ratio_gap(h_hi)? < 0.0 {
        return Err(infeasible(
            target_epsilon,
            format!("no sign change of δ/ε − {ratio} for h in [{h_lo}, {h_hi}]"),
        ));
    }
    // errors inside the bracket cannot occur once both ends solved
    let h = bisect(h_lo, h_hi, |h| ratio_gap(h).unwrap_or(f64::NAN));
    let z = solve_height(s, h, y, target_epsilon)?;
    let params = PrismatoidParams::new(s, h, y, z);
    let c = curvatures(params);
    let residual = (c.epsilon - target_epsilon)
        .abs()
        .max((c.delta - ratio * c.epsilon).abs());
    if residual >= SOLVER_TOLERANCE {
        return Err(infeasible(
            target_epsilon,
            format!("residual {residual:e} rad after bisection"),
        ));
    }
    Ok(SolvedParams {
        params,
        curvatures: c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hits_both_targets() {
        let eps = 2f64.to_radians();
        let sol = solve_params(eps, 0.5, 1.0, 0.5).unwrap();
        assert!((sol.curvatures.epsilon - eps).abs() < SOLVER_TOLERANCE);
        assert!((sol.curvatures.delta - 0.5 * eps).abs() < SOLVER_TOLERANCE);
    }

    #[test]
    fn deterministic() {
        let eps = 1f64.to_radians();
        assert_eq!(
            solve_params(eps, 0.5, 1.0, 0.5),
            solve_params(eps, 0.5, 1.0, 0.5)
        );
    }

    #[test]
    fn rejects_bad_targets() {
        assert!(matches!(
            solve_params(-1.0, 0.5, 1.0, 0.5),
            Err(ModelError::InvalidParams(_))
        ));
        assert!(matches!(
            solve_params(0.01, 1.5, 1.0, 0.5),
            Err(ModelError::InvalidParams(_))
        ));
        // beyond π − (odd angle) no height reaches the target
        assert!(matches!(
            solve_params(3.0, 0.5, 1.0, 0.5),
            Err(ModelError::Infeasible { .. })
        ));
    }
}
