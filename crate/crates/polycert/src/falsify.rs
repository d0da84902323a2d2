//! Floating-point search for nonpositivity witnesses.
//!
//! Certificates prove positivity; this module hunts for disproofs. Rays
//! from the origin through a barycentric grid on the standard simplex are
//! intersected with the slice `r(x) = c` (monotone in the ray parameter
//! because `r` has nonnegative coefficients, so bisection suffices), and
//! the target is evaluated at each intersection. A point with `f <= tol`
//! is returned as a [`Witness`].
//!
//! Everything here is `f64`. A witness is a concrete counterexample up to
//! floating-point error and a missing witness proves nothing; exact
//! reasoning lives entirely on the certificate side.

use num_traits::{Signed, Zero};

use crate::cert::ProblemInstance;
use crate::poly::rational_to_f64;
use crate::support::grade_slice;
use crate::Error;

/// A slice point at which the target is nonpositive (within tolerance).
#[derive(Clone, Debug)]
pub struct Witness {
    pub point: Vec<f64>,
    /// Target value at the point.
    pub f_value: f64,
    /// `r(point) - height`; measures how exactly the point sits on the
    /// slice.
    pub r_residual: f64,
}

fn check_tolerance(tol: f64) -> Result<(), Error> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Intersects the ray `t -> t * direction`, `t >= 0`, with the slice
/// `r = height`. Returns the intersection point, or `None` when the ray
/// misses the slice (possible only when the level form sits above the
/// height at the origin, or lacks the unit monomials the precondition
/// normally guarantees).
///
/// The branch at `t = 0` is decided exactly on the rational constant term;
/// the interior intersection is bisected to within `tol` in the ray
/// parameter.
pub fn ray_solve(
    instance: &ProblemInstance,
    direction: &[f64],
    tol: f64,
) -> Result<Option<Vec<f64>>, Error> {
    check_tolerance(tol)?;
    assert_eq!(direction.len(), instance.dimension(), "direction length mismatch");
    assert!(
        direction.iter().all(|&u| u.is_finite() && u >= 0.0),
        "ray directions must be nonnegative and finite"
    );

    // r(0) relates to the height exactly: the constant term is rational.
    let constant = instance.level_form().constant_term();
    let origin_gap = &constant - instance.height();
    if origin_gap.is_zero() {
        return Ok(Some(vec![0.0; instance.dimension()]));
    }
    if origin_gap.is_positive() {
        // r only grows along the ray; it never comes back down to c.
        return Ok(None);
    }

    let height = rational_to_f64(instance.height());
    let residual = |t: f64| {
        let point: Vec<f64> = direction.iter().map(|&u| t * u).collect();
        instance.level_form().evaluate_f64(&point) - height
    };

    let mut hi = 1.0f64;
    while residual(hi) < 0.0 {
        hi *= 2.0;
        if hi > 1e100 {
            return Ok(None);
        }
    }
    let mut lo = 0.0f64;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if !(mid > lo && mid < hi) {
            break;
        }
        if residual(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    Ok(Some(direction.iter().map(|&u| t * u).collect()))
}

/// Scans a barycentric grid of resolution `grid` on the simplex of
/// directions, intersects each ray with the slice, and reports the grid
/// minimizer of the target if its value is at most `tol`.
///
/// `None` means no witness on this grid, which is evidence, not proof: a
/// finer grid or tighter tolerance may still find one.
pub fn falsify(
    instance: &ProblemInstance,
    grid: u32,
    tol: f64,
) -> Result<Option<Witness>, Error> {
    if grid == 0 {
        return Err(Error::InvalidGrid);
    }
    check_tolerance(tol)?;

    let n = instance.dimension();
    let height = rational_to_f64(instance.height());
    let mut best: Option<Witness> = None;
    for weights in grade_slice(n, grid).iter() {
        let direction: Vec<f64> = weights
            .exponents()
            .iter()
            .map(|&w| w as f64 / grid as f64)
            .collect();
        let Some(point) = ray_solve(instance, &direction, tol)? else {
            continue;
        };
        let f_value = instance.target().evaluate_f64(&point);
        if !f_value.is_finite() {
            continue;
        }
        if best.as_ref().is_none_or(|b| f_value < b.f_value) {
            let r_residual = instance.level_form().evaluate_f64(&point) - height;
            best = Some(Witness { point, f_value, r_residual });
        }
    }
    Ok(best.filter(|witness| witness.f_value <= tol))
}
