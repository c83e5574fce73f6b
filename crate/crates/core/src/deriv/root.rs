//! Root finding driven by the exact first derivative.
//!
//! These are demonstrations: a plain Newton iteration and a scan for the
//! leftmost sign change on a uniform grid. The scan can miss roots that
//! fall between two grid points or that touch zero without a sign change.

use super::{differentiate, DerivError};
use crate::expr::{eval, Expr, RealDomain};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn value_and_slope(e: &Expr, x: f64) -> Result<(f64, f64), DerivError> {
    let r = differentiate(e, x, 1)?;
    Ok((r.derivatives[0], r.derivatives[1]))
}

/// Newton's iteration `x ← x - f(x)/f′(x)`, stopping once `|f(x)| ≤ tol`.
///
/// Returns `converged = false` when `max_iter` steps were not enough.
/// A zero slope at an iterate is an error since the step is undefined.
pub fn newton_root(e: &Expr, x0: f64, tol: f64, max_iter: usize) -> Result<RootResult, DerivError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(DerivError::PreconditionViolated(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(DerivError::PreconditionViolated(
            "max_iter must be at least 1".into(),
        ));
    }
    let mut x = x0;
    for iterations in 0..max_iter {
        let (fx, dfx) = value_and_slope(e, x)?;
        if fx.abs() <= tol {
            return Ok(RootResult {
                root: x,
                iterations,
                converged: true,
            });
        }
        if dfx == 0.0 {
            return Err(DerivError::DerivativeVanished(x));
        }
        x -= fx / dfx;
        if !x.is_finite() {
            return Err(DerivError::NonFinitePoint(x));
        }
    }
    let fx = eval(e, &x, &RealDomain)?;
    Ok(RootResult {
        root: x,
        iterations: max_iter,
        converged: fx.abs() <= tol,
    })
}

/// Refinement steps used by [`minimal_root_scan`].
pub const DEFAULT_REFINE_STEPS: usize = 200;

/// Leftmost root of `e` in `[a, b]` given `f(a) > 0`.
///
/// Samples `n + 1` equally spaced points, finds the first interval where
/// the sign changes and refines it with Newton steps that fall back to
/// bisection whenever a step leaves the bracket. `None` means no sign
/// change was seen on the grid.
pub fn minimal_root_scan(
    e: &Expr,
    a: f64,
    b: f64,
    n: usize,
    tol: f64,
) -> Result<Option<f64>, DerivError> {
    minimal_root_scan_with(e, a, b, n, tol, DEFAULT_REFINE_STEPS)
}

/// [`minimal_root_scan`] with at most `max_iter` refinement steps.
pub fn minimal_root_scan_with(
    e: &Expr,
    a: f64,
    b: f64,
    n: usize,
    tol: f64,
    max_iter: usize,
) -> Result<Option<f64>, DerivError> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(DerivError::PreconditionViolated(format!(
            "need a finite interval with a < b, got [{a}, {b}]"
        )));
    }
    if n < 2 {
        return Err(DerivError::PreconditionViolated(format!(
            "grid needs n >= 2, got {n}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(DerivError::PreconditionViolated(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(DerivError::PreconditionViolated(
            "max_iter must be at least 1".into(),
        ));
    }
    let f = |x: f64| eval(e, &x, &RealDomain);
    let fa = f(a)?;
    if fa.is_nan() || fa <= 0.0 {
        return Err(DerivError::PreconditionViolated(format!(
            "f(a) must be positive, got f({a}) = {fa}"
        )));
    }
    let grid = |i: usize| {
        if i == n {
            b
        } else {
            a + (b - a) * (i as f64) / (n as f64)
        }
    };
    let mut left = a;
    for i in 1..=n {
        let right = grid(i);
        let fr = f(right)?;
        if fr == 0.0 {
            return Ok(Some(right));
        }
        if fr < 0.0 {
            return bracketed_newton(e, left, right, tol, max_iter).map(Some);
        }
        left = right;
    }
    Ok(None)
}

/// Safeguarded Newton on `[pos, neg]` where `f(pos) > 0 > f(neg)`.
fn bracketed_newton(
    e: &Expr,
    mut pos: f64,
    mut neg: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64, DerivError> {
    let mut x = 0.5 * (pos + neg);
    for _ in 0..max_iter {
        let (fx, dfx) = value_and_slope(e, x)?;
        if fx.abs() <= tol {
            return Ok(x);
        }
        if fx > 0.0 {
            pos = x;
        } else {
            neg = x;
        }
        let (lo, hi) = (pos.min(neg), pos.max(neg));
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // bracket collapsed to adjacent floats
            return Ok(x);
        }
        let step = if dfx != 0.0 { x - fx / dfx } else { f64::NAN };
        x = if step > lo && step < hi { step } else { mid };
    }
    Ok(x)
}
