//! Finite-step derivative approximations, for comparison with the exact
//! grossone readout. All of them depend on a step `h`: finite differences
//! trade truncation error against cancellation, the complex step avoids the
//! cancellation but still truncates at `O(h²)`.

use num_complex::Complex64;

use super::DerivError;
use crate::expr::{eval, ComplexDomain, Expr, RealDomain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineMethod {
    Forward,
    Backward,
    Central,
    ComplexStep,
}

impl BaselineMethod {
    pub const ALL: [BaselineMethod; 4] = [
        BaselineMethod::Forward,
        BaselineMethod::Backward,
        BaselineMethod::Central,
        BaselineMethod::ComplexStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaselineMethod::Forward => "forward",
            BaselineMethod::Backward => "backward",
            BaselineMethod::Central => "central",
            BaselineMethod::ComplexStep => "complex_step",
        }
    }

    pub fn estimate(self, e: &Expr, y: f64, h: f64) -> Result<BaselineResult, DerivError> {
        match self {
            BaselineMethod::Forward => fd_forward(e, y, h),
            BaselineMethod::Backward => fd_backward(e, y, h),
            BaselineMethod::Central => fd_central(e, y, h),
            BaselineMethod::ComplexStep => complex_step(e, y, h),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineResult {
    pub method: BaselineMethod,
    pub h: f64,
    pub estimate: f64,
}

fn check_step(h: f64) -> Result<(), DerivError> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(DerivError::InvalidStep(h))
    }
}

fn f(e: &Expr, x: f64) -> Result<f64, DerivError> {
    Ok(eval(e, &x, &RealDomain)?)
}

/// `(f(y+h) - f(y)) / h`
pub fn fd_forward(e: &Expr, y: f64, h: f64) -> Result<BaselineResult, DerivError> {
    check_step(h)?;
    Ok(BaselineResult {
        method: BaselineMethod::Forward,
        h,
        estimate: (f(e, y + h)? - f(e, y)?) / h,
    })
}

/// `(f(y) - f(y-h)) / h`
pub fn fd_backward(e: &Expr, y: f64, h: f64) -> Result<BaselineResult, DerivError> {
    check_step(h)?;
    Ok(BaselineResult {
        method: BaselineMethod::Backward,
        h,
        estimate: (f(e, y)? - f(e, y - h)?) / h,
    })
}

/// `(f(y+h) - f(y-h)) / 2h`
pub fn fd_central(e: &Expr, y: f64, h: f64) -> Result<BaselineResult, DerivError> {
    check_step(h)?;
    Ok(BaselineResult {
        method: BaselineMethod::Central,
        h,
        estimate: (f(e, y + h)? - f(e, y - h)?) / (2.0 * h),
    })
}

/// `Im f(y + ih) / h`
pub fn complex_step(e: &Expr, y: f64, h: f64) -> Result<BaselineResult, DerivError> {
    check_step(h)?;
    let z = eval(e, &Complex64::new(y, h), &ComplexDomain)?;
    Ok(BaselineResult {
        method: BaselineMethod::ComplexStep,
        h,
        estimate: z.im / h,
    })
}

/// Decade grid `1e-1, 1e-2, …, 1e-15`.
pub fn default_h_grid() -> Vec<f64> {
    vec![
        1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12, 1e-13, 1e-14,
        1e-15,
    ]
}
