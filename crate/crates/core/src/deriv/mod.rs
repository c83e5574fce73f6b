//! Exact derivatives from a single grossnumber evaluation.
//!
//! Evaluating a program `f` at `x = y + ①⁻¹` produces the numeral
//! `c₀①⁰ c₋₁①⁻¹ … c₋ₖ①⁻ᵏ` whose digits are the Taylor coefficients of `f`
//! at `y`. The derivatives follow by scaling: `f⁽ʲ⁾(y) = j!·c₋ⱼ`.
//!
//! ```
//! use grossone::{deriv::differentiate, parse};
//!
//! let f = parse("x*x*x").unwrap();
//! let r = differentiate(&f, 5.0, 3).unwrap();
//! assert_eq!(r.coefficients, vec![125.0, 75.0, 15.0, 1.0]);
//! assert_eq!(r.derivatives, vec![125.0, 75.0, 30.0, 6.0]);
//! ```

mod baseline;
mod root;

use std::fmt;

use thiserror::Error;

pub use baseline::{
    complex_step, default_h_grid, fd_backward, fd_central, fd_forward, BaselineMethod,
    BaselineResult,
};
pub use root::{
    minimal_root_scan, minimal_root_scan_with, newton_root, RootResult, DEFAULT_REFINE_STEPS,
};

use crate::expr::{eval, EvalError, Expr, GrossDomain, NumericDomain};
use crate::number::{GrossNumber, GrossPower};

/// Largest supported order: `18!` is the last factorial exact in binary64.
pub const MAX_ORDER: u32 = 18;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DerivError {
    #[error("evaluation failed: {0}")]
    Evaluation(#[from] EvalError),
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(u32),
    #[error("point {0} is not finite")]
    NonFinitePoint(f64),
    #[error("step {0} must be positive and finite")]
    InvalidStep(f64),
    #[error("derivative vanished at x = {0}")]
    DerivativeVanished(f64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Warning {
    /// The result had terms above `①⁰`: the program does not stay finite
    /// near the point, so the readout is not a Taylor expansion.
    InfinitePartDetected { leading_power: GrossPower },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::InfinitePartDetected { leading_power } => {
                write!(f, "InfinitePartDetected(leading power {leading_power})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeResult {
    pub y: f64,
    pub order: u32,
    /// `c₀, c₋₁, …, c₋ₖ`.
    pub coefficients: Vec<f64>,
    /// `f(y), f′(y), …, f⁽ᵏ⁾(y)`.
    pub derivatives: Vec<f64>,
    pub warnings: Vec<Warning>,
    /// The full numeral returned by the evaluation.
    pub numeral: GrossNumber,
}

/// `0!, 1!, …, k!`, exact for `k ≤ 18`.
pub fn factorials(k: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(k as usize + 1);
    let mut acc = 1.0;
    out.push(acc);
    for j in 1..=k {
        acc *= j as f64;
        out.push(acc);
    }
    out
}

fn check(y: f64, k: u32) -> Result<(), DerivError> {
    if k > MAX_ORDER {
        return Err(DerivError::OrderTooLarge(k));
    }
    if !y.is_finite() {
        return Err(DerivError::NonFinitePoint(y));
    }
    Ok(())
}

/// Evaluates `e` once at `y + ①⁻¹` (floor `①^-k`) in `domain`.
pub fn evaluate_at_seed<D>(e: &Expr, y: f64, k: u32, domain: &D) -> Result<GrossNumber, DerivError>
where
    D: NumericDomain<Value = GrossNumber>,
{
    check(y, k)?;
    let x = GrossNumber::seed(y, k).map_err(|source| EvalError {
        span: e.span,
        source,
    })?;
    Ok(eval(e, &x, domain)?)
}

/// Raw numeral readout `[c₀, c₋₁, …, c₋ₖ]` of `e` at `y`.
pub fn taylor_coefficients(e: &Expr, y: f64, k: u32) -> Result<Vec<f64>, DerivError> {
    Ok(differentiate(e, y, k)?.coefficients)
}

/// Value and first `k` derivatives of `e` at `y`.
pub fn differentiate(e: &Expr, y: f64, k: u32) -> Result<DerivativeResult, DerivError> {
    differentiate_with(e, y, k, &GrossDomain::new())
}

/// [`differentiate`] in a caller-supplied grossnumber domain.
pub fn differentiate_with<D>(
    e: &Expr,
    y: f64,
    k: u32,
    domain: &D,
) -> Result<DerivativeResult, DerivError>
where
    D: NumericDomain<Value = GrossNumber>,
{
    let numeral = evaluate_at_seed(e, y, k, domain)?;
    let mut warnings = Vec::new();
    if let Some(lead) = numeral.leading().filter(|t| t.power.is_positive()) {
        warnings.push(Warning::InfinitePartDetected {
            leading_power: lead.power,
        });
    }
    let coefficients: Vec<f64> = (0..=k as i64).map(|j| numeral.coefficient(-j)).collect();
    let derivatives = coefficients
        .iter()
        .zip(factorials(k))
        .map(|(c, f)| c * f)
        .collect();
    Ok(DerivativeResult {
        y,
        order: k,
        coefficients,
        derivatives,
        warnings,
        numeral,
    })
}
