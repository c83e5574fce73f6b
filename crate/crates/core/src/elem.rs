//! Elementary functions lifted to grossnumbers.
//!
//! An argument `x = c₀ + δ` (finite part plus infinitesimal part) is mapped
//! to `Σ a_j·δ^j` for `j = 0..=k`, where `a_j = g^(j)(c₀)/j!` are the Taylor
//! coefficients of `g` at `c₀` and `k` is the truncation order implied by the
//! floor of `x`. Because `δ^j` lives at powers `≤ -j`, every term that could
//! survive the floor is accounted for, and the result carries the exact
//! derivatives of `g` up to the accuracy of the scalar functions.

use crate::error::GrossError;
use crate::number::{GrossNumber, GrossPower};

/// A rule producing the Taylor coefficients of a scalar function.
pub trait SeriesSpec {
    /// Name used in domain errors.
    fn name(&self) -> &'static str;

    /// `a_0..=a_order` at the expansion point `c0`.
    fn coefficients(&self, c0: f64, order: usize) -> Result<Vec<f64>, GrossError>;
}

/// The built-in elementary functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Elementary {
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
    Recip,
    /// `u^r` for a real exponent `r`.
    Powf(f64),
}

impl Elementary {
    /// Scalar value at `c0`, using the platform functions.
    pub fn scalar(&self, c0: f64) -> f64 {
        match *self {
            Elementary::Sin => c0.sin(),
            Elementary::Cos => c0.cos(),
            Elementary::Exp => c0.exp(),
            Elementary::Ln => c0.ln(),
            Elementary::Sqrt => c0.sqrt(),
            Elementary::Recip => 1.0 / c0,
            Elementary::Powf(r) => c0.powf(r),
        }
    }

    fn check_domain(&self, c0: f64) -> Result<(), GrossError> {
        let ok = match *self {
            Elementary::Ln => c0 > 0.0,
            // sqrt(0) is fine on its own; any derivative term overflows below
            Elementary::Sqrt => c0 >= 0.0,
            Elementary::Recip => c0 != 0.0,
            Elementary::Powf(r) if r < 0.0 => c0 != 0.0 && (c0 > 0.0 || r.fract() == 0.0),
            Elementary::Powf(r) => c0 >= 0.0 || r.fract() == 0.0,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(self.domain_error(c0))
        }
    }

    fn domain_error(&self, c0: f64) -> GrossError {
        GrossError::DomainError {
            function: self.name(),
            finite_part: c0,
        }
    }
}

impl SeriesSpec for Elementary {
    fn name(&self) -> &'static str {
        match self {
            Elementary::Sin => "sin",
            Elementary::Cos => "cos",
            Elementary::Exp => "exp",
            Elementary::Ln => "ln",
            Elementary::Sqrt => "sqrt",
            Elementary::Recip => "recip",
            Elementary::Powf(_) => "pow",
        }
    }

    fn coefficients(&self, c0: f64, order: usize) -> Result<Vec<f64>, GrossError> {
        self.check_domain(c0)?;
        let mut a = Vec::with_capacity(order + 1);
        match *self {
            Elementary::Sin | Elementary::Cos => {
                let (s, c) = c0.sin_cos();
                // derivatives cycle through sin, cos, -sin, -cos
                let cycle = [s, c, -s, -c];
                let shift = if *self == Elementary::Sin { 0 } else { 1 };
                let mut inv_fact = 1.0;
                for j in 0..=order {
                    if j > 0 {
                        inv_fact /= j as f64;
                    }
                    a.push(cycle[(j + shift) % 4] * inv_fact);
                }
            }
            Elementary::Exp => {
                let mut t = c0.exp();
                for j in 0..=order {
                    if j > 0 {
                        t /= j as f64;
                    }
                    a.push(t);
                }
            }
            Elementary::Ln => {
                a.push(c0.ln());
                let mut p = 1.0;
                for j in 1..=order {
                    p *= c0;
                    let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
                    a.push(sign / (j as f64 * p));
                }
            }
            Elementary::Recip => {
                let mut t = 1.0 / c0;
                for _ in 0..=order {
                    a.push(t);
                    t = -t / c0;
                }
            }
            Elementary::Sqrt => binomial_series(c0.sqrt(), 0.5, c0, order, &mut a),
            Elementary::Powf(r) => binomial_series(c0.powf(r), r, c0, order, &mut a),
        }
        if a.iter().any(|v| !v.is_finite()) {
            return Err(self.domain_error(c0));
        }
        Ok(a)
    }
}

/// `a_{j+1} = a_j·(r - j)/((j + 1)·c0)`, starting from `a_0 = c0^r`.
fn binomial_series(a0: f64, r: f64, c0: f64, order: usize, out: &mut Vec<f64>) {
    let mut t = a0;
    out.push(t);
    for j in 0..order {
        t = t * (r - j as f64) / ((j + 1) as f64 * c0);
        out.push(t);
    }
}

/// Composes a Taylor series with the infinitesimal part of `x`.
///
/// `x` must have no infinite part and only integer infinitesimal powers.
/// The order of the expansion is read off the floor of `x`: a floor of
/// `①^-k` needs the first `k + 1` coefficients. An argument without an
/// infinitesimal part short-circuits to the scalar function, so finite
/// inputs give exactly the platform result.
pub fn taylor_apply<S: SeriesSpec + ?Sized>(
    spec: &S,
    x: &GrossNumber,
) -> Result<GrossNumber, GrossError> {
    if let Some(lead) = x.leading() {
        if lead.power.is_positive() {
            return Err(GrossError::InfinitePart(lead.power));
        }
    }
    if let Some(t) = x.terms().iter().find(|t| !t.power.is_integer()) {
        return Err(GrossError::NonIntegerInfinitesimal(t.power));
    }
    let c0 = x.finite_part();
    let delta = x.infinitesimal_part();
    let order = if delta.is_zero() {
        0
    } else {
        order_for_floor(x.floor().ok_or(GrossError::MissingTruncationFloor)?)
    };
    let a = spec.coefficients(c0, order)?;

    let mut acc = GrossNumber::from_finite(a[order])?;
    for &coef in a[..order].iter().rev() {
        acc = acc.mul(&delta)?.add(&GrossNumber::from_finite(coef)?)?;
    }
    Ok(match x.floor() {
        Some(f) => acc.truncate(f),
        None => acc,
    })
}

pub fn g_sin(x: &GrossNumber) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Sin, x)
}

pub fn g_cos(x: &GrossNumber) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Cos, x)
}

pub fn g_exp(x: &GrossNumber) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Exp, x)
}

pub fn g_ln(x: &GrossNumber) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Ln, x)
}

pub fn g_sqrt(x: &GrossNumber) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Sqrt, x)
}

pub fn g_recip(x: &GrossNumber) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Recip, x)
}

pub fn g_powf(x: &GrossNumber, r: f64) -> Result<GrossNumber, GrossError> {
    taylor_apply(&Elementary::Powf(r), x)
}

/// Number of infinitesimal orders kept above `floor`.
pub fn order_for_floor(floor: GrossPower) -> usize {
    (-floor).floor_integer().max(0) as usize
}
