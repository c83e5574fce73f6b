use num_complex::Complex64;

use super::Func;
use crate::elem::{self, Elementary};
use crate::error::GrossError;
use crate::number::{EvalConfig, GrossNumber, GrossPower};

/// A number system an [`Expr`](super::Expr) can be evaluated in.
pub trait NumericDomain {
    type Value: Clone;

    /// Called once at the start of every [`eval`](super::eval).
    fn begin_eval(&self) {}

    fn constant(&self, v: f64) -> Result<Self::Value, GrossError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, GrossError>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, GrossError>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, GrossError>;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, GrossError>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value, GrossError>;
    fn powi(&self, a: &Self::Value, n: i32) -> Result<Self::Value, GrossError>;
    fn powf(&self, a: &Self::Value, r: f64) -> Result<Self::Value, GrossError>;
    fn apply(&self, f: Func, a: &Self::Value) -> Result<Self::Value, GrossError>;
}

fn finite(v: f64, op: &'static str) -> Result<f64, GrossError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(GrossError::NonFinite(op))
    }
}

/// Plain binary64 evaluation.
#[derive(Debug, Clone, Copy, Default)]
pub struct RealDomain;

impl NumericDomain for RealDomain {
    type Value = f64;

    fn constant(&self, v: f64) -> Result<f64, GrossError> {
        finite(v, "constant")
    }

    fn add(&self, a: &f64, b: &f64) -> Result<f64, GrossError> {
        finite(a + b, "+")
    }

    fn sub(&self, a: &f64, b: &f64) -> Result<f64, GrossError> {
        finite(a - b, "-")
    }

    fn mul(&self, a: &f64, b: &f64) -> Result<f64, GrossError> {
        finite(a * b, "*")
    }

    fn div(&self, a: &f64, b: &f64) -> Result<f64, GrossError> {
        if *b == 0.0 {
            return Err(GrossError::DivisionByZero);
        }
        finite(a / b, "/")
    }

    fn neg(&self, a: &f64) -> Result<f64, GrossError> {
        Ok(-a)
    }

    fn powi(&self, a: &f64, n: i32) -> Result<f64, GrossError> {
        if *a == 0.0 && n < 0 {
            return Err(GrossError::DivisionByZero);
        }
        finite(a.powi(n), "^")
    }

    fn powf(&self, a: &f64, r: f64) -> Result<f64, GrossError> {
        let v = a.powf(r);
        if v.is_nan() {
            return Err(GrossError::DomainError {
                function: "pow",
                finite_part: *a,
            });
        }
        finite(v, "^")
    }

    fn apply(&self, f: Func, a: &f64) -> Result<f64, GrossError> {
        let bad = |function| GrossError::DomainError {
            function,
            finite_part: *a,
        };
        let v = match f {
            Func::Sin => a.sin(),
            Func::Cos => a.cos(),
            Func::Exp => a.exp(),
            Func::Ln if *a <= 0.0 => return Err(bad("ln")),
            Func::Ln => a.ln(),
            Func::Sqrt if *a < 0.0 => return Err(bad("sqrt")),
            Func::Sqrt => a.sqrt(),
        };
        finite(v, f.name())
    }
}

/// Complex evaluation with the principal branches of `ln`, `sqrt` and `powf`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexDomain;

fn finite_c(z: Complex64, op: &'static str) -> Result<Complex64, GrossError> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(GrossError::NonFinite(op))
    }
}

/// Division that stays bit-identical to real division on the real axis.
fn complex_div(a: &Complex64, b: &Complex64) -> Complex64 {
    if b.im == 0.0 {
        Complex64::new(a.re / b.re, a.im / b.re)
    } else {
        a / b
    }
}

impl NumericDomain for ComplexDomain {
    type Value = Complex64;

    fn constant(&self, v: f64) -> Result<Complex64, GrossError> {
        finite_c(Complex64::new(v, 0.0), "constant")
    }

    fn add(&self, a: &Complex64, b: &Complex64) -> Result<Complex64, GrossError> {
        finite_c(a + b, "+")
    }

    fn sub(&self, a: &Complex64, b: &Complex64) -> Result<Complex64, GrossError> {
        finite_c(a - b, "-")
    }

    fn mul(&self, a: &Complex64, b: &Complex64) -> Result<Complex64, GrossError> {
        finite_c(a * b, "*")
    }

    fn div(&self, a: &Complex64, b: &Complex64) -> Result<Complex64, GrossError> {
        if b.re == 0.0 && b.im == 0.0 {
            return Err(GrossError::DivisionByZero);
        }
        finite_c(complex_div(a, b), "/")
    }

    fn neg(&self, a: &Complex64) -> Result<Complex64, GrossError> {
        Ok(-a)
    }

    fn powi(&self, a: &Complex64, n: i32) -> Result<Complex64, GrossError> {
        if a.re == 0.0 && a.im == 0.0 && n < 0 {
            return Err(GrossError::DivisionByZero);
        }
        let p = a.powu(n.unsigned_abs());
        let v = if n < 0 {
            complex_div(&Complex64::new(1.0, 0.0), &p)
        } else {
            p
        };
        finite_c(v, "^")
    }

    fn powf(&self, a: &Complex64, r: f64) -> Result<Complex64, GrossError> {
        if a.re == 0.0 && a.im == 0.0 {
            return if r > 0.0 {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                Err(GrossError::DomainError {
                    function: "pow",
                    finite_part: 0.0,
                })
            };
        }
        if a.im == 0.0 && (a.re > 0.0 || r.fract() == 0.0) {
            // real axis, real result: skip the polar form and its rounding
            return finite_c(Complex64::new(a.re.powf(r), 0.0), "^");
        }
        finite_c(a.powf(r), "^")
    }

    fn apply(&self, f: Func, a: &Complex64) -> Result<Complex64, GrossError> {
        let v = match f {
            Func::Sin => a.sin(),
            Func::Cos => a.cos(),
            Func::Exp => a.exp(),
            Func::Ln if a.re == 0.0 && a.im == 0.0 => {
                return Err(GrossError::DomainError {
                    function: "ln",
                    finite_part: 0.0,
                })
            }
            Func::Ln => a.ln(),
            Func::Sqrt => a.sqrt(),
        };
        finite_c(v, f.name())
    }
}

/// Grossnumber evaluation.
///
/// Truncation floors are carried by the values themselves. `default_floor`
/// is used for divisions and negative powers whose operands carry none.
#[derive(Debug, Clone, Copy, Default)]
pub struct GrossDomain {
    pub default_floor: Option<GrossPower>,
}

impl GrossDomain {
    pub fn new() -> Self {
        GrossDomain::default()
    }

    pub fn with_config(config: &EvalConfig) -> Self {
        GrossDomain {
            default_floor: Some(config.floor()),
        }
    }
}

impl NumericDomain for GrossDomain {
    type Value = GrossNumber;

    fn constant(&self, v: f64) -> Result<GrossNumber, GrossError> {
        GrossNumber::from_finite(v)
    }

    fn add(&self, a: &GrossNumber, b: &GrossNumber) -> Result<GrossNumber, GrossError> {
        a.add(b)
    }

    fn sub(&self, a: &GrossNumber, b: &GrossNumber) -> Result<GrossNumber, GrossError> {
        a.sub(b)
    }

    fn mul(&self, a: &GrossNumber, b: &GrossNumber) -> Result<GrossNumber, GrossError> {
        a.mul(b)
    }

    fn div(&self, a: &GrossNumber, b: &GrossNumber) -> Result<GrossNumber, GrossError> {
        a.div(b, self.default_floor)
    }

    fn neg(&self, a: &GrossNumber) -> Result<GrossNumber, GrossError> {
        Ok(a.neg())
    }

    fn powi(&self, a: &GrossNumber, n: i32) -> Result<GrossNumber, GrossError> {
        a.powi(n as i64, self.default_floor)
    }

    fn powf(&self, a: &GrossNumber, r: f64) -> Result<GrossNumber, GrossError> {
        elem::g_powf(a, r)
    }

    fn apply(&self, f: Func, a: &GrossNumber) -> Result<GrossNumber, GrossError> {
        let g = match f {
            Func::Sin => Elementary::Sin,
            Func::Cos => Elementary::Cos,
            Func::Exp => Elementary::Exp,
            Func::Ln => Elementary::Ln,
            Func::Sqrt => Elementary::Sqrt,
        };
        elem::taylor_apply(&g, a)
    }
}
