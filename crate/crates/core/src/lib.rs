//! Numerals built on the infinite unit `①` and its use for exact
//! differentiation.
//!
//! - [`number`]: grossnumbers, their arithmetic, order and text form.
//! - [`elem`]: elementary functions lifted by Taylor composition.
//! - [`expr`]: a one-variable expression language evaluated over any
//!   [`NumericDomain`].
//! - [`deriv`]: derivatives from one evaluation at `y + ①⁻¹`, plus
//!   step-based baselines and root finding.

#[cfg(doctest)]
mod book;
pub mod deriv;
pub mod elem;
pub mod error;
pub mod expr;
pub mod fmt;
pub mod number;

pub use error::GrossError;
pub use expr::{eval, parse, Expr, NumericDomain};
pub use number::{
    combine_floors, DigitStyle, EvalConfig, GrossDigit, GrossNumber, GrossPower, Term,
};
