//! A one-variable expression language.
//!
//! Expressions are parsed once into an [`Expr`] tree and then evaluated in
//! any [`NumericDomain`]: plain reals, complex numbers, or grossnumbers.
//! The same tree therefore serves the finite-difference and complex-step
//! baselines and the grossone derivative readout.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' signed_number)?
//! atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'
//! ident  := sin | cos | exp | ln | sqrt
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. An integer
//! exponent routes to integer powering, anything with a decimal point or an
//! exponent marker routes to the real power function.

mod domain;
mod parse;
mod print;

use std::fmt;

use thiserror::Error;

pub use domain::{ComplexDomain, GrossDomain, NumericDomain, RealDomain};
pub use parse::{parse, ParseError};

use crate::error::GrossError;

/// Byte range of a node in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
}

impl Func {
    pub const ALL: [Func; 5] = [Func::Sin, Func::Cos, Func::Exp, Func::Ln, Func::Sqrt];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

/// Literal right operand of `^`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Int(i32),
    Real(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Constant(f64),
    Variable,
    Neg(Box<Expr>),
    Call(Func, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
}

/// An expression node. Equality is structural and ignores source spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    fn new(kind: ExprKind) -> Expr {
        Expr {
            kind,
            span: Span::default(),
        }
    }

    pub fn constant(v: f64) -> Expr {
        Expr::new(ExprKind::Constant(v))
    }

    pub fn var() -> Expr {
        Expr::new(ExprKind::Variable)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(e: Expr) -> Expr {
        Expr::new(ExprKind::Neg(Box::new(e)))
    }

    pub fn call(f: Func, e: Expr) -> Expr {
        Expr::new(ExprKind::Call(f, Box::new(e)))
    }

    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr::new(ExprKind::Binary(op, Box::new(l), Box::new(r)))
    }

    pub fn pow(base: Expr, e: Exponent) -> Expr {
        Expr::new(ExprKind::Pow(Box::new(base), e))
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + match &self.kind {
            ExprKind::Constant(_) | ExprKind::Variable => 0,
            ExprKind::Neg(e) | ExprKind::Call(_, e) | ExprKind::Pow(e, _) => e.size(),
            ExprKind::Binary(_, l, r) => l.size() + r.size(),
        }
    }

    /// Minimal-parenthesis source text; `parse` maps it back to an equal tree.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// A domain error raised while evaluating, tagged with the node that failed.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{source} (at {span})")]
pub struct EvalError {
    pub span: Span,
    pub source: GrossError,
}

/// Evaluates `e` at the variable value `x` in `domain`.
pub fn eval<D: NumericDomain>(e: &Expr, x: &D::Value, domain: &D) -> Result<D::Value, EvalError> {
    domain.begin_eval();
    eval_node(e, x, domain)
}

fn eval_node<D: NumericDomain>(e: &Expr, x: &D::Value, d: &D) -> Result<D::Value, EvalError> {
    let at = |source: GrossError| EvalError {
        span: e.span,
        source,
    };
    match &e.kind {
        ExprKind::Constant(v) => d.constant(*v).map_err(at),
        ExprKind::Variable => Ok(x.clone()),
        ExprKind::Neg(a) => {
            let a = eval_node(a, x, d)?;
            d.neg(&a).map_err(at)
        }
        ExprKind::Call(f, a) => {
            let a = eval_node(a, x, d)?;
            d.apply(*f, &a).map_err(at)
        }
        ExprKind::Binary(op, l, r) => {
            let l = eval_node(l, x, d)?;
            let r = eval_node(r, x, d)?;
            match op {
                BinOp::Add => d.add(&l, &r),
                BinOp::Sub => d.sub(&l, &r),
                BinOp::Mul => d.mul(&l, &r),
                BinOp::Div => d.div(&l, &r),
            }
            .map_err(at)
        }
        ExprKind::Pow(base, Exponent::Int(n)) => {
            let b = eval_node(base, x, d)?;
            d.powi(&b, *n).map_err(at)
        }
        ExprKind::Pow(base, Exponent::Real(r)) => {
            let b = eval_node(base, x, d)?;
            d.powf(&b, *r).map_err(at)
        }
    }
}
