use std::fmt;

use super::{BinOp, Exponent, Expr, ExprKind};
use crate::fmt::format_machine;

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn precedence(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Binary(BinOp::Add | BinOp::Sub, ..) => SUM,
        ExprKind::Binary(BinOp::Mul | BinOp::Div, ..) => PRODUCT,
        ExprKind::Neg(_) => UNARY,
        // a negative literal prints with its sign
        ExprKind::Constant(v) if v.is_sign_negative() => UNARY,
        ExprKind::Pow(..) => POWER,
        _ => ATOM,
    }
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Constant(v) => f.write_str(&format_machine(*v)),
            ExprKind::Variable => f.write_str("x"),
            ExprKind::Neg(a) => write!(f, "-{}", Wrapped(a, precedence(a) < UNARY)),
            ExprKind::Call(func, a) => write!(f, "{}({})", func.name(), a),
            ExprKind::Binary(op, l, r) => {
                let p = precedence(self);
                write!(
                    f,
                    "{} {} {}",
                    Wrapped(l, precedence(l) < p),
                    op.symbol(),
                    Wrapped(r, precedence(r) <= p)
                )
            }
            ExprKind::Pow(base, e) => {
                write!(f, "{}^", Wrapped(base, precedence(base) < ATOM))?;
                match e {
                    Exponent::Int(n) => write!(f, "{n}"),
                    // Debug keeps a '.' or an exponent marker, so it reparses as real
                    Exponent::Real(r) => write!(f, "{r:?}"),
                }
            }
        }
    }
}
