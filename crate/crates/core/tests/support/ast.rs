//! Random expression trees for round-trip and coherence checks.

#![allow(dead_code)]

use grossone::expr::{BinOp, Exponent, Func};
use grossone::Expr;
use rand::Rng;

/// Tree of depth at most `depth`. Constants are non-negative: the parser
/// reads a leading minus as negation, so a negative literal cannot come
/// back from text as the same node.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth <= 1 || rng.gen_bool(0.2) {
        return leaf(rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..10) {
        0 => Expr::neg(random_expr(rng, d)),
        1 | 2 => {
            let f = Func::ALL[rng.gen_range(0..Func::ALL.len())];
            Expr::call(f, random_expr(rng, d))
        }
        3 => Expr::pow(random_expr(rng, d), exponent(rng)),
        _ => {
            let op = [BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div][rng.gen_range(0..4)];
            Expr::binary(op, random_expr(rng, d), random_expr(rng, d))
        }
    }
}

fn leaf<R: Rng>(rng: &mut R) -> Expr {
    if rng.gen_bool(0.5) {
        return Expr::var();
    }
    Expr::constant(match rng.gen_range(0..4) {
        0 => rng.gen_range(0..10) as f64,
        1 => rng.gen_range(0.0..10.0),
        2 => rng.gen_range(0.0..1.0) * 10f64.powi(rng.gen_range(-12..20)),
        _ => 0.5,
    })
}

fn exponent<R: Rng>(rng: &mut R) -> Exponent {
    if rng.gen_bool(0.6) {
        Exponent::Int(rng.gen_range(-4..=5))
    } else {
        let r: f64 = rng.gen_range(-3.0..3.0);
        Exponent::Real(if rng.gen_bool(0.3) { r.round() } else { r })
    }
}
