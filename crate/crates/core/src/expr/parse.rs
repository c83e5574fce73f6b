use std::fmt;

use thiserror::Error;

use super::{BinOp, Exponent, Expr, ExprKind, Func, Span};

/// First offending token of a malformed expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at byte {}: expected {}, found {}",
            self.offset, self.expected, self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number { value: f64, integer: bool },
    X,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number { .. } => "number".into(),
            Tok::X => "'x'".into(),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, Span::new(i, i + 1)));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == b'.' {
            let (tok, end) = lex_number(text, start)?;
            out.push((tok, Span::new(start, end)));
            i = end;
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            let tok = if word == "x" {
                Tok::X
            } else {
                Tok::Ident(word.to_string())
            };
            out.push((tok, Span::new(start, i)));
        } else {
            let ch = text[start..].chars().next().unwrap();
            return Err(ParseError {
                offset: start,
                expected: "expression".into(),
                found: format!("character {ch:?}"),
            });
        }
    }
    out.push((Tok::End, Span::new(text.len(), text.len())));
    Ok(out)
}

fn lex_number(text: &str, start: usize) -> Result<(Tok, usize), ParseError> {
    let bytes = text.as_bytes();
    let digits = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    let mut i = digits(start);
    let mut integer = true;
    let int_digits = i > start;
    let mut frac_digits = false;
    if i < bytes.len() && bytes[i] == b'.' {
        integer = false;
        let j = digits(i + 1);
        frac_digits = j > i + 1;
        i = j;
    }
    if !int_digits && !frac_digits {
        return Err(ParseError {
            offset: start,
            expected: "digits".into(),
            found: "'.'".into(),
        });
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        let k = digits(j);
        if k == j {
            return Err(ParseError {
                offset: j.min(text.len()),
                expected: "exponent digits".into(),
                found: describe_at(text, j),
            });
        }
        integer = false;
        i = k;
    }
    let value: f64 = text[start..i].parse().map_err(|_| ParseError {
        offset: start,
        expected: "number".into(),
        found: format!("{:?}", &text[start..i]),
    })?;
    if !value.is_finite() {
        return Err(ParseError {
            offset: start,
            expected: "finite number".into(),
            found: text[start..i].to_string(),
        });
    }
    Ok((Tok::Number { value, integer }, i))
}

fn describe_at(text: &str, i: usize) -> String {
    match text[i.min(text.len())..].chars().next() {
        Some(c) => format!("character {c:?}"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.span().start,
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Span, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.error(tok.describe()))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut node = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(node),
            };
            self.bump();
            let rhs = self.term()?;
            node = binary(op, node, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut node = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(node),
            };
            self.bump();
            let rhs = self.unary()?;
            node = binary(op, node, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let (_, s) = self.bump();
            let inner = self.unary()?;
            let span = s.join(inner.span);
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let (tok, s) = (self.peek().clone(), self.span());
        let Tok::Number { value, integer } = tok else {
            return Err(self.error("numeric exponent"));
        };
        self.bump();
        let value = if negative { -value } else { value };
        let exponent = if integer {
            if value.abs() > i32::MAX as f64 {
                return Err(ParseError {
                    offset: s.start,
                    expected: "integer exponent within 32-bit range".into(),
                    found: format!("{value}"),
                });
            }
            Exponent::Int(value as i32)
        } else {
            Exponent::Real(value)
        };
        let span = base.span.join(s);
        Ok(Expr {
            kind: ExprKind::Pow(Box::new(base), exponent),
            span,
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, s) = (self.peek().clone(), self.span());
        match tok {
            Tok::Number { value, .. } => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Constant(value),
                    span: s,
                })
            }
            Tok::X => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Variable,
                    span: s,
                })
            }
            Tok::Ident(name) => {
                let Some(f) = Func::from_name(&name) else {
                    let valid: Vec<_> = Func::ALL.iter().map(|f| f.name()).collect();
                    return Err(ParseError {
                        offset: s.start,
                        expected: format!("'x' or one of the functions {}", valid.join(", ")),
                        found: format!("unknown identifier '{name}'"),
                    });
                };
                self.bump();
                self.expect(Tok::LParen)?;
                let arg = self.expr()?;
                let close = self.expect(Tok::RParen)?;
                Ok(Expr {
                    kind: ExprKind::Call(f, Box::new(arg)),
                    span: s.join(close),
                })
            }
            Tok::LParen => {
                self.bump();
                let mut inner = self.expr()?;
                let close = self.expect(Tok::RParen)?;
                inner.span = s.join(close);
                Ok(inner)
            }
            _ => Err(self.error("number, 'x', function call or '('")),
        }
    }
}

fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
    let span = l.span.join(r.span);
    Expr {
        kind: ExprKind::Binary(op, Box::new(l), Box::new(r)),
        span,
    }
}

/// Parses one expression in the variable `x`.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Expr {
        Expr::var()
    }

    fn c(v: f64) -> Expr {
        Expr::constant(v)
    }

    #[test]
    fn reference_expressions() {
        assert_eq!(
            parse("x*x*x").unwrap(),
            Expr::binary(BinOp::Mul, Expr::binary(BinOp::Mul, x(), x()), x())
        );
        assert_eq!(
            parse("x + sin(x)").unwrap(),
            Expr::binary(BinOp::Add, x(), Expr::call(Func::Sin, x()))
        );
        assert_eq!(
            parse("(x*x+1)/x").unwrap(),
            Expr::binary(
                BinOp::Div,
                Expr::binary(BinOp::Add, Expr::binary(BinOp::Mul, x(), x()), c(1.0)),
                x()
            )
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("x - 1 - 2").unwrap(),
            Expr::binary(BinOp::Sub, Expr::binary(BinOp::Sub, x(), c(1.0)), c(2.0))
        );
        assert_eq!(
            parse("x / 2 * 3").unwrap(),
            Expr::binary(BinOp::Mul, Expr::binary(BinOp::Div, x(), c(2.0)), c(3.0))
        );
        assert_eq!(
            parse("-x^2").unwrap(),
            Expr::neg(Expr::pow(x(), Exponent::Int(2)))
        );
        assert_eq!(
            parse("2 * -x").unwrap(),
            Expr::binary(BinOp::Mul, c(2.0), Expr::neg(x()))
        );
        assert_eq!(
            parse("x^-1.5").unwrap(),
            Expr::pow(x(), Exponent::Real(-1.5))
        );
        assert_eq!(parse("x^2.0").unwrap(), Expr::pow(x(), Exponent::Real(2.0)));
        assert_eq!(
            parse("x^1e1").unwrap(),
            Expr::pow(x(), Exponent::Real(10.0))
        );
    }

    #[test]
    fn numbers() {
        assert_eq!(parse("1.5e-3").unwrap(), c(1.5e-3));
        assert_eq!(parse(".25").unwrap(), c(0.25));
        assert_eq!(parse("3.").unwrap(), c(3.0));
        assert_eq!(parse("2E+2").unwrap(), c(200.0));
        assert!(parse("1e").is_err());
        assert!(parse(".").is_err());
        assert!(parse("1e999").is_err());
    }

    #[test]
    fn spans_cover_source() {
        let e = parse("  sin( x )*2").unwrap();
        assert_eq!(e.span, Span::new(2, 12));
        let ExprKind::Binary(_, l, _) = &e.kind else {
            panic!()
        };
        assert_eq!(l.span, Span::new(2, 10));
    }

    #[test]
    fn error_positions() {
        let err = parse("x + * 2").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.found, "'*'");

        let err = parse("tan(x)").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.expected.contains("sin, cos, exp, ln, sqrt"));
        assert!(err.found.contains("tan"));

        let err = parse("y + 1").unwrap_err();
        assert!(err.found.contains("'y'"));

        let err = parse("(x + 1").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.found, "end of input");

        let err = parse("x ^ x").unwrap_err();
        assert_eq!(err.offset, 4);

        let err = parse("x x").unwrap_err();
        assert_eq!(err.offset, 2);

        let err = parse("x # 2").unwrap_err();
        assert_eq!(err.offset, 2);

        let err = parse("").unwrap_err();
        assert_eq!(err.offset, 0);

        let err = parse("x^2^3").unwrap_err();
        assert_eq!(err.offset, 3);

        let err = parse("x^99999999999").unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn error_offset_within_bounds() {
        for s in ["", "x+", "sin", "sin(", "((", "1e+", "é"] {
            let err = parse(s).unwrap_err();
            assert!(err.offset <= s.len() + 1, "{s}: {err}");
        }
    }
}
