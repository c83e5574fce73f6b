//! The `gross` command: parse an expression, differentiate it exactly and
//! print tables or JSON.
//!
//! [`run`] takes the arguments and output streams explicitly so the whole
//! command can be driven from tests. Exit codes: 0 on success, 1 when an
//! evaluation fails, 2 for usage and parse errors.

mod args;
mod render;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;
use grossone::deriv::{
    default_h_grid, differentiate, evaluate_at_seed, minimal_root_scan_with, BaselineMethod,
    DerivError,
};
use grossone::expr::{ComplexDomain, GrossDomain, RealDomain, Span};
use grossone::{eval, parse, Expr};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use args::{Carrier, Cli, Command, Source};
pub use args::{Format, GRAMMAR};
use render::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs `gross` with `args` (including the program name). `env_format` is
/// the value of `GROSS_FORMAT`, the default for `--format`.
pub fn run<I, T>(args: I, env_format: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    // a failed write (closed pipe) has nowhere left to be reported
    run_inner(args, env_format, out, err).unwrap_or(EXIT_EVAL)
}

/// A failure with its exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("{}\n\n{GRAMMAR}", message.into()),
        }
    }
}

type Outcome = io::Result<Result<(), Failure>>;

fn run_inner<I, T>(
    args: I,
    env_format: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            write!(out, "{}", e.render())?;
            return Ok(EXIT_OK);
        }
        Err(e) => {
            writeln!(err, "{}\n{GRAMMAR}", e.render())?;
            return Ok(EXIT_USAGE);
        }
    };
    let default_format = match env_format.map(str::trim) {
        None | Some("") => Format::Table,
        Some(s) if s.eq_ignore_ascii_case("table") => Format::Table,
        Some(s) if s.eq_ignore_ascii_case("json") => Format::Json,
        Some(s) => {
            writeln!(err, "error: GROSS_FORMAT must be table or json, got {s:?}")?;
            return Ok(EXIT_USAGE);
        }
    };
    match dispatch(cli.command, default_format, out)? {
        Ok(()) => Ok(EXIT_OK),
        Err(f) => {
            writeln!(err, "{}", f.message)?;
            Ok(f.code)
        }
    }
}

fn load(source: &Source) -> Result<(String, Expr), Failure> {
    let text = match (&source.expr, &source.expr_file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("error: cannot read {}: {e}", path.display())))?
            .trim()
            .to_string(),
        (None, None) => {
            return Err(Failure::usage(
                "error: one of --expr or --expr-file is required",
            ))
        }
    };
    match parse(&text) {
        Ok(e) => Ok((text, e)),
        Err(e) => {
            let caret = Span::new(e.offset, e.offset + 1);
            Err(Failure::usage(format!(
                "error: parse error {e}\n{}",
                underline(&text, caret)
            )))
        }
    }
}

/// The source line with `span` marked underneath.
fn underline(text: &str, span: Span) -> String {
    let start = text
        .get(..span.start)
        .map_or(text.chars().count(), |s| s.chars().count());
    let len = text
        .get(span.start..span.end)
        .map_or(1, |s| s.chars().count().max(1));
    format!("  {text}\n  {}{}", " ".repeat(start), "^".repeat(len))
}

fn eval_failure(text: &str, y: Option<f64>, e: &DerivError) -> String {
    let at = y.map_or(String::new(), |y| format!(" at x = {}", table_number(y)));
    match e {
        DerivError::Evaluation(ev) => {
            format!("error{at}: {}\n{}", ev.source, underline(text, ev.span))
        }
        other => format!("error{at}: {other}"),
    }
}

fn json<R: Serialize>(r: &R) -> String {
    let mut s = serde_json::to_string(r).expect("records serialize");
    s.push('\n');
    s
}

/// Evaluates every point in parallel and prints the records in input
/// order. Failed points are reported after the successful ones.
fn per_point<R, F>(
    text: &str,
    points: &[f64],
    format: Format,
    out: &mut dyn Write,
    compute: F,
    render: fn(&R, Format) -> String,
) -> Outcome
where
    R: Send,
    F: Fn(f64) -> Result<R, DerivError> + Sync,
{
    let results: Vec<_> = points.par_iter().map(|&y| compute(y)).collect();
    let mut failures = Vec::new();
    let mut first = true;
    for (&y, r) in points.iter().zip(results) {
        match r {
            Ok(rec) => {
                if !first && format == Format::Table {
                    writeln!(out)?;
                }
                first = false;
                out.write_all(render(&rec, format).as_bytes())?;
            }
            Err(e) => failures.push(eval_failure(text, Some(y), &e)),
        }
    }
    Ok(if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_EVAL,
            message: failures.join("\n"),
        })
    })
}

fn dispatch(command: Command, default_format: Format, out: &mut dyn Write) -> Outcome {
    let source = match &command {
        Command::Diff(a) => &a.source,
        Command::Eval(a) => &a.source,
        Command::Coeffs(a) => &a.source,
        Command::Compare(a) => &a.source,
        Command::Root(a) => &a.source,
    };
    let (text, e) = match load(source) {
        Ok(v) => v,
        Err(f) => return Ok(Err(f)),
    };
    let fmt = |o: &args::Output| o.format.unwrap_or(default_format);

    match command {
        Command::Diff(a) => per_point(
            &text,
            &a.at,
            fmt(&a.output),
            out,
            |y| differentiate(&e, y, a.order),
            |r, f| match f {
                Format::Json => json(&DiffRecord::from(r)),
                Format::Table => diff_table(r),
            },
        ),
        Command::Eval(a) => per_point(
            &text,
            &a.at,
            fmt(&a.output),
            out,
            |y| evaluate_in(&e, y, a.domain, a.order),
            |r, f| match f {
                Format::Json => json(r),
                Format::Table => eval_table(r),
            },
        ),
        Command::Coeffs(a) => per_point(
            &text,
            &a.at,
            fmt(&a.output),
            out,
            |y| {
                Ok(CoeffsRecord {
                    y: Num(y),
                    order: a.order,
                    numeral: evaluate_at_seed(&e, y, a.order, &GrossDomain::new())?,
                })
            },
            |r, f| match f {
                Format::Json => json(r),
                Format::Table => format!("{}\n", r.numeral),
            },
        ),
        Command::Compare(a) => {
            let grid = a.h_grid.clone().unwrap_or_else(default_h_grid);
            if let Some(h) = grid.iter().find(|h| !(h.is_finite() && **h > 0.0)) {
                return Ok(Err(Failure::usage(format!(
                    "error: --h-grid steps must be positive and finite, got {h}"
                ))));
            }
            per_point(
                &text,
                &[a.at],
                fmt(&a.output),
                out,
                |y| compare(&e, y, &grid),
                |r, f| match f {
                    Format::Json => json(r),
                    Format::Table => compare_table(r),
                },
            )
        }
        Command::Root(a) => {
            let record =
                minimal_root_scan_with(&e, a.a, a.b, a.grid_n, a.tol, a.max_iter).map(|root| {
                    RootRecord {
                        a: Num(a.a),
                        b: Num(a.b),
                        root: root.map(Num),
                    }
                });
            match record {
                Ok(r) => {
                    let s = match fmt(&a.output) {
                        Format::Json => json(&r),
                        Format::Table => root_table(&r),
                    };
                    out.write_all(s.as_bytes())?;
                    Ok(Ok(()))
                }
                Err(DerivError::PreconditionViolated(m)) => {
                    Ok(Err(Failure::usage(format!("error: {m}"))))
                }
                Err(err) => Ok(Err(Failure {
                    code: EXIT_EVAL,
                    message: eval_failure(&text, None, &err),
                })),
            }
        }
    }
}

fn evaluate_in(e: &Expr, y: f64, carrier: Carrier, order: u32) -> Result<EvalRecord, DerivError> {
    if !y.is_finite() {
        return Err(DerivError::NonFinitePoint(y));
    }
    Ok(match carrier {
        Carrier::Real => EvalRecord::Real {
            y: Num(y),
            value: Num(eval(e, &y, &RealDomain)?),
        },
        Carrier::Complex => {
            let z = eval(e, &Complex64::new(y, 0.0), &ComplexDomain)?;
            EvalRecord::Complex {
                y: Num(y),
                re: Num(z.re),
                im: Num(z.im),
            }
        }
        Carrier::Gross => EvalRecord::Gross {
            y: Num(y),
            order,
            value: evaluate_at_seed(e, y, order, &GrossDomain::new())?,
        },
    })
}

fn compare(e: &Expr, y: f64, grid: &[f64]) -> Result<CompareRecord, DerivError> {
    let exact = differentiate(e, y, 1)?.derivatives[1];
    let error = |m: BaselineMethod, h| {
        m.estimate(e, y, h)
            .ok()
            .map(|r| Num((r.estimate - exact).abs()))
    };
    let rows = grid
        .iter()
        .map(|&h| CompareRow {
            h: Num(h),
            forward: error(BaselineMethod::Forward, h),
            backward: error(BaselineMethod::Backward, h),
            central: error(BaselineMethod::Central, h),
            complex_step: error(BaselineMethod::ComplexStep, h),
        })
        .collect();
    Ok(CompareRecord {
        y: Num(y),
        derivative: Num(exact),
        grossone_error: Num(0.0),
        rows,
    })
}
