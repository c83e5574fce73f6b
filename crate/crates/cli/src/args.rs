use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grossone::deriv::MAX_ORDER;

pub const GRAMMAR: &str = "\
expression grammar (one variable, x):
  expr   := term (('+' | '-') term)*
  term   := unary (('*' | '/') unary)*
  unary  := '-' unary | power
  power  := atom ('^' ['-' | '+'] number)?
  atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
  func   := sin | cos | exp | ln | sqrt
  an exponent written without '.' or 'e' is an integer power";

#[derive(Debug, Parser)]
#[command(
    name = "gross",
    version,
    about = "Exact derivatives from one evaluation at y + ①⁻¹",
    after_help = GRAMMAR
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Value and derivatives up to --order at each point
    Diff(DiffArgs),
    /// Evaluate in one carrier
    Eval(EvalArgs),
    /// Raw numeral produced at y + ①⁻¹
    Coeffs(CoeffsArgs),
    /// First derivative against finite differences and the complex step
    Compare(CompareArgs),
    /// Leftmost root in [a, b] by grid scan and Newton refinement
    Root(RootArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Carrier {
    Real,
    Gross,
    Complex,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Expression text
    #[arg(long, allow_hyphen_values = true)]
    pub expr: Option<String>,
    /// File holding the expression
    #[arg(long)]
    pub expr_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format [default: $GROSS_FORMAT or table]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn order() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(0..=MAX_ORDER as i64)
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    #[command(flatten)]
    pub source: Source,
    /// Points, comma separated
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    pub at: Vec<f64>,
    /// Highest derivative order
    #[arg(long, default_value_t = 3, value_parser = order())]
    pub order: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    pub at: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Carrier::Real)]
    pub domain: Carrier,
    /// Truncation order of the grossnumber carrier
    #[arg(long, default_value_t = 3, value_parser = order())]
    pub order: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    pub at: Vec<f64>,
    #[arg(long, default_value_t = 3, value_parser = order())]
    pub order: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, allow_hyphen_values = true)]
    pub at: f64,
    /// Step sizes, comma separated [default: 1e-1 down to 1e-15 by decades]
    #[arg(long, value_delimiter = ',')]
    pub h_grid: Option<Vec<f64>>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RootArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub b: f64,
    /// Number of grid cells
    #[arg(long, default_value_t = 100)]
    pub grid_n: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Refinement steps after the bracket is found
    #[arg(long, default_value_t = grossone::deriv::DEFAULT_REFINE_STEPS)]
    pub max_iter: usize,
    #[command(flatten)]
    pub output: Output,
}
