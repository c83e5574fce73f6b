//! Table and JSON rendering.

use grossone::deriv::{BaselineMethod, DerivativeResult};
use grossone::fmt::format_human;
use grossone::GrossNumber;
use serde::{Serialize, Serializer};

/// A JSON number: integral values print as integers, everything else in
/// the shortest form that parses back to the same `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        const EXACT: f64 = 9_007_199_254_740_992.0; // 2^53
        if self.0 == self.0.trunc() && self.0.abs() <= EXACT {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_f64(self.0)
        }
    }
}

fn nums(v: &[f64]) -> Vec<Num> {
    v.iter().copied().map(Num).collect()
}

/// Six decimals in the usual range, as derivative tables are commonly
/// printed; six significant digits for tiny or huge magnitudes.
pub fn table_number(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".into()
    } else if (1e-2..1e9).contains(&a) {
        let s = format!("{v:.6}");
        s.trim_end_matches('0').trim_end_matches('.').into()
    } else {
        format_human(v)
    }
}

/// `f`, `f′`, `f″`, `f‴`, `f⁽⁴⁾`, …
pub fn derivative_label(j: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    match j {
        0 => "f".into(),
        1 => "f′".into(),
        2 => "f″".into(),
        3 => "f‴".into(),
        _ => {
            let digits: String = j
                .to_string()
                .chars()
                .map(|c| SUP[c.to_digit(10).unwrap() as usize])
                .collect();
            format!("f⁽{digits}⁾")
        }
    }
}

fn pad(s: &str, width: usize) -> String {
    let n = s.chars().count();
    format!("{s}{}", " ".repeat(width.saturating_sub(n)))
}

#[derive(Serialize)]
pub struct DiffRecord {
    y: Num,
    order: u32,
    derivatives: Vec<Num>,
    coefficients: Vec<Num>,
    warnings: Vec<String>,
}

impl From<&DerivativeResult> for DiffRecord {
    fn from(r: &DerivativeResult) -> Self {
        DiffRecord {
            y: Num(r.y),
            order: r.order,
            derivatives: nums(&r.derivatives),
            coefficients: nums(&r.coefficients),
            warnings: r.warnings.iter().map(|w| w.to_string()).collect(),
        }
    }
}

pub fn diff_table(r: &DerivativeResult) -> String {
    let mut out = format!("x = {}\n", table_number(r.y));
    let values: Vec<String> = r.derivatives.iter().map(|&d| table_number(d)).collect();
    let width = values.iter().map(|s| s.len()).max().unwrap_or(0);
    for (j, (d, c)) in values.iter().zip(&r.coefficients).enumerate() {
        out += &format!(
            "  {} = {}   coefficient {}\n",
            pad(&derivative_label(j), 6),
            pad(d, width),
            table_number(*c)
        );
    }
    for w in &r.warnings {
        out += &format!("  warning: {w}\n");
    }
    out
}

#[derive(Serialize)]
#[serde(tag = "domain", rename_all = "lowercase")]
pub enum EvalRecord {
    Real {
        y: Num,
        value: Num,
    },
    Complex {
        y: Num,
        re: Num,
        im: Num,
    },
    Gross {
        y: Num,
        order: u32,
        value: GrossNumber,
    },
}

pub fn eval_table(r: &EvalRecord) -> String {
    match r {
        EvalRecord::Real { y, value } => {
            format!("f({}) = {}\n", table_number(y.0), table_number(value.0))
        }
        EvalRecord::Complex { y, re, im } => {
            let sign = if im.0.is_sign_negative() { '-' } else { '+' };
            format!(
                "f({}) = {} {sign} {}i\n",
                table_number(y.0),
                table_number(re.0),
                table_number(im.0.abs())
            )
        }
        EvalRecord::Gross { y, value, .. } => format!(
            "f({} + ①⁻¹) = {}\n",
            table_number(y.0),
            value.to_text(grossone::DigitStyle::Human)
        ),
    }
}

#[derive(Serialize)]
pub struct CoeffsRecord {
    pub y: Num,
    pub order: u32,
    pub numeral: GrossNumber,
}

#[derive(Serialize)]
pub struct CompareRow {
    pub h: Num,
    pub forward: Option<Num>,
    pub backward: Option<Num>,
    pub central: Option<Num>,
    pub complex_step: Option<Num>,
}

impl CompareRow {
    pub fn get(&self, m: BaselineMethod) -> Option<Num> {
        match m {
            BaselineMethod::Forward => self.forward,
            BaselineMethod::Backward => self.backward,
            BaselineMethod::Central => self.central,
            BaselineMethod::ComplexStep => self.complex_step,
        }
    }
}

/// Absolute errors of each baseline against the grossone first derivative.
#[derive(Serialize)]
pub struct CompareRecord {
    pub y: Num,
    pub derivative: Num,
    pub grossone_error: Num,
    pub rows: Vec<CompareRow>,
}

pub fn compare_table(r: &CompareRecord) -> String {
    let mut out = format!(
        "x = {}, grossone f′ = {} (error 0)\n",
        table_number(r.y.0),
        format_human(r.derivative.0)
    );
    let head: Vec<&str> = BaselineMethod::ALL.iter().map(|m| m.name()).collect();
    out += &format!("  {}", pad("h", 8));
    for h in &head {
        out += &format!("  {}", pad(h, 12));
    }
    out += "  grossone\n";
    for row in &r.rows {
        out += &format!("  {}", pad(&format_human(row.h.0), 8));
        for m in BaselineMethod::ALL {
            let cell = row.get(m).map_or("-".to_string(), |e| format_human(e.0));
            out += &format!("  {}", pad(&cell, 12));
        }
        out += "  0\n";
    }
    out
}

#[derive(Serialize)]
pub struct RootRecord {
    pub a: Num,
    pub b: Num,
    pub root: Option<Num>,
}

pub fn root_table(r: &RootRecord) -> String {
    match r.root {
        // the root is the point of the command, so keep every digit
        Some(x) => format!("root = {}\n", grossone::fmt::format_machine(x.0)),
        None => format!(
            "no sign change on the grid over [{}, {}]\n",
            table_number(r.a.0),
            table_number(r.b.0)
        ),
    }
}
