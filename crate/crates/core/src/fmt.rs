//! Digit formatting shared by the text format and the CLI.

/// Shortest round-trip rendering of a binary64 value.
///
/// Integral values print without a fractional part (`125`, not `125.0`);
/// very large or very small magnitudes switch to exponent notation so the
/// output never degenerates into hundreds of zeros. `str::parse::<f64>`
/// recovers the exact value from every output.
pub fn format_machine(v: f64) -> String {
    let a = v.abs();
    if v == v.trunc() && a < 1e16 {
        // -0.0 prints as 0
        format!("{}", v as i64)
    } else if (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Six-significant-digit rendering in the style of C's `%g`.
pub fn format_human(v: f64) -> String {
    format_significant(v, 6)
}

/// `%g`-style rendering with `digits` significant digits.
pub fn format_significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", strip_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_format_is_compact_and_exact() {
        assert_eq!(format_machine(125.0), "125");
        assert_eq!(format_machine(-3.0), "-3");
        assert_eq!(format_machine(-0.0), "0");
        assert_eq!(format_machine(0.5), "0.5");
        assert_eq!(format_machine(1e-100), "1e-100");
        assert_eq!(format_machine(1e300), "1e300");
        for v in [
            10.0 / 3.0,
            -0.012345679012345678,
            2.0 / 27.0,
            1e-7 / 3.0,
            6.02e23,
        ] {
            assert_eq!(format_machine(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn human_format_matches_printf_g() {
        assert_eq!(format_human(10.0 / 3.0), "3.33333");
        assert_eq!(format_human(8.0 / 9.0), "0.888889");
        assert_eq!(format_human(1.0 / 27.0), "0.037037");
        assert_eq!(format_human(-1.0 / 81.0), "-0.0123457");
        assert_eq!(format_human(125.0), "125");
        assert_eq!(format_human(1234567.0), "1.23457e6");
        assert_eq!(format_human(1e-7), "1e-7");
        assert_eq!(format_human(999999.7), "1e6");
    }
}
