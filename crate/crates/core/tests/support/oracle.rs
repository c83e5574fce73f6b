//! Expressions with closed-form derivatives of every order, used as ground
//! truth for the grossone readout. Everything here is written from the
//! calculus identities, independent of the library.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

pub struct Case {
    pub name: &'static str,
    pub expr: &'static str,
    pub points: &'static [f64],
    /// `j`-th derivative at `x`.
    pub derivative: fn(f64, usize) -> f64,
}

fn fact(j: usize) -> f64 {
    (1..=j).map(|i| i as f64).product()
}

/// `r (r-1) … (r-j+1)`
fn falling(r: f64, j: usize) -> f64 {
    (0..j).map(|i| r - i as f64).product()
}

fn sign(j: usize) -> f64 {
    if j.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Physicists' Hermite polynomial `H_n(x)`.
fn hermite(n: usize, x: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, 2.0 * x);
    if n == 0 {
        return h0;
    }
    for k in 1..n {
        let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

pub fn corpus() -> Vec<Case> {
    vec![
        Case {
            name: "cubic",
            expr: "x*x*x",
            points: &[-2.0, -0.5, 0.0, 1.5, 5.0],
            derivative: |x, j| falling(3.0, j) * if j <= 3 { x.powi(3 - j as i32) } else { 0.0 },
        },
        Case {
            name: "rational",
            expr: "(x*x+1)/x",
            points: &[-3.0, -0.75, 0.5, 2.0, 3.0],
            // x + 1/x
            derivative: |x, j| match j {
                0 => x + 1.0 / x,
                1 => 1.0 - x.powi(-2),
                _ => sign(j) * fact(j) * x.powi(-(j as i32) - 1),
            },
        },
        Case {
            name: "lorentzian",
            expr: "1/(1+x*x)",
            points: &[-2.0, -0.3, 0.0, 0.8, 4.0],
            derivative: |x, j| {
                let rho = (1.0 + x * x).sqrt();
                let phi = 1f64.atan2(x);
                sign(j) * fact(j) * ((j + 1) as f64 * phi).sin() / rho.powi(j as i32 + 1)
            },
        },
        Case {
            name: "sin",
            expr: "sin(x)",
            points: &[-1.0, 0.0, 0.5, 2.0, 3.0],
            derivative: |x, j| (x + j as f64 * FRAC_PI_2).sin(),
        },
        Case {
            name: "cos",
            expr: "cos(x)",
            points: &[-1.0, 0.0, 0.5, 2.0, 3.0],
            derivative: |x, j| (x + j as f64 * FRAC_PI_2).cos(),
        },
        Case {
            name: "exp",
            expr: "exp(x)",
            points: &[-2.0, -0.5, 0.0, 1.0, 2.5],
            derivative: |x, _| x.exp(),
        },
        Case {
            name: "ln",
            expr: "ln(x)",
            points: &[0.5, 1.0, 1.5, 3.0, 10.0],
            derivative: |x, j| match j {
                0 => x.ln(),
                _ => sign(j + 1) * fact(j - 1) * x.powi(-(j as i32)),
            },
        },
        Case {
            name: "sqrt",
            expr: "sqrt(x)",
            points: &[0.25, 1.0, 2.0, 4.0, 9.0],
            derivative: |x, j| falling(0.5, j) * x.powf(0.5 - j as f64),
        },
        Case {
            name: "real power",
            expr: "x^2.5",
            points: &[0.5, 1.0, 1.7, 3.0, 4.0],
            derivative: |x, j| falling(2.5, j) * x.powf(2.5 - j as f64),
        },
        Case {
            name: "negative integer power",
            expr: "x^-2",
            points: &[-2.0, -1.0, 0.5, 1.0, 3.0],
            derivative: |x, j| falling(-2.0, j) * x.powi(-2 - j as i32),
        },
        Case {
            name: "scaled sine",
            expr: "sin(2*x+1)",
            points: &[-1.0, 0.0, 0.25, 1.0, 2.0],
            derivative: |x, j| 2f64.powi(j as i32) * (2.0 * x + 1.0 + j as f64 * FRAC_PI_2).sin(),
        },
        Case {
            name: "damped sine",
            expr: "exp(x)*sin(x)",
            points: &[-1.0, 0.0, 0.5, 1.0, 2.0],
            // e^x sin x has j-th derivative 2^(j/2) e^x sin(x + j·π/4)
            derivative: |x, j| {
                2f64.powf(j as f64 / 2.0) * x.exp() * (x + j as f64 * FRAC_PI_2 / 2.0).sin()
            },
        },
        Case {
            name: "gaussian",
            expr: "exp(-x*x)",
            points: &[-1.5, -0.5, 0.0, 0.7, 1.2],
            derivative: |x, j| sign(j) * hermite(j, x) * (-x * x).exp(),
        },
        Case {
            name: "cos squared",
            expr: "cos(x)*cos(x)",
            points: &[-1.0, 0.0, 0.4, 1.0, 2.0],
            // (1 + cos 2x)/2
            derivative: |x, j| match j {
                0 => x.cos().powi(2),
                _ => 2f64.powi(j as i32 - 1) * (2.0 * x + j as f64 * FRAC_PI_2).cos(),
            },
        },
        Case {
            name: "log of quadratic",
            expr: "ln(x*x+x+1)/2 + sqrt(x+1)",
            points: &[0.0, 0.3, 1.0, 2.0, 5.0],
            derivative: |x, j| {
                // ln(x²+x+1) = ln(x-w) + ln(x-w̄), w = e^{2πi/3}; the j-th
                // derivative of ln(x-w) is (-1)^(j+1)(j-1)!/(x-w)^j
                let half = match j {
                    0 => (x * x + x + 1.0).ln() / 2.0,
                    _ => {
                        let (re, im) = (x + 0.5, -(3f64.sqrt()) / 2.0);
                        let r = (re * re + im * im).sqrt();
                        let th = im.atan2(re);
                        // 2·Re[(x-w)^-j] = 2 r^-j cos(jθ)
                        sign(j + 1) * fact(j - 1) * 2.0 * (j as f64 * th).cos()
                            / r.powi(j as i32)
                            / 2.0
                    }
                };
                half + falling(0.5, j) * (x + 1.0).powf(0.5 - j as f64)
            },
        },
    ]
}

/// `|got - want| ≤ tol·max(1, |want|)`
pub fn close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol * want.abs().max(1.0)
}
