//! Catalan numbers of the second kind, `C_n(a, b) = [x^n] 1/(a + sqrt(b - x))`.
//!
//! Every closed form is available, together with the two oracles (the
//! integral and the generating function). The closed forms derived through
//! hypergeometric transformations are usually printed with an extra factor
//! of pi relative to the generating function; [`Normalization`] selects
//! which convention they are evaluated in.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exact::{binomial, catalan, double_factorial, factorial, to_f64, BigInt, ExactRational};
use crate::hyper::{assoc_legendre_p, jacobi_p, pfq_auto, pfq_series, HypTermination};
use crate::quad::{integrate_halfline, HalflineIntegrand, QuadResult};
use crate::series::{gf_catalan2, Gf2Series};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C2Params {
    pub a: f64,
    pub b: f64,
    pub n: u32,
}

impl C2Params {
    pub fn new(a: f64, b: f64, n: u32) -> Result<Self> {
        if !(a >= 0.0 && a.is_finite()) {
            return domain(format!("a = {a} must be finite and >= 0"));
        }
        if !(b > 0.0 && b.is_finite()) {
            return domain(format!("b = {b} must be finite and > 0"));
        }
        Ok(C2Params { a, b, n })
    }
}

/// Overall constant of the hypergeometric closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Consistent with the generating function and the `1/pi` integral: `C_0 = 1/(a + sqrt(b))`.
    #[default]
    GeneratingFunction,
    /// The closed forms as printed, carrying an extra factor `pi`.
    PrintedPi,
}

impl Normalization {
    pub fn factor(self) -> f64 {
        match self {
            Normalization::GeneratingFunction => 1.0,
            Normalization::PrintedPi => PI,
        }
    }
}

/// The two published associated-Legendre forms of `C_n(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LegendreVariant {
    /// `C_n (a/(2 sqrt b))^n Gamma(n+2) / (sqrt b - a)^(2n+1) P^{-n-1}_{n-1}(a/sqrt b)`; carries no pi.
    SqrtDifference,
    /// `K C_n / (2 sqrt b)^n Gamma(n+2) / sqrt(b - a^2)^(n+1) P^{-n-1}_{n-1}(a/sqrt b)`.
    SqrtDiscriminant,
}

pub(crate) fn catalan_f64(n: u32) -> f64 {
    catalan(n).to_f64().unwrap_or(f64::INFINITY)
}

fn ratio_f64(num: BigInt, den: BigInt) -> f64 {
    to_f64(&ExactRational::new(num, den))
}

/// Double-factorial sum
/// `1/((2n)!! b^(n+1/2)) sum_k binom(2n-k-1, 2(n-k)) k! [2(n-k)-1]!! / (1 + a/sqrt b)^(k+1)`.
pub fn c2_double_factorial_sum(p: &C2Params) -> f64 {
    double_factorial_sum_with(p, |m| double_factorial(m).expect("m >= -1"))
}

/// Same sum with a caller-supplied double factorial (used to mutation-test the convention).
pub(crate) fn double_factorial_sum_with(p: &C2Params, dfact: impl Fn(i64) -> BigInt) -> f64 {
    let n = p.n as i64;
    let sb = p.b.sqrt();
    let base = 1.0 + p.a / sb;
    let outer = dfact(2 * n);
    let sum: f64 = (0..=n)
        .map(|k| {
            let int_part = binomial(2 * n - k - 1, 2 * (n - k)) * factorial(k as u32) * dfact(2 * (n - k) - 1);
            ratio_f64(int_part, outer.clone()) / base.powi(k as i32 + 1)
        })
        .sum();
    sum / p.b.powf(n as f64 + 0.5)
}

/// `(1/pi) int_0^inf sqrt(t) / ((a^2 + t)(b + t)^(n+1)) dt`. Needs `a > 0`.
pub fn c2_quadrature(p: &C2Params, tol: f64) -> Result<QuadResult> {
    if !(p.a > 0.0) {
        return domain("quadrature needs a > 0 (the integrand has a pole at t = 0 when a = 0)");
    }
    let (a2, b, n1) = (p.a * p.a, p.b, p.n as i32 + 1);
    let g = HalflineIntegrand::new(
        move |t: f64| t.sqrt() / ((a2 + t) * (b + t).powi(n1)),
        0.5,
        p.n as f64 + 1.5,
    )?;
    let q = integrate_halfline(&g, tol)?;
    Ok(QuadResult {
        value: q.value / PI,
        abs_err_est: q.abs_err_est / PI,
        evaluations: q.evaluations,
    })
}

/// Terminating form
/// `K C_n / (2 sqrt b)^n (a + sqrt b)^(-n-1) 2F1(1-n, n; n+2; (sqrt b - a)/(2 sqrt b))`.
///
/// At `n = 0` the second upper parameter is zero and the series is 1.
pub fn c2_hyp_closed(p: &C2Params, norm: Normalization) -> Result<f64> {
    let n = p.n as f64;
    let sb = p.b.sqrt();
    let f = pfq_auto(&[1.0 - n, n], &[n + 2.0], (sb - p.a) / (2.0 * sb))?;
    Ok(catalan_f64(p.n) * norm.factor() / (2.0 * sb).powi(p.n as i32) / (p.a + sb).powi(p.n as i32 + 1) * f)
}

/// Non-terminating form `K C_n / 2^(2n+1) b^(1/2-n) / a^2 2F1(1, 3/2; n+2; 1 - b/a^2)`,
/// defined only inside the disc `|1 - b/a^2| < 1`.
pub fn c2_hyp_unbounded(p: &C2Params, norm: Normalization) -> Result<f64> {
    if !(p.a > 0.0) {
        return domain("non-terminating form needs a > 0");
    }
    let z = 1.0 - p.b / (p.a * p.a);
    let n = p.n as f64;
    let f = pfq_series(&[1.0, 1.5], &[n + 2.0], z, HypTermination::DEFAULT_CONVERGENT)?;
    Ok(catalan_f64(p.n) * norm.factor() / 2f64.powi(2 * p.n as i32 + 1) * p.b.powf(0.5 - n) / (p.a * p.a) * f)
}

/// Jacobi form `K / (n (2 sqrt b)^n) (a + sqrt b)^(-n-1) P_{n-1}^(n+1, -n-1)(a / sqrt b)`, `n >= 1`.
pub fn c2_jacobi(p: &C2Params, norm: Normalization) -> Result<f64> {
    if p.n == 0 {
        return domain("Jacobi form divides by n and needs n >= 1");
    }
    let n = p.n as f64;
    let sb = p.b.sqrt();
    let jac = jacobi_p(p.n as usize - 1, n + 1.0, -n - 1.0, p.a / sb)?;
    Ok(norm.factor() / (n * (2.0 * sb).powi(p.n as i32)) / (p.a + sb).powi(p.n as i32 + 1) * jac)
}

/// Associated Legendre forms, evaluated exactly as printed. Needs `0 < a < sqrt b`
/// and `n >= 1`. [`LegendreVariant::SqrtDifference`] ignores `norm`.
pub fn c2_legendre(p: &C2Params, norm: Normalization, variant: LegendreVariant) -> Result<f64> {
    let sb = p.b.sqrt();
    if !(p.a > 0.0 && p.a < sb) {
        return domain("Legendre forms need 0 < a < sqrt(b)");
    }
    if p.n == 0 {
        return domain("Legendre forms need n >= 1");
    }
    let n = p.n as f64;
    let x = p.a / sb;
    let legendre = assoc_legendre_p(n - 1.0, -n - 1.0, x)?;
    let cn = catalan_f64(p.n);
    let gamma = crate::quad::gamma_ratio(&[n + 2.0], &[]);
    Ok(match variant {
        LegendreVariant::SqrtDifference => {
            cn * (p.a / (2.0 * sb)).powi(p.n as i32) * gamma / (sb - p.a).powi(2 * p.n as i32 + 1) * legendre
        }
        LegendreVariant::SqrtDiscriminant => {
            cn * norm.factor() / (2.0 * sb).powi(p.n as i32) * gamma / (p.b - p.a * p.a).sqrt().powi(p.n as i32 + 1)
                * legendre
        }
    })
}

/// Coefficient of `x^n` in `1/(a + sqrt(b - x))`, with the exact rational
/// value when `a` and `sqrt b` are rational.
pub fn c2_gf_coefficient(p: &C2Params) -> Result<(f64, Option<ExactRational>)> {
    let s = gf_catalan2(p.a, p.b, p.n as usize + 1)?;
    let exact = match &s {
        Gf2Series::Exact(e) => Some(e.coeff(p.n as usize).clone()),
        Gf2Series::Real(_) => None,
    };
    Ok((s.coeff_f64(p.n as usize), exact))
}

/// The six tabulated closed forms `C_0 .. C_5`, with their factor `pi`.
///
/// The `C_4` entry's denominator is `128 (a + sqrt b)^5 b^(7/2)`; the `b` is
/// easily lost in typeset copies of the table.
pub fn c2_table_printed(n: u32, a: f64, b: f64) -> Option<f64> {
    let s = b.sqrt();
    let apb = a + s;
    let v = match n {
        0 => 1.0 / apb,
        1 => 1.0 / (2.0 * apb.powi(2) * s),
        2 => (a + 3.0 * s) / (8.0 * apb.powi(3) * b.powf(1.5)),
        3 => (a * a + 4.0 * a * s + 5.0 * b) / (16.0 * apb.powi(4) * b.powf(2.5)),
        4 => {
            (5.0 * a.powi(3) + 25.0 * a * a * s + 47.0 * a * b + 35.0 * b.powf(1.5))
                / (128.0 * apb.powi(5) * b.powf(3.5))
        }
        5 => {
            (7.0 * a.powi(4) + 42.0 * a.powi(3) * s + 102.0 * a * a * b + 122.0 * a * b.powf(1.5) + 63.0 * b * b)
                / (256.0 * apb.powi(6) * b.powf(4.5))
        }
        _ => return None,
    };
    Some(PI * v)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub n: u32,
    pub a: f64,
    pub b: f64,
    pub printed: f64,
    pub quadrature: f64,
    /// `printed / quadrature`; pi when the only discrepancy is the normalization.
    pub ratio: f64,
}

pub const TABLE_GRID_A: [f64; 5] = [0.3, 0.5, 1.0, 2.0, 5.0];
pub const TABLE_GRID_B: [f64; 3] = [0.25, 1.0, 4.0];

/// Ratio of every tabulated closed form to the quadrature oracle over the (a, b) grid.
pub fn c2_table_check(max_n: u32, grid_a: &[f64], grid_b: &[f64], tol: f64) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for n in 0..=max_n.min(5) {
        for &a in grid_a {
            for &b in grid_b {
                let printed = c2_table_printed(n, a, b).expect("n <= 5");
                let quadrature = c2_quadrature(&C2Params::new(a, b, n)?, tol)?.value;
                out.push(TableEntry {
                    n,
                    a,
                    b,
                    printed,
                    quadrature,
                    ratio: printed / quadrature,
                });
            }
        }
    }
    Ok(out)
}
