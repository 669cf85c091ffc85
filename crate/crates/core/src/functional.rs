//! The Catalan functional
//! `c_n(a,b;p) = (sin(p pi)/pi) int_0^inf t^p / ((a^2 + 2a cos(p pi) t^p + t^(2p)) (b+t)^(n+1)) dt`.
//!
//! At `p = 1/2` it collapses to the Catalan number of the second kind. The
//! series forms use `y = b^p/a` and switch branch at `y = 1`, where only the
//! rational closed form in [`crate::qfunc`] is valid.

use std::f64::consts::PI;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::catalan2::{c2_double_factorial_sum, C2Params};
use crate::error::{domain, Result};
use crate::exact::{binomial, factorial, rising_factorial, to_exact, to_f64, ExactRational};
use crate::hyper::rel_diff;
use crate::qfunc::{q_stirling_exact, sum_pochhammer_series};
use crate::quad::{integrate_halfline, HalflineIntegrand, QuadResult};

/// Relative distance of `b^p/a` from one below which the series are refused.
pub const BOUNDARY_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CFParams {
    pub a: f64,
    pub b: f64,
    pub p: f64,
    pub n: u32,
}

impl CFParams {
    pub fn new(a: f64, b: f64, p: f64, n: u32) -> Result<Self> {
        if !(a.is_finite() && a >= 0.0) {
            return domain(format!("a = {a} must be finite and >= 0"));
        }
        if !(b.is_finite() && b > 0.0) {
            return domain(format!("b = {b} must be finite and > 0"));
        }
        if !(p > 0.0 && p < 1.0) {
            return domain(format!("p = {p} must lie in (0, 1)"));
        }
        Ok(CFParams { a, b, p, n })
    }

    pub fn b_pow_p(&self) -> f64 {
        self.b.powf(self.p)
    }

    /// `y = b^p / a`; infinite at `a = 0`.
    pub fn ratio(&self) -> f64 {
        self.b_pow_p() / self.a
    }

    fn require_positive_a(&self) -> Result<()> {
        if self.a > 0.0 {
            Ok(())
        } else {
            domain("this representation divides by a; needs a > 0")
        }
    }

    /// `a b^n n!`, the common series prefactor.
    fn series_scale(&self) -> f64 {
        self.a * self.b.powi(self.n as i32) * to_f64(&ExactRational::from_integer(factorial(self.n)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `b^p < a`: powers of `-b^p/a` from `k = 0`.
    Ascending,
    /// `b^p > a`: powers of `-a/b^p` from `k = 1`.
    Descending,
    /// `b^p = a`: rational closed form.
    Boundary,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Ascending => "ascending",
            Branch::Descending => "descending",
            Branch::Boundary => "boundary",
        }
    }
}

pub fn cf_quadrature(params: &CFParams, tol: f64) -> Result<QuadResult> {
    params.require_positive_a()?;
    let CFParams { a, b, p, n } = *params;
    let (s, c) = (PI * p).sin_cos();
    let pref = s / PI;
    let f = move |t: f64| {
        let tp = t.powf(p);
        pref * tp / ((a * a + 2.0 * a * c * tp + tp * tp) * (b + t).powi(n as i32 + 1))
    };
    let g = HalflineIntegrand::new(f, p, n as f64 + 1.0 + p)?;
    integrate_halfline(&g, tol)
}

/// `1/((a+b^p) n! b^n) sum_{k=0}^n (1+a/b^p)^(-k) sum_{m=0}^k (-1)^m binom(k,m) (-pm)_n`,
/// with `b^p` supplied so that fully rational inputs stay rational.
pub fn cf_double_sum_exact(
    a: &ExactRational,
    b: &ExactRational,
    p: &ExactRational,
    b_pow_p: &ExactRational,
    n: u32,
) -> Result<ExactRational> {
    if b_pow_p <= &ExactRational::zero() || b <= &ExactRational::zero() {
        return domain("b and b^p must be positive");
    }
    let apb = a + b_pow_p;
    let r = b_pow_p / &apb;
    let mut sum = ExactRational::zero();
    let mut rk = ExactRational::one();
    for k in 0..=n as i64 {
        let inner = (0..=k).fold(ExactRational::zero(), |acc, m| {
            let term = ExactRational::from_integer(binomial(k, m)) * rising_factorial(&(-p * ExactRational::from_integer(m.into())), n);
            if m % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        sum += &rk * inner;
        rk *= &r;
    }
    let bn = (0..n).fold(ExactRational::one(), |acc, _| acc * b);
    Ok(sum / (apb * ExactRational::from_integer(factorial(n)) * bn))
}

/// Finite double sum: every input converted exactly, one rounding at the end.
pub fn cf_double_sum(params: &CFParams) -> f64 {
    let e = |x: f64| to_exact(x).expect("finite");
    let v = cf_double_sum_exact(&e(params.a), &e(params.b), &e(params.p), &e(params.b_pow_p()), params.n)
        .expect("validated parameters");
    to_f64(&v)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CFSeries {
    pub value: f64,
    pub branch: Branch,
    pub terms: usize,
}

fn select_branch(params: &CFParams) -> Result<(Branch, f64)> {
    params.require_positive_a()?;
    let y = params.ratio();
    if (y - 1.0).abs() <= BOUNDARY_TOL {
        return domain(format!("b^p/a = {y} is on the branch boundary; use the closed form"));
    }
    Ok(if y < 1.0 {
        (Branch::Ascending, y)
    } else {
        (Branch::Descending, 1.0 / y)
    })
}

/// Branch-selected power series with the `n!` prefactor:
/// `(1/(a b^n n!)) sum_{k>=0} (-pk)_n (-y)^k` for `y < 1`, and
/// `-(1/(a b^n n!)) sum_{k>=1} (pk)_n (-1/y)^k` for `y > 1`.
pub fn cf_series(params: &CFParams, tol: f64, max_terms: usize) -> Result<CFSeries> {
    let (branch, x) = select_branch(params)?;
    let (sum, sign) = match branch {
        Branch::Ascending => (sum_pochhammer_series(params.n, -params.p, x, 0, tol, max_terms)?, 1.0),
        _ => (sum_pochhammer_series(params.n, params.p, x, 1, tol, max_terms)?, -1.0),
    };
    Ok(CFSeries {
        value: sign * sum.value / params.series_scale(),
        branch,
        terms: sum.terms,
    })
}

/// The same series exactly as tabulated: `(n+1)` in place of `n!` and the
/// descending sum from `k = 0`. Kept for the errata report.
pub fn cf_series_printed(params: &CFParams, tol: f64, max_terms: usize) -> Result<CFSeries> {
    let (branch, x) = select_branch(params)?;
    let (sum, sign) = match branch {
        Branch::Ascending => (sum_pochhammer_series(params.n, -params.p, x, 0, tol, max_terms)?, 1.0),
        _ => (sum_pochhammer_series(params.n, params.p, x, 0, tol, max_terms)?, -1.0),
    };
    let scale = params.a * params.b.powi(params.n as i32) * (params.n as f64 + 1.0);
    Ok(CFSeries {
        value: sign * sum.value / scale,
        branch,
        terms: sum.terms,
    })
}

/// `Q(n, b^p/a, p) / (a b^n n!)` with exact inputs.
///
/// Both sides are analytic in `a > 0` and Q's closed form is rational in `y`
/// with its only pole at `y = -1`, so this holds on both branches.
pub fn cf_via_q_exact(
    a: &ExactRational,
    b: &ExactRational,
    p: &ExactRational,
    b_pow_p: &ExactRational,
    n: u32,
) -> Result<ExactRational> {
    if a <= &ExactRational::zero() {
        return domain("closed form divides by a; needs a > 0");
    }
    let y = b_pow_p / a;
    let q = q_stirling_exact(n, &y, p)?;
    let bn = (0..n).fold(ExactRational::one(), |acc, _| acc * b);
    Ok(q / (a * bn * ExactRational::from_integer(factorial(n))))
}

/// [`cf_via_q_exact`] on the exact values of the floats, `b^p` rounded once.
pub fn cf_via_q(params: &CFParams) -> Result<f64> {
    params.require_positive_a()?;
    let bp = params.b_pow_p();
    // snap a last-ulp miss of the boundary so the limit form is used
    let bp = if (bp - params.a).abs() <= BOUNDARY_TOL * params.a { params.a } else { bp };
    let e = |x: f64| to_exact(x).expect("finite");
    cf_via_q_exact(&e(params.a), &e(params.b), &e(params.p), &e(bp), params.n).map(|v| to_f64(&v))
}

/// `c_n(b^p, b; p) = Q(n, 1, p) / (b^(n+p) n!)`.
pub fn cf_limit_equal(b: f64, p: f64, n: u32) -> Result<f64> {
    let bp = b.powf(p);
    cf_via_q(&CFParams::new(bp, b, p, n)?)
}

/// `|c_n(a,b;1/2) - C_n(a,b)| <= tol |C_n(a,b)|`, comparing the functional's
/// double sum with the double-factorial sum for the Catalan number.
pub fn cf_half_reduction_check(a: f64, b: f64, n: u32, tol: f64) -> Result<bool> {
    let functional = cf_double_sum(&CFParams::new(a, b, 0.5, n)?);
    let catalan = c2_double_factorial_sum(&C2Params::new(a, b, n)?);
    Ok(rel_diff(functional, catalan) <= tol)
}
