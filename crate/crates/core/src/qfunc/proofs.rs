//! Executable checks of the derivations behind the closed forms of `Q`.

use num_traits::{One, Zero};

use super::{q_series, PPoly, QForm, QParams};
use crate::error::{domain, Result};
use crate::exact::{
    factorial, geometric_polynomial, polylog_neg, rising_factorial, stirling_first, ExactRational, Polynomial,
};
use crate::hyper::rel_diff;

/// Formal-derivative justification of the defining series.
///
/// Writes `w = -y` and differentiates `w^(pk)` `n` times in `y` symbolically,
/// checks that multiplying by `w^(-pk+k+n)` leaves `(-pk)_n w^k` term by term
/// (up to the `(-1)^n` from `d/dy = -d/dw`), then compares the partial sum with
/// a direct truncation and, when the neglected tail is negligible, with
/// [`q_series`].
pub fn q_derivative_form_check(n: u32, k_max: usize, y: f64, p: f64) -> bool {
    let Ok(params) = QParams::new(n, y, p) else {
        return false;
    };
    let mut via_derivative = 0.0;
    let mut truncated = 0.0;
    for k in 0..=k_max {
        let mut coef = 1.0;
        let mut exponent = p * k as f64;
        for _ in 0..n {
            coef *= exponent;
            exponent -= 1.0;
        }
        let final_exponent = exponent + (-p * k as f64 + k as f64 + n as f64);
        if (final_exponent - k as f64).abs() > 1e-12 * (1.0 + k as f64) {
            return false;
        }
        let pochhammer = rising_factorial(&(-p * k as f64), n);
        // d^n/dy^n = (-1)^n d^n/dw^n
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        if rel_diff(sign * coef, pochhammer) > 1e-12 && (sign * coef - pochhammer).abs() > 1e-300 {
            return false;
        }
        let wk = (-y).powi(k as i32);
        via_derivative += sign * coef * wk;
        truncated += pochhammer * wk;
    }
    if rel_diff(via_derivative, truncated) > 1e-12 {
        return false;
    }
    if y < 1.0 {
        if let Ok(full) = q_series(&params, 1e-15, 1_000_000) {
            let tail = tail_bound_after(n, p, y, k_max);
            if tail <= 1e-13 * full.value.abs() {
                return rel_diff(via_derivative, full.value) <= 1e-11;
            }
        }
    }
    true
}

fn tail_bound_after(n: u32, p: f64, y: f64, k_max: usize) -> f64 {
    let b = |k: usize| (0..n).map(|i| p * k as f64 + i as f64).product::<f64>() * y.powi(k as i32);
    let next = b(k_max + 1);
    let rho = b(k_max + 2) / next;
    if rho < 1.0 {
        next / (1.0 - rho)
    } else {
        f64::INFINITY
    }
}

/// `sum_{k>=0} f(k) y^k` in closed form: `f_0/(1-y) + sum_{j>=1} f_j Li_{-j}(y)`, `|y| < 1`.
pub fn polynomial_series_closed(f: &Polynomial<ExactRational>, y: &ExactRational) -> Result<ExactRational> {
    let one = ExactRational::one();
    if y.clone() * y.clone() >= one {
        return domain("needs |y| < 1");
    }
    let inv = (one - y).recip();
    let mut sum = ExactRational::zero();
    for (j, fj) in f.coeffs().iter().enumerate() {
        let li = if j == 0 {
            inv.clone()
        } else {
            polylog_neg(j as u32).eval(y).expect("y != 1")
        };
        sum += fj * li;
    }
    Ok(sum)
}

/// Verifies, for a polynomial `f` and rational `|y| < 1`,
/// `sum_k f(k) y^k = f_0/(1-y) + sum_{j>=1} f_j Li_{-j}(y)
///                 = (1/(1-y)) sum_j f_j w_j(y/(1-y))`
/// exactly, with `w_j` the geometric polynomials, plus a float partial sum.
pub fn boyadzhiev_check(f: &Polynomial<ExactRational>, y: &ExactRational) -> Result<bool> {
    let via_polylog = polynomial_series_closed(f, y)?;
    let one = ExactRational::one();
    let inv = (one - y).recip();
    let mut via_geometric = ExactRational::zero();
    for (j, fj) in f.coeffs().iter().enumerate() {
        via_geometric += fj * geometric_polynomial(j).eval(&(y * &inv));
    }
    via_geometric *= inv;
    if via_polylog != via_geometric {
        return Ok(false);
    }
    let fy = crate::exact::to_f64(y);
    let mut partial = 0.0;
    let mut k = 0usize;
    loop {
        let term = f.eval_f64(k as f64) * fy.powi(k as i32);
        partial += term;
        k += 1;
        if k > 20 && term.abs() <= 1e-18 * partial.abs().max(1e-300) || k > 100_000 {
            break;
        }
    }
    let target = crate::exact::to_f64(&via_polylog);
    Ok(rel_diff(partial, target) <= 1e-10 || (partial - target).abs() <= 1e-12)
}

/// `d^k/dy^k (-p y)_n` at `y = 0` equals `(-1)^n k! s(n,k) p^k`, computed in
/// `Q[p][y]`.
pub fn pochhammer_derivative_check(n: u32, k: u32) -> bool {
    let minus_py = QForm::monomial(-PPoly::x(), 1);
    let poch = rising_factorial(&minus_py, n);
    let mut d = poch;
    for _ in 0..k {
        d = d.derivative();
    }
    let at_zero = d.coeff(0);
    let s = stirling_first(n as usize, k as usize);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let expected = PPoly::monomial(
        ExactRational::from_integer(s * factorial(k) * sign),
        k as usize,
    );
    at_zero == expected
}
