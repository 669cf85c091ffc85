//! The series `Q(n, y, p) = sum_{k>=0} (-p k)_n (-y)^k` in all of its forms.
//!
//! Symbolic forms are polynomials in `t = 1/(1+y)` whose coefficients are
//! polynomials in `p` ([`QForm`]). Every closed form of `Q` lands in that
//! ring, which makes exact comparison of representations a structural `==`.

mod printed;
mod proofs;

pub use printed::{printed_q_row, printed_zform_row};
pub use proofs::{boyadzhiev_check, polynomial_series_closed, pochhammer_derivative_check, q_derivative_form_check};

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{
    factorial, polylog_neg, rising_factorial, stirling_first_row, stirling_second_row, to_exact, to_f64, Ring,
    ExactRational, Polynomial, RationalFunction,
};
use crate::hyper::{pfq_series, HypTermination};

/// Polynomial in `p` with rational coefficients.
pub type PPoly = Polynomial<ExactRational>;
/// Polynomial in `t = 1/(1+y)` (or in `z = 1+y` for the z-forms) over `Q[p]`.
pub type QForm = Polynomial<PPoly>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParams {
    pub n: u32,
    pub y: f64,
    pub p: f64,
}

impl QParams {
    pub fn new(n: u32, y: f64, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&y) {
            return domain(format!("y = {y} must lie in [0, 1]"));
        }
        if !(p > 0.0 && p < 1.0) {
            return domain(format!("p = {p} must lie in (0, 1)"));
        }
        Ok(QParams { n, y, p })
    }

    fn exact(&self) -> (ExactRational, ExactRational) {
        (to_exact(self.y).expect("finite"), to_exact(self.p).expect("finite"))
    }
}

fn signed(v: &num_bigint::BigInt) -> ExactRational {
    ExactRational::from_integer(v.clone())
}

fn pow(q: &ExactRational, e: u32) -> ExactRational {
    (0..e).fold(ExactRational::one(), |acc, _| acc * q)
}

/// `(-1)^(n+1) (y/(y+1)) sum_{k=1}^n s(n,k) (-p)^k sum_{m=1}^k S(k,m) m! (-1/(y+1))^m`,
/// and `1/(1+y)` at `n = 0`. Valid for every `y > -1`, including `y = 1`.
pub fn q_stirling_exact(n: u32, y: &ExactRational, p: &ExactRational) -> Result<ExactRational> {
    let one = ExactRational::one();
    let y1 = y + &one;
    if y1.is_zero() {
        return domain("Stirling form needs y > -1");
    }
    if n == 0 {
        return Ok(y1.recip());
    }
    let s = stirling_first_row(n as usize);
    let u = -y1.recip();
    let inner_sum: ExactRational = (1..=n as usize)
        .map(|k| {
            let big_s = stirling_second_row(k);
            let omega: ExactRational = (1..=k)
                .map(|m| signed(&big_s[m]) * ExactRational::from_integer(factorial(m as u32)) * pow(&u, m as u32))
                .fold(ExactRational::zero(), |a, b| a + b);
            signed(&s[k]) * pow(&-p.clone(), k as u32) * omega
        })
        .fold(ExactRational::zero(), |a, b| a + b);
    let sign = if n % 2 == 1 { one.clone() } else { -one };
    Ok(sign * (y / y1) * inner_sum)
}

pub fn q_stirling(q: &QParams) -> f64 {
    let (y, p) = q.exact();
    to_f64(&q_stirling_exact(q.n, &y, &p).expect("y >= 0"))
}

/// `(-1)^n sum_{k=0}^n s(n,k) Li_{-k}(-y) p^k`, `n >= 1`.
pub fn q_polylog_exact(n: u32, y: &ExactRational, p: &ExactRational) -> Result<ExactRational> {
    if n == 0 {
        return domain("polylogarithm form needs n >= 1");
    }
    let s = stirling_first_row(n as usize);
    let x = -y.clone();
    let mut sum = ExactRational::zero();
    for (k, sk) in s.iter().enumerate() {
        if sk.is_zero() {
            continue;
        }
        let li = polylog_neg(k as u32)
            .eval(&x)
            .ok_or_else(|| Error::Domain("Li_{-k} has a pole at x = 1".into()))?;
        sum += signed(sk) * li * pow(p, k as u32);
    }
    Ok(if n % 2 == 0 { sum } else { -sum })
}

pub fn q_polylog(q: &QParams) -> Result<f64> {
    let (y, p) = q.exact();
    q_polylog_exact(q.n, &y, &p).map(|v| to_f64(&v))
}

/// Result of a truncated infinite sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    pub terms: usize,
    /// Rigorous bound on the neglected tail.
    pub tail_bound: f64,
}

/// Direct summation of the defining series, `0 <= y < 1`.
///
/// `|(-pk)_n| <= prod_i (pk + i)`, and the bound's term ratio decreases in
/// `k`, so once it drops below one the tail is bounded by a geometric series.
pub fn q_series(q: &QParams, tol: f64, max_terms: usize) -> Result<SeriesSum> {
    if q.y >= 1.0 {
        return Err(Error::Divergent(format!("defining series of Q diverges at y = {}", q.y)));
    }
    sum_pochhammer_series(q.n, -q.p, q.y, 0, tol, max_terms)
}

/// `sum_{k>=start} (c k)_n (-x)^k` with `0 <= x < 1`, where `c = -p` or `c = p`.
///
/// The alternating terms cancel heavily as `x -> 1` (the absolute series can
/// exceed the sum by a factor of 1e8), so terms are accumulated in binary
/// fixed point with enough guard bits that only the final rounding and the
/// geometric tail bound contribute error.
pub(crate) fn sum_pochhammer_series(n: u32, c: f64, x: f64, start: usize, tol: f64, max_terms: usize) -> Result<SeriesSum> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Divergent(format!("ratio {x} outside [0, 1)")));
    }
    let bound = |k: usize| -> f64 {
        let kp = c.abs() * k as f64;
        (0..n).map(|i| kp + i as f64).product::<f64>() * x.powi(k as i32)
    };
    if x == 0.0 {
        let value = if start == 0 { rising_factorial(&0.0, n) } else { 0.0 };
        return Ok(SeriesSum {
            value,
            terms: 1,
            tail_bound: 0.0,
        });
    }
    let xq = to_exact(x).expect("finite");
    let cq = to_exact(c).expect("finite");
    let (xn, xd) = (xq.numer().clone(), xq.denom().clone());
    let (cn, cd) = (cq.numer().clone(), cq.denom().clone());
    let cd_n = num_traits::pow(cd.clone(), n as usize);
    // guard bits: 128 for cancellation, plus the scale of x^start and |sum| ~ x
    let scale_bits = 192 + ((-x.log2()).max(0.0).ceil() as usize) * (start + 1) + 64;
    let mut xk = num_bigint::BigInt::one() << scale_bits;
    for _ in 0..start {
        xk = xk * &xn / &xd;
    }
    let mut sum = num_bigint::BigInt::zero();
    for k in start..start + max_terms {
        let kk = num_bigint::BigInt::from(k);
        let poch = (0..n).fold(num_bigint::BigInt::one(), |acc, i| {
            acc * (&cn * &kk + num_bigint::BigInt::from(i) * &cd)
        });
        let term = &xk * poch / &cd_n;
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        xk = xk * &xn / &xd;
        let next = bound(k + 1);
        let rho = bound(k + 2) / next;
        if rho < 1.0 {
            let tail = next / (1.0 - rho);
            let approx = fixed_to_f64(&sum, scale_bits);
            if tail <= tol * approx.abs() || tail <= crate::quad::ABS_FLOOR {
                let exact = ExactRational::new(sum, num_bigint::BigInt::one() << scale_bits);
                return Ok(SeriesSum {
                    value: to_f64(&exact),
                    terms: k - start + 1,
                    tail_bound: tail,
                });
            }
        }
    }
    Err(Error::MaxTerms { max_terms })
}

/// `v / 2^bits`, to a few ulps; only used for stopping decisions.
fn fixed_to_f64(v: &num_bigint::BigInt, bits: usize) -> f64 {
    let len = v.bits() as usize;
    let drop = len.saturating_sub(64);
    let top = num_traits::ToPrimitive::to_f64(&(v >> drop)).unwrap_or(0.0);
    top * 2f64.powi(drop as i32 - bits as i32)
}

fn ppoly_const(q: ExactRational) -> PPoly {
    PPoly::constant(q)
}

fn p_var() -> PPoly {
    PPoly::x()
}

/// Stirling form as a [`QForm`] in `t = 1/(1+y)`.
pub fn q_form_stirling(n: u32) -> QForm {
    let t = QForm::x();
    if n == 0 {
        return t;
    }
    let one_minus_t = QForm::one() - t.clone();
    let minus_t = -t;
    let s = stirling_first_row(n as usize);
    let minus_p = -p_var();
    let mut sum = QForm::zero();
    for (k, sk) in s.iter().enumerate().skip(1) {
        let big_s = stirling_second_row(k);
        let omega = (1..=k).fold(QForm::zero(), |acc, m| {
            let c = signed(&big_s[m]) * ExactRational::from_integer(factorial(m as u32));
            acc + minus_t.pow(m as u32).scale(&ppoly_const(c))
        });
        sum = sum + omega.scale(&(ppoly_const(signed(sk)) * minus_p.pow(k as u32)));
    }
    let form = one_minus_t * sum;
    if n % 2 == 1 {
        form
    } else {
        -form
    }
}

/// `r(-y)` written as a polynomial in `t = 1/(1+y)`, when it is one.
fn at_minus_y_in_t(r: &RationalFunction) -> Option<Polynomial<ExactRational>> {
    // -y = (t - 1)/t; homogenise numerator and denominator in t
    let t_minus_1 = Polynomial::<ExactRational>::from_i64s(&[-1, 1]);
    let homogenise = |p: &Polynomial<ExactRational>| {
        let d = p.degree().unwrap_or(0);
        let poly = p.coeffs().iter().enumerate().fold(Polynomial::zero(), |acc, (i, c)| {
            acc + (t_minus_1.pow(i as u32) * Polynomial::monomial(c.clone(), d - i))
        });
        (poly, d)
    };
    let (num, dn) = homogenise(r.numerator());
    let (den, dd) = homogenise(r.denominator());
    if dd < dn {
        return None;
    }
    let (q, rem) = num.shift(dd - dn).div_rem(&den);
    rem.is_zero().then_some(q)
}

/// Polylogarithm form as a [`QForm`], `n >= 1`.
pub fn q_form_polylog(n: u32) -> Result<QForm> {
    if n == 0 {
        return domain("polylogarithm form needs n >= 1");
    }
    let s = stirling_first_row(n as usize);
    let mut sum = QForm::zero();
    for (k, sk) in s.iter().enumerate() {
        if sk.is_zero() {
            continue;
        }
        let li = at_minus_y_in_t(&polylog_neg(k as u32))
            .ok_or_else(|| Error::Domain(format!("Li_{{-{k}}}(-y) is not polynomial in 1/(1+y)")))?;
        let lifted = QForm::new(li.coeffs().iter().cloned().map(ppoly_const).collect());
        sum = sum + lifted.scale(&(ppoly_const(signed(sk)) * p_var().pow(k as u32)));
    }
    Ok(if n % 2 == 0 { sum } else { -sum })
}

/// `Q(0), ..., Q(n_max)` generated by `Q(n+1) = -p y dQ(n)/dy + n Q(n)` from `Q(0) = 1/(1+y)`.
///
/// With `t = 1/(1+y)`, `dt/dy = -t^2` so `-p y d/dy = p t (1-t) d/dt`.
pub fn q_forms_recurrence(n_max: u32) -> Vec<QForm> {
    let t = QForm::x();
    let op = (QForm::one() - t.clone()) * t.clone();
    let p = QForm::constant(p_var());
    let mut forms = vec![t];
    for n in 0..n_max {
        let q = forms.last().expect("nonempty").clone();
        let next = p.clone() * op.clone() * q.derivative() + q.scale(&PPoly::from_i64(n as i64));
        forms.push(next);
    }
    forms
}

/// Exact evaluation of a [`QForm`] at rational `(y, p)`.
pub fn eval_form(form: &QForm, y: &ExactRational, p: &ExactRational) -> ExactRational {
    let t = (y + ExactRational::one()).recip();
    let scalar = Polynomial::new(form.coeffs().iter().map(|c| c.eval(p)).collect());
    scalar.eval(&t)
}

/// `Q(n) [p (z-1) / z^(n+1)]^(-1)` as a polynomial in `z = 1+y` over `Q[p]`, `n >= 1`.
pub fn q_zform(form: &QForm, n: u32) -> Option<QForm> {
    let deg = form.degree()?;
    if deg > n as usize + 1 || n == 0 {
        return None;
    }
    // t^j -> z^(n+1-j)
    let mut coeffs = vec![PPoly::zero(); n as usize + 2];
    for (j, c) in form.coeffs().iter().enumerate() {
        coeffs[n as usize + 1 - j] = c.clone();
    }
    let in_z = QForm::new(coeffs).div_x_minus_one()?;
    // divide every coefficient by p
    let divided: Option<Vec<PPoly>> = in_z
        .coeffs()
        .iter()
        .map(|c| {
            if !c.coeff(0).is_zero() {
                return None;
            }
            Some(PPoly::new(c.coeffs().iter().skip(1).cloned().collect()))
        })
        .collect();
    Some(QForm::new(divided?))
}

/// Verifies the differential-difference equation between `Q(n)` and `Q(n+1)`
/// at the rational `p` as an identity of rational functions in `y`, then at `y`.
pub fn q_recurrence_check(n: u32, y: &ExactRational, p: &ExactRational) -> bool {
    let as_function = |n: u32| -> RationalFunction {
        // Q(n) = sum_j c_j(p) / (1+y)^j
        let form = q_form_stirling(n);
        form.coeffs().iter().enumerate().fold(RationalFunction::from_poly(Polynomial::zero()), |acc, (j, c)| {
            let den = Polynomial::<ExactRational>::from_i64s(&[1, 1]).pow(j as u32);
            acc + RationalFunction::new(Polynomial::constant(c.eval(p)), den).expect("nonzero")
        })
    };
    let q_n = as_function(n);
    let q_next = as_function(n + 1);
    let minus_py = RationalFunction::from_poly(Polynomial::monomial(-p.clone(), 1));
    let nq = RationalFunction::from_poly(Polynomial::constant(ExactRational::from_integer(n.into())));
    let rhs = minus_py * q_n.derivative() + nq * q_n;
    rhs == q_next && rhs.eval(y) == q_next.eval(y)
}

/// The generalized hypergeometric form exactly as printed,
/// `(-1)^(n-1) p Gamma(n) / y^(2n) nF_{n-1}(1-(n-1)/p, ..., 1-1/p, 2; -(n-1)/p, ..., -1/p; -y)`.
///
/// When some `m/p` is an integer the series terminates before meeting the
/// zero lower parameter and is summed to that point.
pub fn q_hyp(q: &QParams, tol: f64, max_terms: usize) -> Result<f64> {
    let (upper, lower) = hyp_params(q, IntegralRatio::Terminate, |r| 1.0 - r, |r| -r)?;
    let f = pfq_series(&upper, &lower, -q.y, HypTermination::Convergent { tol, max_terms })?;
    let n = q.n as f64;
    let sign = if q.n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * q.p * libm::tgamma(n) / q.y.powi(2 * q.n as i32) * f)
}

/// A re-derived hypergeometric form that does equal `Q`:
/// `(-1)^(n+1) p^n y prod_{m=1}^{n-1}(1 - m/p) nF_{n-1}(2, 2-m/p; 1-m/p; -y)`.
pub fn q_hyp_rederived(q: &QParams, tol: f64, max_terms: usize) -> Result<f64> {
    let (upper, lower) = hyp_params(q, IntegralRatio::Reject, |r| 2.0 - r, |r| 1.0 - r)?;
    let f = pfq_series(&upper, &lower, -q.y, HypTermination::Convergent { tol, max_terms })?;
    let prod: f64 = (1..q.n).map(|m| 1.0 - m as f64 / q.p).product();
    let sign = if q.n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * q.p.powi(q.n as i32) * q.y * prod * f)
}

/// How to treat an integral `m/p`, where upper and lower parameters meet.
#[derive(Clone, Copy, PartialEq, Eq)]
enum IntegralRatio {
    /// Snap to the integer so the series terminates before the pole, as printed.
    Terminate,
    /// The form is 0/0 there; refuse.
    Reject,
}

fn hyp_params(
    q: &QParams,
    integral: IntegralRatio,
    upper: impl Fn(f64) -> f64,
    lower: impl Fn(f64) -> f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if q.n == 0 {
        return domain("hypergeometric form needs n >= 1");
    }
    if !(q.y > 0.0 && q.y < 1.0) {
        return domain("hypergeometric form needs 0 < y < 1");
    }
    let mut ratios = Vec::new();
    for m in (1..q.n).rev() {
        let r = m as f64 / q.p;
        let nearest = r.round();
        if (r - nearest).abs() <= 1e-12 * r {
            if integral == IntegralRatio::Reject {
                return Err(Error::ParameterPole(format!(
                    "{m}/p = {r} is an integer: parameter ratios degenerate to 0/0"
                )));
            }
            ratios.push(nearest);
        } else {
            ratios.push(r);
        }
    }
    let mut up: Vec<f64> = ratios.iter().map(|&r| upper(r)).collect();
    up.push(2.0);
    let lo: Vec<f64> = ratios.iter().map(|&r| lower(r)).collect();
    Ok((up, lo))
}

/// Printed hypergeometric form against the exact Stirling value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypComparison {
    pub printed: f64,
    pub rederived: f64,
    pub reference: f64,
    /// `printed / reference`.
    pub ratio: f64,
}

pub fn q_hyp_comparison(q: &QParams) -> Result<HypComparison> {
    let (tol, max_terms) = (1e-16, 200_000);
    let printed = q_hyp(q, tol, max_terms)?;
    let rederived = q_hyp_rederived(q, tol, max_terms)?;
    let reference = q_stirling(q);
    Ok(HypComparison {
        printed,
        rederived,
        reference,
        ratio: printed / reference,
    })
}

/// Human-readable form of a [`QForm`]: `c_j(p) * var^j` terms, highest first.
pub fn display_form(form: &QForm, var: &str) -> String {
    let mut parts = Vec::new();
    for (j, c) in form.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let coef = c.display("p");
        parts.push(match j {
            0 => format!("({coef})"),
            1 => format!("({coef}){var}"),
            _ => format!("({coef}){var}^{j}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests;
